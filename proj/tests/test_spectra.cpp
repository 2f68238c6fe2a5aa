#include <catch2/catch_amalgamated.hpp>

#include "reidlab/counterexamples.hpp"
#include "reidlab/generators.hpp"
#include "reidlab/spectra.hpp"

using namespace reidlab;
using Catch::Approx;

TEST_CASE("hermitian eigensolver on diagonal and 2x2 matrices") {
    ComplexMatrix d = ComplexMatrix::from_rows({{{9, 0}, {0, 0}}, {{0, 0}, {4, 0}}});
    HermitianEigen e = eig_hermitian(d);
    CHECK(e.values[0] == Approx(4.0));
    CHECK(e.values[1] == Approx(9.0));

    ComplexMatrix flip = ComplexMatrix::from_rows({{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}});
    e = eig_hermitian(flip);
    CHECK(e.values[0] == Approx(-1.0));
    CHECK(e.values[1] == Approx(1.0));

    // [[2, i], [-i, 2]] has eigenvalues 2 -+ 1
    ComplexMatrix c = ComplexMatrix::from_rows({{{2, 0}, {0, 1}}, {{0, -1}, {2, 0}}});
    e = eig_hermitian(c);
    CHECK(e.values[0] == Approx(1.0));
    CHECK(e.values[1] == Approx(3.0));
}

TEST_CASE("eigensolver reconstructs the input with a unitary eigenbasis") {
    SeededSource src(201, 0);
    for (std::size_t dim : {2, 3, 5, 8, 12}) {
        ComplexMatrix h = gen_self_adjoint(dim, src);
        HermitianEigen e = eig_hermitian(h);
        REQUIRE(e.values.size() == dim);
        for (std::size_t i = 0; i + 1 < dim; ++i) CHECK(e.values[i] <= e.values[i + 1]);

        ComplexMatrix reconstructed =
            assemble_from_eigen(e, [](double lambda) { return lambda; });
        CHECK(frobenius_norm(reconstructed - h) < 1e-10 * std::max(1.0, frobenius_norm(h)));

        ComplexMatrix gram = adjoint(e.vectors) * e.vectors;
        CHECK(frobenius_norm(gram - ComplexMatrix::identity(dim)) < 1e-12);
    }
}

TEST_CASE("eigensolver rejects a non-self-adjoint input") {
    ComplexMatrix m = ComplexMatrix::from_rows({{{0, 0}, {1, 0}}, {{0, 0}, {0, 0}}});
    CHECK_THROWS_AS(eig_hermitian(m), HypothesisError);
}

TEST_CASE("operator norm handles non-normal matrices") {
    CHECK(operator_norm(ComplexMatrix::from_rows({{{3, 0}, {0, 0}}, {{0, 0}, {-4, 0}}})) ==
          Approx(4.0));
    CHECK(operator_norm(ComplexMatrix::from_rows({{{0, 0}, {2, 0}}, {{0, 0}, {0, 0}}})) ==
          Approx(2.0));
    CHECK(operator_norm(truncated_shift(5)) == Approx(1.0));
}

TEST_CASE("operator norm dominates the scaled action on vectors") {
    SeededSource src(202, 0);
    for (int t = 0; t < 20; ++t) {
        ComplexMatrix m = gen_matrix(4, src);
        double norm = operator_norm(m);
        Vector x = gen_unit_vector(4, src);
        CHECK(vector_norm(matvec(m, x)) <= norm * (1.0 + 1e-12));
    }
}

TEST_CASE("gelfand radius of a nilpotent matrix collapses to exactly zero") {
    ComplexMatrix nil = ComplexMatrix::from_rows({{{0, 0}, {5, 0}}, {{0, 0}, {0, 0}}});
    GelfandTrace trace = spectral_radius_gelfand(nil);
    CHECK(trace.radius == 0.0);
    CHECK(trace.converged);
}

TEST_CASE("gelfand radius of a normal matrix equals its largest eigenvalue modulus") {
    SeededSource src(203, 0);
    for (std::size_t dim : {2, 4, 6}) {
        ComplexMatrix n = gen_normal(dim, src);
        GelfandTrace trace = spectral_radius_gelfand(n);
        // for normal K every iterate ||K^(2^k)||^(1/2^k) already equals r(K)
        CHECK(trace.converged);
        CHECK(trace.radius == Approx(trace.iterates.front()).epsilon(1e-7));
        CHECK(trace.radius == Approx(operator_norm(n)).epsilon(1e-7));
    }
}

TEST_CASE("gelfand iterates are non-increasing and bounded by the operator norm") {
    SeededSource src(204, 0);
    for (int t = 0; t < 50; ++t) {
        ComplexMatrix k = gen_matrix(2 + t % 5, src);
        GelfandTrace trace = spectral_radius_gelfand(k);
        REQUIRE(!trace.iterates.empty());
        CHECK(trace.iterates.front() == Approx(operator_norm(k)));
        for (std::size_t i = 0; i + 1 < trace.iterates.size(); ++i)
            CHECK(trace.iterates[i + 1] <= trace.iterates[i] * (1.0 + 1e-12));
        CHECK(trace.radius <= operator_norm(k) * (1.0 + 1e-12));
    }
}

TEST_CASE("gelfand radius of a triangular matrix matches its diagonal") {
    ComplexMatrix t = ComplexMatrix::from_rows({{{0.5, 0}, {10, 0}}, {{0, 0}, {0.25, 0}}});
    GelfandTrace trace = spectral_radius_gelfand(t);
    CHECK(trace.converged);
    CHECK(trace.radius == Approx(0.5).margin(1e-4));
}

TEST_CASE("gelfand radius scales linearly with the matrix") {
    SeededSource src(205, 0);
    ComplexMatrix k = gen_matrix(4, src);
    double r = spectral_radius_gelfand(k).radius;
    double r3 = spectral_radius_gelfand(ComplexMatrix(3.0 * k)).radius;
    CHECK(r3 == Approx(3.0 * r).epsilon(1e-6));
}

TEST_CASE("hermitian pseudoinverse inverts on the range and kills the kernel") {
    ComplexMatrix d = ComplexMatrix::from_rows({{{2, 0}, {0, 0}}, {{0, 0}, {0, 0}}});
    ComplexMatrix p = pinv_hermitian(d);
    CHECK(std::abs(p(0, 0) - Complex(0.5, 0)) < 1e-12);
    CHECK(std::abs(p(1, 1)) == 0.0);

    SeededSource src(206, 0);
    ComplexMatrix a = gen_psd(5, src);
    ComplexMatrix ap = pinv_hermitian(a);
    CHECK(frobenius_norm(a * ap * a - a) < 1e-9 * std::max(1.0, frobenius_norm(a)));
    CHECK(frobenius_norm(ap * a * ap - ap) < 1e-9 * std::max(1.0, frobenius_norm(ap)));
}
