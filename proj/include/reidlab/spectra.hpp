#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "complex_matrix.hpp"
#include "tolerance.hpp"

namespace reidlab {

/// Eigensystem of a Hermitian matrix: real eigenvalues in ascending order,
/// columns of `vectors` the matching orthonormal eigenvectors.
struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;
};

namespace detail {

inline double offdiag_frobenius(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

} // namespace detail

/// Cyclic Jacobi eigensolver for Hermitian matrices (complex rotations).
///
/// Each rotation first phases the (p,q) pivot to a nonnegative real, then
/// applies the classical symmetric Schur rotation, so the accumulated
/// eigenvector matrix is unitary by construction. Sweeps stop when the
/// off-diagonal Frobenius mass drops below jacobi_tol * ||M||_F.
inline HermitianEigen eig_hermitian(const ComplexMatrix& m, const ToleranceProfile& profile = {}) {
    profile.validate();
    std::size_t n = m.dim();
    double scale = frobenius_norm(m);
    {
        double defect = frobenius_norm(m - adjoint(m));
        if (defect > profile.predicate_tol * std::max(1.0, scale))
            throw HypothesisError("eig_hermitian: input is not self-adjoint within tolerance");
    }

    ComplexMatrix a = hermitize(m);
    ComplexMatrix v = ComplexMatrix::identity(n);
    double threshold = profile.jacobi_tol * std::max(scale, 1e-300);

    int sweep = 0;
    while (n > 1 && detail::offdiag_frobenius(a) > threshold) {
        if (++sweep > profile.jacobi_max_sweeps)
            throw NumericalError("eig_hermitian: Jacobi sweeps did not converge");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                Complex h = a(p, q);
                double habs = std::abs(h);
                if (habs == 0.0) continue;
                Complex phase = h / habs; // e^{i phi}
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double tau = (aqq - app) / (2.0 * habs);
                double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                        : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;

                // U differs from the identity only in the (p,q) block:
                //   U(p,p) = c          U(p,q) = s
                //   U(q,p) = -s e^{-i phi}   U(q,q) = c e^{-i phi}
                Complex upq{s, 0.0};
                Complex uqp = -s * std::conj(phase);
                Complex uqq = c * std::conj(phase);

                // columns: A <- A U
                for (std::size_t k = 0; k < n; ++k) {
                    Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp + uqp * akq;
                    a(k, q) = upq * akp + uqq * akq;
                }
                // rows: A <- U* A
                for (std::size_t k = 0; k < n; ++k) {
                    Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                a(p, q) = Complex{0.0, 0.0};
                a(q, p) = Complex{0.0, 0.0};
                a(p, p) = Complex{a(p, p).real(), 0.0};
                a(q, q) = Complex{a(q, q).real(), 0.0};
                // V <- V U
                for (std::size_t k = 0; k < n; ++k) {
                    Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp + uqp * vkq;
                    v(k, q) = upq * vkp + uqq * vkq;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    HermitianEigen out;
    out.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.values[j] = a(order[j], order[j]).real();
        for (std::size_t i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

/// Rebuild V diag(f(values)) V* from an eigensystem.
template <typename Fn>
inline ComplexMatrix assemble_from_eigen(const HermitianEigen& eig, Fn&& f) {
    std::size_t n = eig.values.size();
    ComplexMatrix r(n);
    for (std::size_t k = 0; k < n; ++k) {
        double fk = f(eig.values[k]);
        if (fk == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            Complex vik = eig.vectors(i, k);
            if (vik == Complex{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < n; ++j)
                r(i, j) += fk * vik * std::conj(eig.vectors(j, k));
        }
    }
    return r;
}

/// sqrt(lambda_max(M* M)) = sup ||Mx|| / ||x||.
inline double operator_norm(const ComplexMatrix& m, const ToleranceProfile& profile = {}) {
    HermitianEigen eig = eig_hermitian(hermitize(adjoint(m) * m), profile);
    double top = eig.values.empty() ? 0.0 : eig.values.back();
    return std::sqrt(std::max(0.0, top));
}

/// Iterates r_k = ||K^(2^k)||^(1/2^k) of the Gelfand spectral-radius formula,
/// computed by repeated squaring with renormalization.
struct GelfandTrace {
    std::vector<double> iterates;
    bool converged = false;
    double radius = 0.0;
};

inline GelfandTrace spectral_radius_gelfand(const ComplexMatrix& k,
                                            const ToleranceProfile& profile = {}) {
    profile.validate();
    GelfandTrace trace;

    double norm0 = operator_norm(k, profile);
    trace.iterates.push_back(norm0);
    if (norm0 == 0.0) {
        trace.converged = true;
        trace.radius = 0.0;
        return trace;
    }

    // K^(2^j) = exp(log_scale) * M with M kept near unit norm, so squaring at
    // a hostile spectral radius never overflows or underflows.
    ComplexMatrix m = (1.0 / norm0) * k;
    double log_scale = std::log(norm0);
    double pow2 = 1.0;

    for (int j = 1; j <= profile.gelfand_max_squarings; ++j) {
        m = m * m;
        double nm = operator_norm(m, profile);
        if (nm == 0.0) {
            // Nilpotent collapse: the spectral radius is exactly 0.
            trace.iterates.push_back(0.0);
            trace.converged = true;
            trace.radius = 0.0;
            return trace;
        }
        log_scale = 2.0 * log_scale + std::log(nm);
        m = (1.0 / nm) * m;
        pow2 *= 2.0;
        double r = std::exp(log_scale / pow2);
        double prev = trace.iterates.back();
        trace.iterates.push_back(r);
        if (std::abs(r - prev) <= profile.gelfand_tol * std::max(1.0, prev)) {
            trace.converged = true;
            break;
        }
    }
    trace.radius = trace.iterates.back();
    return trace;
}

/// Spectral pseudoinverse of a Hermitian matrix: eigenvalues of magnitude
/// <= rank_tol * max|lambda| are sent to 0, the rest to 1/lambda.
inline ComplexMatrix pinv_hermitian(const ComplexMatrix& m, const ToleranceProfile& profile = {}) {
    HermitianEigen eig = eig_hermitian(m, profile);
    double top = 0.0;
    for (double lam : eig.values) top = std::max(top, std::abs(lam));
    double cut = profile.rank_tol * top;
    return assemble_from_eigen(eig, [cut](double lam) {
        return (std::abs(lam) <= cut) ? 0.0 : 1.0 / lam;
    });
}

} // namespace reidlab
