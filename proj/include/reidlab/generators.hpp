#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

#include "hypothesis_mode.hpp"
#include "matfun.hpp"
#include "predicates.hpp"

namespace reidlab {

/// Deterministic, platform-independent random source.
///
/// PRNG contract (part of the library's interface, so other implementations
/// can match streams bit for bit):
///   - state: one 64-bit integer, seeded as
///       state = master_seed XOR (0x9E3779B97F4A7C15 * (stream_index + 1))
///   - update (splitmix64):
///       state += 0x9E3779B97F4A7C15
///       z = state
///       z = (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9
///       z = (z XOR (z >> 27)) * 0x94D049BB133111EB
///       output = z XOR (z >> 31)
///   - uniform double in [0,1): (output >> 11) * 2^-53
///   - Gaussian: Box-Muller on u1 = ((output >> 11) + 1) * 2^-53 in (0,1]
///     and u2 uniform in [0,1); the pair (z0, z1) = sqrt(-2 ln u1) *
///     (cos(2 pi u2), sin(2 pi u2)) is consumed in order, z0 first.
///   - complex standard Gaussian entry: re = next Gaussian, im = next Gaussian.
class SeededSource {
public:
    SeededSource(std::uint64_t master_seed, std::uint64_t stream_index)
        : state_(master_seed ^ (UINT64_C(0x9E3779B97F4A7C15) * (stream_index + 1))),
          master_seed_(master_seed),
          stream_index_(stream_index) {}

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

    std::uint64_t next_u64() {
        state_ += UINT64_C(0x9E3779B97F4A7C15);
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
        return z ^ (z >> 31);
    }

    double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; // (0, 1]
        double u2 = next_uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double theta = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    Complex next_complex_gaussian() {
        double re = next_gaussian();
        double im = next_gaussian();
        return Complex{re, im};
    }

private:
    std::uint64_t state_;
    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Independent standard complex Gaussian entries (Ginibre ensemble).
inline ComplexMatrix gen_matrix(std::size_t n, SeededSource& source) {
    ComplexMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) g(i, j) = source.next_complex_gaussian();
    return g;
}

inline Vector gen_vector(std::size_t n, SeededSource& source) {
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = source.next_complex_gaussian();
    return x;
}

/// Uniform on the unit sphere via normalized Gaussian entries.
inline Vector gen_unit_vector(std::size_t n, SeededSource& source) {
    for (;;) {
        Vector x = gen_vector(n, source);
        double nx = vector_norm(x);
        if (nx > 1e-12) {
            for (std::size_t i = 0; i < n; ++i) x[i] /= nx;
            return x;
        }
    }
}

inline ComplexMatrix gen_psd(std::size_t n, SeededSource& source) {
    ComplexMatrix g = gen_matrix(n, source);
    return hermitize(adjoint(g) * g);
}

inline ComplexMatrix gen_self_adjoint(std::size_t n, SeededSource& source) {
    return hermitize(gen_matrix(n, source));
}

/// Polar factor of a Ginibre draw; full rank with probability 1, re-drawn on
/// the (measure-zero) rank-deficient event.
inline ComplexMatrix gen_unitary(std::size_t n, SeededSource& source,
                                 const ToleranceProfile& profile = {}) {
    for (;;) {
        ComplexMatrix u = polar_decompose(gen_matrix(n, source), profile).isometry_part;
        if (frobenius_norm(adjoint(u) * u - ComplexMatrix::identity(n)) <= 1e-8 * std::sqrt(double(n)))
            return u;
    }
}

/// U diag(complex Gaussian) U* for a random unitary U.
inline ComplexMatrix gen_normal(std::size_t n, SeededSource& source,
                                const ToleranceProfile& profile = {}) {
    ComplexMatrix u = gen_unitary(n, source, profile);
    ComplexMatrix d(n);
    for (std::size_t i = 0; i < n; ++i) d(i, i) = source.next_complex_gaussian();
    return u * d * adjoint(u);
}

/// 0 <= A <= B by construction: A = gen_psd, B = A + gen_psd.
inline std::pair<ComplexMatrix, ComplexMatrix> gen_loewner_pair(std::size_t n, SeededSource& source) {
    ComplexMatrix a = gen_psd(n, source);
    ComplexMatrix b = hermitize(a + gen_psd(n, source));
    return {a, b};
}

/// Commuting PSD pair with A <= B: common random eigenbasis, b_i = a_i + |Gaussian|.
inline std::pair<ComplexMatrix, ComplexMatrix> gen_commuting_psd_pair(std::size_t n, SeededSource& source,
                                                                      const ToleranceProfile& profile = {}) {
    ComplexMatrix u = gen_unitary(n, source, profile);
    ComplexMatrix da(n), db(n);
    for (std::size_t i = 0; i < n; ++i) {
        double ai = std::abs(source.next_gaussian());
        double bi = ai + std::abs(source.next_gaussian());
        da(i, i) = ai;
        db(i, i) = bi;
    }
    return {hermitize(u * da * adjoint(u)), hermitize(u * db * adjoint(u))};
}

/// A Reid-inequality instance: A positive (regularized by epsilon * I so the
/// construction K = A^{-1} H is available) and K built so that AK has the
/// requested structure.
struct ReidInstance {
    ComplexMatrix a;
    ComplexMatrix k;
    double epsilon = 1e-3;
};

inline ReidInstance gen_reid_instance(std::size_t n, HypothesisMode mode, SeededSource& source,
                                      const ToleranceProfile& profile = {}) {
    ReidInstance inst;
    inst.a = hermitize(gen_psd(n, source) + inst.epsilon * ComplexMatrix::identity(n));
    ComplexMatrix a_inv = pinv_hermitian(inst.a, profile);
    switch (mode) {
    case HypothesisMode::classic:
    case HypothesisMode::co_hyponormal: {
        // AK = H self-adjoint; self-adjoint is in particular co-hyponormal.
        ComplexMatrix h = gen_self_adjoint(n, source);
        inst.k = a_inv * h;
        break;
    }
    case HypothesisMode::normal: {
        ComplexMatrix nrm = gen_normal(n, source, profile);
        inst.k = a_inv * nrm;
        break;
    }
    case HypothesisMode::none:
        inst.k = gen_matrix(n, source);
        break;
    }
    return inst;
}

} // namespace reidlab
