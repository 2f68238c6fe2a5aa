#pragma once

#include <algorithm>
#include <cmath>

#include "spectra.hpp"

namespace reidlab {

/// Outcome of an operator-class test. Every predicate reports its numerical
/// defect alongside the boolean: fuzz reports need margins, not bits.
struct PredicateResult {
    bool holds = false;
    double defect = 0.0;

    explicit operator bool() const { return holds; }
};

/// defect = ||M - M*||_F; holds iff defect <= tol * max(1, ||M||_F).
inline PredicateResult is_self_adjoint(const ComplexMatrix& m, const ToleranceProfile& profile = {}) {
    double defect = frobenius_norm(m - adjoint(m));
    bool ok = defect <= profile.predicate_tol * std::max(1.0, frobenius_norm(m));
    return {ok, defect};
}

/// defect = min eigenvalue of M; holds iff it is >= -tol * max(1, ||M||).
inline PredicateResult is_psd(const ComplexMatrix& m, const ToleranceProfile& profile = {}) {
    if (!is_self_adjoint(m, profile).holds)
        throw HypothesisError("is_psd: input is not self-adjoint");
    HermitianEigen eig = eig_hermitian(m, profile);
    double lo = eig.values.front();
    double hi = std::max(std::abs(eig.values.front()), std::abs(eig.values.back()));
    return {lo >= -profile.predicate_tol * std::max(1.0, hi), lo};
}

/// Loewner order A <= B; defect = min eigenvalue of B - A.
inline PredicateResult loewner_leq(const ComplexMatrix& a, const ComplexMatrix& b,
                                   const ToleranceProfile& profile = {}) {
    if (!is_self_adjoint(a, profile).holds || !is_self_adjoint(b, profile).holds)
        throw HypothesisError("loewner_leq: inputs must be self-adjoint");
    return is_psd(hermitize(b - a), profile);
}

/// T*T - TT* >= 0 (eigenvalue test); defect = min eigenvalue of T*T - TT*.
inline PredicateResult is_hyponormal(const ComplexMatrix& t, const ToleranceProfile& profile = {}) {
    ComplexMatrix d = hermitize(adjoint(t) * t - t * adjoint(t));
    HermitianEigen eig = eig_hermitian(d, profile);
    double lo = eig.values.front();
    double nt = frobenius_norm(t);
    return {lo >= -profile.predicate_tol * std::max(1.0, nt * nt), lo};
}

/// ||T*T - TT*||_F <= tol * max(1, ||T||^2).
inline PredicateResult is_normal(const ComplexMatrix& t, const ToleranceProfile& profile = {}) {
    double defect = frobenius_norm(adjoint(t) * t - t * adjoint(t));
    double nt = frobenius_norm(t);
    return {defect <= profile.predicate_tol * std::max(1.0, nt * nt), defect};
}

/// T commutes with T*T; defect = ||T(T*T) - (T*T)T||_F.
inline PredicateResult is_quasinormal(const ComplexMatrix& t, const ToleranceProfile& profile = {}) {
    ComplexMatrix tst = adjoint(t) * t;
    double defect = frobenius_norm(t * tst - tst * t);
    double nt = frobenius_norm(t);
    return {defect <= profile.predicate_tol * std::max(1.0, nt * nt * nt), defect};
}

/// ||K|| <= 1 + tol; defect = ||K|| - 1 (positive means excess over 1).
inline PredicateResult is_contraction(const ComplexMatrix& k, const ToleranceProfile& profile = {}) {
    double norm = operator_norm(k, profile);
    return {norm <= 1.0 + profile.predicate_tol, norm - 1.0};
}

} // namespace reidlab
