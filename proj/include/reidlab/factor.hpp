#pragma once

#include <sstream>
#include <string>

#include "generators.hpp"
#include "matfun.hpp"
#include "predicates.hpp"

namespace reidlab {

enum class FactorKind { plain, positive, self_adjoint };

inline const char* to_string(FactorKind kind) {
    switch (kind) {
    case FactorKind::plain: return "plain";
    case FactorKind::positive: return "positive";
    case FactorKind::self_adjoint: return "self_adjoint";
    }
    return "?";
}

/// A Douglas factorization A = K B with K a contraction. The kind records
/// which extra structure K carries.
struct Factorization {
    ComplexMatrix factor;   ///< K
    double residual = 0.0;  ///< ||K B - A||_F
    double factor_norm = 0.0;
    FactorKind kind = FactorKind::plain;
};

namespace detail {

/// Norm-domination certificate ||Ax|| <= (1+tol) ||Bx||, checked two ways:
/// the operator inequality A*A <= (1+tol)^2 B*B (eigenvalue test; sampling
/// can miss thin violation cones) plus a fixed-seed sampled-vector probe.
inline void require_norm_domination(const ComplexMatrix& a, const ComplexMatrix& b,
                                    const ToleranceProfile& profile) {
    if (a.dim() != b.dim()) throw DimensionError("factorization: dimension mismatch");
    double tol = profile.predicate_tol;
    ComplexMatrix gap = hermitize((1.0 + tol) * (1.0 + tol) * (adjoint(b) * b) - adjoint(a) * a);
    HermitianEigen eig = eig_hermitian(gap, profile);
    double scale = std::max(1.0, frobenius_norm(b));
    if (eig.values.front() < -tol * scale * scale) {
        std::ostringstream msg;
        msg << "norm domination ||Ax|| <= ||Bx|| fails: min eigenvalue of "
            << "(1+tol)^2 B*B - A*A is " << eig.values.front() << " along eigendirection (";
        for (std::size_t i = 0; i < a.dim(); ++i) {
            Complex v = eig.vectors(i, 0);
            msg << (i ? ", " : "") << v.real() << (v.imag() < 0 ? "-" : "+")
                << std::abs(v.imag()) << "i";
        }
        msg << ")";
        throw HypothesisError(msg.str());
    }
    SeededSource probe(UINT64_C(0x5EED5A3D), 0);
    for (int s = 0; s < 16; ++s) {
        Vector x = gen_unit_vector(a.dim(), probe);
        double an = vector_norm(a * x);
        double bn = vector_norm(b * x);
        if (an > (1.0 + tol) * bn + tol * scale)
            throw HypothesisError("norm domination ||Ax|| <= ||Bx|| fails on a sampled vector");
    }
}

inline Factorization build(const ComplexMatrix& a, const ComplexMatrix& b, FactorKind kind,
                           const ToleranceProfile& profile) {
    Factorization f;
    f.kind = kind;
    // K = A B+ vanishes on range(B)^perp, the unique contractive extension.
    f.factor = a * pinv_general(b, profile);
    f.residual = frobenius_norm(f.factor * b - a);
    f.factor_norm = operator_norm(f.factor, profile);
    return f;
}

} // namespace detail

/// Douglas lemma, constructive direction: ||Ax|| <= ||Bx|| for all x yields
/// a contraction K with A = K B.
inline Factorization douglas_contraction(const ComplexMatrix& a, const ComplexMatrix& b,
                                         const ToleranceProfile& profile = {}) {
    detail::require_norm_domination(a, b, profile);
    return detail::build(a, b, FactorKind::plain, profile);
}

/// Stochel's refinement: for self-adjoint A, B with BA >= 0, the Douglas
/// factor is itself a positive contraction.
inline Factorization stochel_positive_contraction(const ComplexMatrix& a, const ComplexMatrix& b,
                                                  const ToleranceProfile& profile = {}) {
    if (!is_self_adjoint(a, profile).holds || !is_self_adjoint(b, profile).holds)
        throw HypothesisError("stochel_positive_contraction: A and B must be self-adjoint");
    // BA >= 0 forces BA self-adjoint, i.e. AB = BA, which is what makes A B+
    // Hermitian.
    ComplexMatrix ba = b * a;
    if (!is_self_adjoint(ba, profile).holds)
        throw HypothesisError("stochel_positive_contraction: BA is not self-adjoint (AB != BA)");
    if (!is_psd(hermitize(ba), profile).holds)
        throw HypothesisError("stochel_positive_contraction: BA is not positive");
    detail::require_norm_domination(a, b, profile);
    Factorization f = detail::build(a, b, FactorKind::positive, profile);
    ComplexMatrix k = hermitize(f.factor);
    PredicateResult sa = is_self_adjoint(f.factor, profile);
    PredicateResult psd = is_psd(k, profile);
    if (!sa.holds || !psd.holds)
        throw NumericalError("stochel_positive_contraction: constructed factor is not positive "
                             "(internal consistency failure)");
    f.factor = k;
    return f;
}

/// Same construction under the weaker hypothesis that AB is self-adjoint:
/// the factor is a self-adjoint contraction.
inline Factorization selfadjoint_contraction_variant(const ComplexMatrix& a, const ComplexMatrix& b,
                                                     const ToleranceProfile& profile = {}) {
    if (!is_self_adjoint(a, profile).holds || !is_self_adjoint(b, profile).holds)
        throw HypothesisError("selfadjoint_contraction_variant: A and B must be self-adjoint");
    if (!is_self_adjoint(a * b, profile).holds)
        throw HypothesisError("selfadjoint_contraction_variant: AB is not self-adjoint (AB != BA)");
    detail::require_norm_domination(a, b, profile);
    Factorization f = detail::build(a, b, FactorKind::self_adjoint, profile);
    if (!is_self_adjoint(f.factor, profile).holds)
        throw NumericalError("selfadjoint_contraction_variant: constructed factor is not "
                             "self-adjoint (internal consistency failure)");
    f.factor = hermitize(f.factor);
    return f;
}

} // namespace reidlab
