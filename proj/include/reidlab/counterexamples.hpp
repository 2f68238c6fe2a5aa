#pragma once

#include "inequalities.hpp"

namespace reidlab {

/// Finite truncation of the unilateral shift: S e_i = e_{i+1} for i < n-1,
/// S e_{n-1} = 0. Operator norm 1 for every n >= 2.
inline ComplexMatrix truncated_shift(std::size_t n) {
    if (n < 2) throw DimensionError("truncated_shift: n must be >= 2");
    ComplexMatrix s(n);
    for (std::size_t i = 0; i + 1 < n; ++i) s(i + 1, i) = 1.0;
    return s;
}

/// The quasinormal violation of Reid's inequality: A = SS*, K = S,
/// x = (2,1,0,...) gives |<AKx,x>| = 2 > 1 = ||K|| <Ax,x>. The data are
/// small integers, so lhs, rhs and margin are exact in double precision.
/// In infinite dimension AK = SS*S = S is exactly quasinormal; under
/// truncation quasinormality picks up a defect, which is reported rather
/// than hidden (the numeric violation itself is truncation-stable).
struct ReidViolation {
    ComplexMatrix a;
    ComplexMatrix k;
    Vector x;
    Margin margin;
    double quasinormal_defect_ak = 0.0;
    DefectMap hypothesis_defects;
};

inline ReidViolation reid_quasinormal_violation(std::size_t n, const ToleranceProfile& profile = {}) {
    if (n < 3) throw DimensionError("reid_quasinormal_violation: n must be >= 3");
    ReidViolation v;
    v.k = truncated_shift(n);
    v.a = hermitize(v.k * adjoint(v.k)); // SS*
    v.x = Vector(n);
    v.x[0] = 2.0;
    v.x[1] = 1.0;
    v.margin = reid_margin(v.a, v.k, v.x, HypothesisMode::none, profile, true,
                           &v.hypothesis_defects);
    ComplexMatrix ak = v.a * v.k;
    v.quasinormal_defect_ak = is_quasinormal(ak, profile).defect;
    v.hypothesis_defects["AK_quasinormal"] = v.quasinormal_defect_ak;
    return v;
}

/// The classical pair showing that squaring is not Loewner-monotone without
/// commutativity: A = [[1,1],[1,1]] <= B = [[2,1],[1,1]] but B^2 - A^2 =
/// [[3,1],[1,0]] has determinant -1, so A^2 <= B^2 fails.
struct SquaringCounterexample {
    ComplexMatrix a;
    ComplexMatrix b;
    Margin margin;             ///< min eigenvalue of B^2 - A^2, negative
    double order_min_eig = 0.0;  ///< min eigenvalue of B - A (nonnegative)
    double commutator_norm = 0.0;
};

inline SquaringCounterexample squaring_nonmonotone_pair(const ToleranceProfile& profile = {}) {
    SquaringCounterexample c;
    c.a = ComplexMatrix::from_rows({{1.0, 1.0}, {1.0, 1.0}});
    c.b = ComplexMatrix::from_rows({{2.0, 1.0}, {1.0, 1.0}});
    c.order_min_eig = loewner_leq(c.a, c.b, profile).defect;
    c.commutator_norm = frobenius_norm(c.a * c.b - c.b * c.a);

    ComplexMatrix diff = hermitize(c.b * c.b - c.a * c.a);
    HermitianEigen eig = eig_hermitian(diff, profile);
    c.margin.witness = Vector(2);
    c.margin.witness[0] = eig.vectors(0, 0);
    c.margin.witness[1] = eig.vectors(1, 0);
    c.margin.lhs = detail::real_quadratic_form(c.a * c.a, c.margin.witness, "squaring_nonmonotone_pair");
    c.margin.rhs = detail::real_quadratic_form(c.b * c.b, c.margin.witness, "squaring_nonmonotone_pair");
    c.margin.margin = c.margin.rhs - c.margin.lhs;
    return c;
}

} // namespace reidlab
