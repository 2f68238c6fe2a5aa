#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "hypothesis_mode.hpp"
#include "matfun.hpp"
#include "predicates.hpp"

namespace reidlab {

/// Both sides of one checked inequality. For pointwise inequalities the
/// witness is the probe vector x; for operator-level (Loewner) certificates
/// it is the unit eigendirection of the smallest eigenvalue of rhs - lhs, so
/// margin = <(RHS - LHS) w, w> = that eigenvalue.
struct Margin {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    Vector witness;
};

/// Defects of the hypotheses checked alongside a margin, keyed by name.
using DefectMap = std::map<std::string, double>;

namespace detail {

/// Real part of <Mx, x>, asserting the imaginary part is numerically zero:
/// silently taking real parts can mask an adjoint bug.
inline double real_quadratic_form(const ComplexMatrix& m, const Vector& x, const char* who) {
    Complex q = inner_product(m * x, x);
    double scale = std::max(1.0, std::abs(q));
    if (std::abs(q.imag()) > 1e-10 * scale)
        throw NumericalError(std::string(who) + ": quadratic form has a non-real value");
    return q.real();
}

inline void note(DefectMap* defects, const std::string& key, double value) {
    if (defects) (*defects)[key] = value;
}

inline void require(bool ok, bool force, const char* msg) {
    if (!ok && !force) throw HypothesisError(msg);
}

/// Hypothesis checks shared by the Reid-family margins. Returns AK.
inline ComplexMatrix reid_hypotheses(const ComplexMatrix& a, const ComplexMatrix& k,
                                     HypothesisMode mode, const ToleranceProfile& profile,
                                     bool force, DefectMap* defects) {
    PredicateResult sa = is_self_adjoint(a, profile);
    note(defects, "A_self_adjoint", sa.defect);
    require(sa.holds, force, "reid: A is not self-adjoint");
    PredicateResult psd = sa.holds ? is_psd(a, profile) : PredicateResult{false, 0.0};
    if (sa.holds) {
        note(defects, "A_psd_min_eig", psd.defect);
        require(psd.holds, force, "reid: A is not positive");
    }
    ComplexMatrix ak = a * k;
    switch (mode) {
    case HypothesisMode::classic: {
        PredicateResult r = is_self_adjoint(ak, profile);
        note(defects, "AK_self_adjoint", r.defect);
        require(r.holds, force, "reid: AK is not self-adjoint");
        break;
    }
    case HypothesisMode::normal: {
        PredicateResult r = is_normal(ak, profile);
        note(defects, "AK_normal", r.defect);
        require(r.holds, force, "reid: AK is not normal");
        break;
    }
    case HypothesisMode::co_hyponormal: {
        PredicateResult r = is_hyponormal(adjoint(ak), profile);
        note(defects, "AK_adjoint_hyponormal", r.defect);
        require(r.holds, force, "reid: (AK)* is not hyponormal");
        break;
    }
    case HypothesisMode::none:
        break;
    }
    return ak;
}

} // namespace detail

/// Reid inequality |<AKx,x>| <= ||K|| <Ax,x>, pointwise at x. The structural
/// hypothesis on AK is selected by mode and its defect recorded; force lets
/// counterexample searches evaluate the margin even when a hypothesis fails.
inline Margin reid_margin(const ComplexMatrix& a, const ComplexMatrix& k, const Vector& x,
                          HypothesisMode mode, const ToleranceProfile& profile = {},
                          bool force = false, DefectMap* defects = nullptr) {
    ComplexMatrix ak = detail::reid_hypotheses(a, k, mode, profile, force, defects);
    Margin m;
    m.witness = x;
    m.lhs = std::abs(inner_product(ak * x, x));
    m.rhs = operator_norm(k, profile) * detail::real_quadratic_form(a, x, "reid_margin");
    m.margin = m.rhs - m.lhs;
    return m;
}

/// Operator-level dominance |(AK)*| <= ||K|| A (and its squared form
/// AKK*A <= ||K||^2 A^2), certified by the smallest eigenvalue of the
/// difference. Holds for every PSD A and every K.
inline Margin abs_adjoint_dominance(const ComplexMatrix& a, const ComplexMatrix& k,
                                    const ToleranceProfile& profile = {},
                                    DefectMap* defects = nullptr) {
    if (!is_self_adjoint(a, profile).holds || !is_psd(a, profile).holds)
        throw HypothesisError("abs_adjoint_dominance: A is not positive");
    double nk = operator_norm(k, profile);
    ComplexMatrix ak = a * k;
    ComplexMatrix abs_adj = sqrt_psd(hermitize(ak * adjoint(ak)), profile);
    ComplexMatrix diff = hermitize(nk * a - abs_adj);
    HermitianEigen eig = eig_hermitian(diff, profile);

    ComplexMatrix sq_diff = hermitize(nk * nk * (a * a) - ak * adjoint(ak));
    detail::note(defects, "squared_form_min_eig", eig_hermitian(sq_diff, profile).values.front());

    Margin m;
    std::size_t n = a.dim();
    m.witness = Vector(n);
    for (std::size_t i = 0; i < n; ++i) m.witness[i] = eig.vectors(i, 0);
    m.lhs = detail::real_quadratic_form(abs_adj, m.witness, "abs_adjoint_dominance");
    m.rhs = nk * detail::real_quadratic_form(a, m.witness, "abs_adjoint_dominance");
    m.margin = m.rhs - m.lhs;
    return m;
}

/// Kittaneh's inequality |<Tx,x>| <= <|T|x,x> for hyponormal T.
inline Margin kittaneh_margin(const ComplexMatrix& t, const Vector& x,
                              const ToleranceProfile& profile = {}, bool force = false,
                              DefectMap* defects = nullptr) {
    PredicateResult hypo = is_hyponormal(t, profile);
    detail::note(defects, "T_hyponormal_min_eig", hypo.defect);
    detail::require(hypo.holds, force, "kittaneh: T is not hyponormal");
    Margin m;
    m.witness = x;
    m.lhs = std::abs(inner_product(t * x, x));
    m.rhs = detail::real_quadratic_form(abs_value(t, profile), x, "kittaneh_margin");
    m.margin = m.rhs - m.lhs;
    return m;
}

namespace detail {

/// Finite-dimensional Halmos-Reid hypothesis: K*A = AK (the bounded,
/// everywhere-defined reading of the paper's graph inclusion).
inline void halmos_hypotheses(const ComplexMatrix& a, const ComplexMatrix& k,
                              const ToleranceProfile& profile, bool force, DefectMap* defects) {
    reid_hypotheses(a, k, HypothesisMode::none, profile, force, defects);
    PredicateResult sa = is_self_adjoint(a, profile);
    require(sa.holds, force, "halmos_reid: A is not self-adjoint");
    if (sa.holds) require(is_psd(a, profile).holds, force, "halmos_reid: A is not positive");
    double defect = frobenius_norm(adjoint(k) * a - a * k);
    double scale = std::max(1.0, frobenius_norm(a) * frobenius_norm(k));
    note(defects, "intertwining_KstarA_eq_AK", defect);
    require(defect <= profile.predicate_tol * scale, force,
            "halmos_reid: K*A = AK fails beyond tolerance");
}

} // namespace detail

/// Halmos-Reid inequality |<AKx,x>| <= r(K) <Ax,x>, with the spectral radius
/// taken from the Gelfand iterates.
inline Margin halmos_reid_margin(const ComplexMatrix& a, const ComplexMatrix& k, const Vector& x,
                                 const ToleranceProfile& profile = {}, bool force = false,
                                 DefectMap* defects = nullptr) {
    detail::halmos_hypotheses(a, k, profile, force, defects);
    Margin m;
    m.witness = x;
    m.lhs = std::abs(inner_product((a * k) * x, x));
    m.rhs = spectral_radius_gelfand(k, profile).radius *
            detail::real_quadratic_form(a, x, "halmos_reid_margin");
    m.margin = m.rhs - m.lhs;
    return m;
}

/// The induction chain behind Halmos-Reid: for each n,
///   rhs_n = <A K^(2^n) x, x>^(1/2^n) <Ax,x>^((2^n-1)/2^n)
/// dominates |<AKx,x>|. Matrix powers go by repeated squaring with per-step
/// renormalization (log of the accumulated scale is tracked), so a deep
/// chain stays finite-precision-safe.
inline std::vector<Margin> induction_chain(const ComplexMatrix& a, const ComplexMatrix& k,
                                           const Vector& x, int n_max,
                                           const ToleranceProfile& profile = {},
                                           bool force = false, DefectMap* defects = nullptr) {
    if (n_max < 1 || n_max > 20)
        throw DimensionError("induction_chain: n_max must be in 1..20");
    detail::halmos_hypotheses(a, k, profile, force, defects);

    double lhs = std::abs(inner_product((a * k) * x, x));
    double axx = detail::real_quadratic_form(a, x, "induction_chain");
    axx = std::max(axx, 0.0);
    double scale = std::max(1.0, frobenius_norm(a) * vector_norm(x) * vector_norm(x));

    std::vector<Margin> chain;
    chain.reserve(static_cast<std::size_t>(n_max));

    double nk = frobenius_norm(k);
    ComplexMatrix m = (nk > 0.0) ? (1.0 / nk) * k : k; // K = e^{log_scale} M
    double log_scale = (nk > 0.0) ? std::log(nk) : 0.0;
    bool collapsed = (nk == 0.0);

    double pow2 = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        pow2 *= 2.0;
        if (!collapsed) {
            m = m * m;
            double nm = frobenius_norm(m);
            if (nm == 0.0) {
                collapsed = true; // nilpotent: K^(2^n) is exactly 0 from here on
            } else {
                log_scale = 2.0 * log_scale + std::log(nm);
                m = (1.0 / nm) * m;
            }
        }
        Margin mg;
        mg.witness = x;
        mg.lhs = lhs;
        if (collapsed || axx == 0.0) {
            mg.rhs = 0.0;
        } else {
            Complex q = inner_product((a * m) * x, x);
            double v = q.real();
            if (v < -1e-10 * std::max(1.0, std::abs(q))) {
                // the hypothesis forces <A K^(2^n) x, x> = <A K^(2^(n-1)) x, K^(2^(n-1)) x> >= 0
                if (!force)
                    throw NumericalError("induction_chain: <A K^(2^n) x, x> is negative");
                v = 0.0;
            }
            v = std::max(v, 0.0);
            mg.rhs = (v == 0.0)
                         ? 0.0
                         : std::exp((log_scale + std::log(v)) / pow2 +
                                    (1.0 - 1.0 / pow2) * std::log(std::max(axx, 1e-300)));
        }
        if (lhs == 0.0 && mg.rhs < 1e-30 * scale) mg.rhs = std::max(mg.rhs, 0.0);
        mg.margin = mg.rhs - mg.lhs;
        chain.push_back(mg);
    }
    return chain;
}

enum class MonotoneKind { sqrt, inverse, square, power };

inline const char* to_string(MonotoneKind kind) {
    switch (kind) {
    case MonotoneKind::sqrt: return "sqrt";
    case MonotoneKind::inverse: return "inverse";
    case MonotoneKind::square: return "square";
    case MonotoneKind::power: return "power";
    }
    return "?";
}

/// Loewner-monotonicity certificate for 0 <= A <= B: the smallest eigenvalue
/// of f(B) - f(A) (for kind inverse, of A^{-1} - B^{-1}, the order being
/// reversed). kinds square and power require AB = BA; the non-commuting
/// failure mode lives in the counterexamples module.
inline Margin monotonicity_cert(MonotoneKind kind, const ComplexMatrix& a, const ComplexMatrix& b,
                                double alpha, const ToleranceProfile& profile = {},
                                DefectMap* defects = nullptr) {
    if (!is_psd(a, profile).holds)
        throw HypothesisError("monotonicity_cert: A is not positive");
    PredicateResult order = loewner_leq(a, b, profile);
    detail::note(defects, "loewner_A_leq_B_min_eig", order.defect);
    if (!order.holds) throw HypothesisError("monotonicity_cert: A <= B fails");

    ComplexMatrix fa(a.dim()), fb(b.dim());
    switch (kind) {
    case MonotoneKind::sqrt:
        fa = sqrt_psd(a, profile);
        fb = sqrt_psd(b, profile);
        break;
    case MonotoneKind::inverse: {
        HermitianEigen ea = eig_hermitian(a, profile);
        if (ea.values.front() <= profile.rank_tol * std::max(1.0, std::abs(ea.values.back())))
            throw HypothesisError("monotonicity_cert: A is not invertible");
        // note the reversal: the certificate is A^{-1} - B^{-1} >= 0
        fa = pinv_hermitian(b, profile);
        fb = pinv_hermitian(a, profile);
        break;
    }
    case MonotoneKind::square:
    case MonotoneKind::power: {
        double commutator = frobenius_norm(a * b - b * a);
        double scale = std::max(1.0, frobenius_norm(a) * frobenius_norm(b));
        detail::note(defects, "commutator_AB", commutator);
        if (commutator > profile.predicate_tol * scale)
            throw HypothesisError("monotonicity_cert: A and B do not commute; see the "
                                  "squaring-noncommuting counterexample for what goes wrong");
        double p = (kind == MonotoneKind::square) ? 2.0 : alpha;
        fa = power_psd(a, p, profile);
        fb = power_psd(b, p, profile);
        break;
    }
    }

    detail::note(defects, "f_B_operator_norm", operator_norm(fb, profile));
    HermitianEigen eig = eig_hermitian(hermitize(fb - fa), profile);
    Margin m;
    std::size_t n = a.dim();
    m.witness = Vector(n);
    for (std::size_t i = 0; i < n; ++i) m.witness[i] = eig.vectors(i, 0);
    m.lhs = detail::real_quadratic_form(fa, m.witness, "monotonicity_cert");
    m.rhs = detail::real_quadratic_form(fb, m.witness, "monotonicity_cert");
    m.margin = m.rhs - m.lhs;
    return m;
}

/// ||A^alpha|| = ||A||^alpha for PSD A; margin = rhs - lhs (should be ~0).
inline Margin norm_power_identity(const ComplexMatrix& a, double alpha,
                                  const ToleranceProfile& profile = {}) {
    if (!is_psd(a, profile).holds)
        throw HypothesisError("norm_power_identity: A is not positive");
    Margin m;
    m.lhs = operator_norm(power_psd(a, alpha, profile), profile);
    m.rhs = std::pow(operator_norm(a, profile), alpha);
    m.margin = m.rhs - m.lhs;
    return m;
}

} // namespace reidlab
