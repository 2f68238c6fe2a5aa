#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "counterexamples.hpp"
#include "factor.hpp"
#include "generators.hpp"
#include "inequalities.hpp"
#include "report.hpp"

namespace reidlab {

/// Configuration of one check or fuzz campaign.
struct CheckConfig {
    std::string check;
    HypothesisMode mode = HypothesisMode::classic;
    std::vector<std::size_t> dims{4};
    long trials = 100;
    std::uint64_t seed = 0;
    double alpha = 2.0;
    int vectors_per_instance = 10;
    bool commuting = true;
    int chain_depth = 10;
    bool force = false; ///< evaluate margins even when hypotheses fail (fuzz mode none)
    ToleranceProfile tol;

    // Explicit data; when present, the campaign runs on this single instance.
    std::optional<ComplexMatrix> a_in, b_in, k_in;
    std::optional<Vector> x_in;
};

namespace detail {

/// One evaluated trial: slack < 0 means the check's tolerance was breached.
struct TrialOutcome {
    double slack = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    WitnessInstance witness;
    DefectMap defects;
};

inline void merge_defects(DefectMap& into, const DefectMap& from) {
    for (const auto& [k, v] : from) {
        auto it = into.find(k);
        if (it == into.end() || std::abs(v) > std::abs(it->second)) into[k] = v;
    }
}

/// Worst-margin reduction over deterministic per-trial streams. Ties (and
/// the "all slack equal" start) resolve to the lowest stream index.
template <typename TrialFn>
CheckReport run_campaign(const CheckConfig& cfg, TrialFn&& trial) {
    cfg.tol.validate();
    if (cfg.dims.empty()) throw ValueError("campaign: need at least one dimension");
    if (cfg.trials < 1) throw ValueError("campaign: trials must be >= 1");

    CheckReport report;
    report.check_name = cfg.check;
    report.hypothesis_mode = to_string(cfg.mode);
    report.dims = cfg.dims;
    report.trials = cfg.trials;
    report.seed = cfg.seed;
    report.tolerance_profile = cfg.tol;

    bool have_worst = false;
    double worst_slack = 0.0;
    for (long t = 0; t < cfg.trials; ++t) {
        std::size_t dim = cfg.dims[static_cast<std::size_t>(t) % cfg.dims.size()];
        SeededSource source(cfg.seed, static_cast<std::uint64_t>(t));
        TrialOutcome out = trial(dim, source, cfg);
        merge_defects(report.hypothesis_defects, out.defects);
        if (!have_worst || out.slack < worst_slack) {
            have_worst = true;
            worst_slack = out.slack;
            report.worst_lhs = out.lhs;
            report.worst_rhs = out.rhs;
            report.worst_margin = out.margin;
            report.worst_stream = t;
            report.worst_witness = std::move(out.witness);
        }
    }
    report.verdict = (worst_slack < 0.0) ? Verdict::violation : Verdict::pass;
    return report;
}

inline std::pair<ComplexMatrix, ComplexMatrix> reid_instance_for(std::size_t dim,
                                                                 SeededSource& source,
                                                                 const CheckConfig& cfg) {
    if (cfg.a_in && cfg.k_in) return {*cfg.a_in, *cfg.k_in};
    if (cfg.mode == HypothesisMode::none) {
        ComplexMatrix a = gen_psd(dim, source);
        ComplexMatrix k = gen_matrix(dim, source);
        return {a, k};
    }
    ReidInstance inst = gen_reid_instance(dim, cfg.mode, source, cfg.tol);
    return {inst.a, inst.k};
}

inline std::vector<Vector> probe_vectors(std::size_t dim, SeededSource& source,
                                         const CheckConfig& cfg) {
    if (cfg.x_in) return {*cfg.x_in};
    std::vector<Vector> xs;
    xs.reserve(static_cast<std::size_t>(cfg.vectors_per_instance));
    for (int i = 0; i < cfg.vectors_per_instance; ++i) xs.push_back(gen_unit_vector(dim, source));
    return xs;
}

// ---- per-check trial evaluators -------------------------------------------

inline TrialOutcome reid_trial(std::size_t dim, SeededSource& source, const CheckConfig& cfg) {
    auto [a, k] = reid_instance_for(dim, source, cfg);
    TrialOutcome out;
    ComplexMatrix ak = reid_hypotheses(a, k, cfg.mode, cfg.tol,
                                       cfg.force || cfg.mode == HypothesisMode::none,
                                       &out.defects);
    double nk = operator_norm(k, cfg.tol);
    bool first = true;
    for (const Vector& x : probe_vectors(dim, source, cfg)) {
        double lhs = std::abs(inner_product(ak * x, x));
        double rhs = nk * real_quadratic_form(a, x, "reid_trial");
        double margin = rhs - lhs;
        double slack = margin + 1e-7 * std::max(rhs, 0.0);
        if (first || slack < out.slack) {
            first = false;
            out.slack = slack;
            out.lhs = lhs;
            out.rhs = rhs;
            out.margin = margin;
            out.witness.vector = x;
        }
    }
    out.witness.matrices = {{"A", a}, {"K", k}};
    return out;
}

inline TrialOutcome halmos_reid_trial(std::size_t dim, SeededSource& source,
                                      const CheckConfig& cfg) {
    CheckConfig gen_cfg = cfg;
    if (gen_cfg.mode == HypothesisMode::none) gen_cfg.force = true;
    else gen_cfg.mode = HypothesisMode::classic; // K*A = AK <=> AK self-adjoint
    auto [a, k] = reid_instance_for(dim, source, gen_cfg);
    TrialOutcome out;
    halmos_hypotheses(a, k, cfg.tol, gen_cfg.force, &out.defects);
    double radius = spectral_radius_gelfand(k, cfg.tol).radius;
    ComplexMatrix ak = a * k;
    bool first = true;
    for (const Vector& x : probe_vectors(dim, source, cfg)) {
        double lhs = std::abs(inner_product(ak * x, x));
        double rhs = radius * real_quadratic_form(a, x, "halmos_reid_trial");
        double margin = rhs - lhs;
        double slack = margin + 1e-7 * std::max(rhs, 0.0);
        if (first || slack < out.slack) {
            first = false;
            out.slack = slack;
            out.lhs = lhs;
            out.rhs = rhs;
            out.margin = margin;
            out.witness.vector = x;
        }
    }
    out.witness.matrices = {{"A", a}, {"K", k}};
    return out;
}

inline TrialOutcome kittaneh_trial(std::size_t dim, SeededSource& source, const CheckConfig& cfg) {
    ComplexMatrix t = cfg.k_in ? *cfg.k_in : gen_normal(dim, source, cfg.tol);
    TrialOutcome out;
    PredicateResult hypo = is_hyponormal(t, cfg.tol);
    out.defects["T_hyponormal_min_eig"] = hypo.defect;
    if (!hypo.holds && !cfg.force && cfg.mode != HypothesisMode::none)
        throw HypothesisError("kittaneh: T is not hyponormal");
    ComplexMatrix abs_t = abs_value(t, cfg.tol);
    bool first = true;
    for (const Vector& x : probe_vectors(t.dim(), source, cfg)) {
        double lhs = std::abs(inner_product(t * x, x));
        double rhs = real_quadratic_form(abs_t, x, "kittaneh_trial");
        double margin = rhs - lhs;
        double slack = margin + 1e-8 * std::max(rhs, 0.0);
        if (first || slack < out.slack) {
            first = false;
            out.slack = slack;
            out.lhs = lhs;
            out.rhs = rhs;
            out.margin = margin;
            out.witness.vector = x;
        }
    }
    out.witness.matrices = {{"T", t}};
    return out;
}

inline TrialOutcome monotone_trial(MonotoneKind kind, std::size_t dim, SeededSource& source,
                                   const CheckConfig& cfg) {
    ComplexMatrix a(1), b(1);
    if (cfg.a_in && cfg.b_in) {
        a = *cfg.a_in;
        b = *cfg.b_in;
    } else if (kind == MonotoneKind::square || kind == MonotoneKind::power) {
        std::tie(a, b) = gen_commuting_psd_pair(dim, source, cfg.tol);
    } else if (kind == MonotoneKind::inverse) {
        a = hermitize(gen_psd(dim, source) + 0.1 * ComplexMatrix::identity(dim));
        b = hermitize(a + gen_psd(dim, source));
    } else {
        std::tie(a, b) = gen_loewner_pair(dim, source);
    }
    TrialOutcome out;
    Margin m = monotonicity_cert(kind, a, b, cfg.alpha, cfg.tol, &out.defects);
    out.lhs = m.lhs;
    out.rhs = m.rhs;
    out.margin = m.margin;
    double fb_norm = out.defects.count("f_B_operator_norm") ? out.defects["f_B_operator_norm"] : 1.0;
    out.slack = (kind == MonotoneKind::inverse) ? m.margin + 1e-7
                                                : m.margin + 1e-7 * std::max(1.0, fb_norm);
    out.witness.matrices = {{"A", a}, {"B", b}};
    out.witness.vector = m.witness;
    return out;
}

inline TrialOutcome norm_power_trial(std::size_t dim, SeededSource& source,
                                     const CheckConfig& cfg) {
    ComplexMatrix a = cfg.a_in ? *cfg.a_in : gen_psd(dim, source);
    Margin m = norm_power_identity(a, cfg.alpha, cfg.tol);
    TrialOutcome out;
    out.lhs = m.lhs;
    out.rhs = m.rhs;
    out.margin = m.margin;
    out.slack = 1e-8 * std::max(1.0, m.rhs) - std::abs(m.margin);
    out.witness.matrices = {{"A", a}};
    return out;
}

inline TrialOutcome douglas_trial(std::size_t dim, SeededSource& source, const CheckConfig& cfg) {
    ComplexMatrix a(1), b(1);
    if (cfg.a_in && cfg.b_in) {
        a = *cfg.a_in;
        b = *cfg.b_in;
    } else {
        b = gen_matrix(dim, source);
        ComplexMatrix g = gen_matrix(dim, source);
        double ng = operator_norm(g, cfg.tol);
        ComplexMatrix c = (source.next_uniform() / std::max(ng, 1e-12)) * g;
        a = c * b;
    }
    Factorization f = douglas_contraction(a, b, cfg.tol);
    TrialOutcome out;
    out.defects["factor_norm_excess"] = std::max(0.0, f.factor_norm - 1.0);
    out.margin = -f.residual;
    out.slack = std::min(1e-8 * std::max(1.0, frobenius_norm(a)) - f.residual,
                         1.0 + cfg.tol.predicate_tol - f.factor_norm);
    out.witness.matrices = {{"A", a}, {"B", b}, {"K", f.factor}};
    return out;
}

inline TrialOutcome stochel_trial(std::size_t dim, SeededSource& source, const CheckConfig& cfg) {
    ComplexMatrix a(1), b(1);
    if (cfg.a_in && cfg.b_in) {
        a = *cfg.a_in;
        b = *cfg.b_in;
    } else {
        std::tie(a, b) = gen_commuting_psd_pair(dim, source, cfg.tol);
    }
    Factorization f = stochel_positive_contraction(a, b, cfg.tol);
    TrialOutcome out;
    double k_min_eig = eig_hermitian(f.factor, cfg.tol).values.front();
    out.defects["factor_min_eig"] = k_min_eig;
    out.defects["factor_norm_excess"] = std::max(0.0, f.factor_norm - 1.0);
    // Converse branch of the lemma: BA stays positive for the returned factor.
    out.defects["BA_min_eig"] = eig_hermitian(hermitize(b * a), cfg.tol).values.front();
    out.margin = -f.residual;
    out.slack = std::min({1e-8 * std::max(1.0, frobenius_norm(a)) - f.residual,
                          1.0 + cfg.tol.predicate_tol - f.factor_norm,
                          k_min_eig + cfg.tol.predicate_tol * std::max(1.0, f.factor_norm)});
    out.witness.matrices = {{"A", a}, {"B", b}, {"K", f.factor}};
    return out;
}

inline TrialOutcome chain_trial(std::size_t dim, SeededSource& source, const CheckConfig& cfg) {
    CheckConfig gen_cfg = cfg;
    gen_cfg.mode = HypothesisMode::classic;
    auto [a, k] = reid_instance_for(dim, source, gen_cfg);
    TrialOutcome out;
    bool first = true;
    for (const Vector& x : probe_vectors(dim, source, cfg)) {
        std::vector<Margin> chain =
            induction_chain(a, k, x, cfg.chain_depth, cfg.tol, cfg.force, &out.defects);
        for (const Margin& m : chain) {
            double slack = m.margin + 1e-6 * std::max(m.rhs, 0.0);
            if (first || slack < out.slack) {
                first = false;
                out.slack = slack;
                out.lhs = m.lhs;
                out.rhs = m.rhs;
                out.margin = m.margin;
                out.witness.vector = x;
            }
        }
    }
    out.witness.matrices = {{"A", a}, {"K", k}};
    return out;
}

} // namespace detail

inline const std::vector<std::string>& registered_checks() {
    static const std::vector<std::string> names = {
        "reid",          "halmos-reid",      "kittaneh", "sqrt-monotone", "inverse-antitone",
        "power-monotone", "norm-power",      "douglas",  "stochel",       "induction-chain"};
    return names;
}

/// Run a registered check campaign. Deterministic given (config, seed).
inline CheckReport run_check(const CheckConfig& cfg) {
    using namespace detail;
    const std::string& name = cfg.check;
    if (name == "reid")
        return run_campaign(cfg, [](std::size_t d, SeededSource& s, const CheckConfig& c) {
            return reid_trial(d, s, c);
        });
    if (name == "halmos-reid")
        return run_campaign(cfg, [](std::size_t d, SeededSource& s, const CheckConfig& c) {
            return halmos_reid_trial(d, s, c);
        });
    if (name == "kittaneh")
        return run_campaign(cfg, [](std::size_t d, SeededSource& s, const CheckConfig& c) {
            return kittaneh_trial(d, s, c);
        });
    if (name == "sqrt-monotone")
        return run_campaign(cfg, [](std::size_t d, SeededSource& s, const CheckConfig& c) {
            return monotone_trial(MonotoneKind::sqrt, d, s, c);
        });
    if (name == "inverse-antitone")
        return run_campaign(cfg, [](std::size_t d, SeededSource& s, const CheckConfig& c) {
            return monotone_trial(MonotoneKind::inverse, d, s, c);
        });
    if (name == "power-monotone") {
        if (!cfg.commuting)
            throw HypothesisError("power-monotone requires commuting inputs; for the "
                                  "non-commuting failure run: counterexample squaring-noncommuting");
        return run_campaign(cfg, [](std::size_t d, SeededSource& s, const CheckConfig& c) {
            return monotone_trial(MonotoneKind::power, d, s, c);
        });
    }
    if (name == "norm-power")
        return run_campaign(cfg, [](std::size_t d, SeededSource& s, const CheckConfig& c) {
            return norm_power_trial(d, s, c);
        });
    if (name == "douglas")
        return run_campaign(cfg, [](std::size_t d, SeededSource& s, const CheckConfig& c) {
            return douglas_trial(d, s, c);
        });
    if (name == "stochel")
        return run_campaign(cfg, [](std::size_t d, SeededSource& s, const CheckConfig& c) {
            return stochel_trial(d, s, c);
        });
    if (name == "induction-chain")
        return run_campaign(cfg, [](std::size_t d, SeededSource& s, const CheckConfig& c) {
            return chain_trial(d, s, c);
        });
    throw ValueError("unknown check: " + name);
}

/// Fuzz entry point: identical machinery, but hypothesis failures are
/// force-evaluated and recorded instead of thrown when mode is `none`.
inline CheckReport run_fuzz(CheckConfig cfg) {
    if (cfg.mode == HypothesisMode::none) cfg.force = true;
    return run_check(cfg);
}

/// Counterexample gallery, addressable by name from the CLI.
inline CheckReport run_counterexample(const std::string& name, std::size_t dim,
                                      const ToleranceProfile& tol) {
    CheckReport report;
    report.check_name = "counterexample " + name;
    report.trials = 1;
    report.tolerance_profile = tol;
    report.worst_stream = 0;
    if (name == "quasinormal-shift") {
        ReidViolation v = reid_quasinormal_violation(dim, tol);
        report.hypothesis_mode = "none";
        report.dims = {dim};
        report.worst_lhs = v.margin.lhs;
        report.worst_rhs = v.margin.rhs;
        report.worst_margin = v.margin.margin;
        report.worst_witness.matrices = {{"A", v.a}, {"K", v.k}};
        report.worst_witness.vector = v.x;
        report.hypothesis_defects = v.hypothesis_defects;
        report.verdict = (v.margin.margin < 0.0) ? Verdict::violation : Verdict::pass;
        return report;
    }
    if (name == "squaring-noncommuting") {
        SquaringCounterexample c = squaring_nonmonotone_pair(tol);
        report.hypothesis_mode = "noncommuting";
        report.dims = {2};
        report.worst_lhs = c.margin.lhs;
        report.worst_rhs = c.margin.rhs;
        report.worst_margin = c.margin.margin;
        report.worst_witness.matrices = {{"A", c.a}, {"B", c.b}};
        report.worst_witness.vector = c.margin.witness;
        report.hypothesis_defects = {{"loewner_B_minus_A_min_eig", c.order_min_eig},
                                     {"commutator_AB", c.commutator_norm}};
        report.verdict = (c.margin.margin < 0.0) ? Verdict::violation : Verdict::pass;
        return report;
    }
    throw ValueError("unknown counterexample: " + name +
                     " (known: quasinormal-shift, squaring-noncommuting)");
}

} // namespace reidlab
