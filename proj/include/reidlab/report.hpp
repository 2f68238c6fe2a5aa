#pragma once

#include <map>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace reidlab {

enum class Verdict { pass, violation, hypothesis_error };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::violation: return "violation";
    case Verdict::hypothesis_error: return "hypothesis_error";
    }
    return "?";
}

/// The instance on which the worst margin was observed.
struct WitnessInstance {
    std::map<std::string, ComplexMatrix> matrices; // keyed "A", "B", "K", ...
    Vector vector;                                  // probe x, when pointwise
};

/// Outcome of a check or fuzz campaign. Serializes losslessly to JSON;
/// identical (config, seed) produce byte-identical reports.
struct CheckReport {
    std::string check_name;
    std::string hypothesis_mode;
    std::vector<std::size_t> dims;
    long trials = 0;
    std::uint64_t seed = 0;
    ToleranceProfile tolerance_profile;
    double worst_lhs = 0.0;
    double worst_rhs = 0.0;
    double worst_margin = 0.0;
    long worst_stream = -1;
    WitnessInstance worst_witness;
    DefectMap hypothesis_defects; // worst observed defect per hypothesis
    Verdict verdict = Verdict::pass;
};

inline Json to_json(const CheckReport& r) {
    Json witness = Json::object();
    Json mats = Json::object();
    for (const auto& [name, m] : r.worst_witness.matrices) mats[name] = to_json(m);
    witness["matrices"] = std::move(mats);
    if (!r.worst_witness.vector.empty()) witness["vector"] = to_json(r.worst_witness.vector);

    Json defects = Json::object();
    for (const auto& [name, d] : r.hypothesis_defects) defects[name] = d;

    return Json{{"check_name", r.check_name},
                {"hypothesis_mode", r.hypothesis_mode},
                {"dims", r.dims},
                {"trials", r.trials},
                {"seed", r.seed},
                {"tolerance_profile", to_json(r.tolerance_profile)},
                {"worst_lhs", r.worst_lhs},
                {"worst_rhs", r.worst_rhs},
                {"worst_margin", r.worst_margin},
                {"worst_stream", r.worst_stream},
                {"worst_witness", std::move(witness)},
                {"hypothesis_defects", std::move(defects)},
                {"verdict", to_string(r.verdict)}};
}

} // namespace reidlab
