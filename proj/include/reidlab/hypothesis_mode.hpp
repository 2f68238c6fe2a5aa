#pragma once

#include <string>

#include "errors.hpp"

namespace reidlab {

/// Which structural hypothesis is imposed on AK in the Reid family.
/// `none` turns every hypothesis into a recorded defect only (counterexample
/// search mode).
enum class HypothesisMode { classic, normal, co_hyponormal, none };

inline const char* to_string(HypothesisMode mode) {
    switch (mode) {
    case HypothesisMode::classic: return "classic";
    case HypothesisMode::normal: return "normal";
    case HypothesisMode::co_hyponormal: return "co-hyponormal";
    case HypothesisMode::none: return "none";
    }
    return "?";
}

inline HypothesisMode hypothesis_mode_from_string(const std::string& s) {
    if (s == "classic") return HypothesisMode::classic;
    if (s == "normal") return HypothesisMode::normal;
    if (s == "co-hyponormal") return HypothesisMode::co_hyponormal;
    if (s == "none") return HypothesisMode::none;
    throw ValueError("unknown hypothesis mode: " + s);
}

} // namespace reidlab
