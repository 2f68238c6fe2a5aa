#pragma once

#include <stdexcept>

namespace reidlab {

/// Incompatible or invalid dimensions.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A non-finite (NaN/Inf) scalar was handed to a constructor.
struct ValueError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A theorem hypothesis fails beyond tolerance.
struct HypothesisError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Iteration failed to converge, or a computed quantity is inconsistent.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace reidlab
