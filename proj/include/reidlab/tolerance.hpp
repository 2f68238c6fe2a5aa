#pragma once

#include "errors.hpp"

namespace reidlab {

/// Every numerical threshold used by the library, in one value.
///
/// All tolerances are relative: a predicate on M compares its defect against
/// predicate_tol * max(1, ||M||^p) for the appropriate power p, so the zero
/// matrix is handled without division hazards.
struct ToleranceProfile {
    double predicate_tol = 1e-8;      ///< self-adjointness / PSD / contraction slack
    double rank_tol = 1e-10;          ///< pseudoinverse truncation, relative to max |eigenvalue|
    double gelfand_tol = 1e-8;        ///< stopping threshold for the spectral-radius iterates
    int gelfand_max_squarings = 60;
    double jacobi_tol = 1e-12;        ///< off-diagonal Frobenius threshold, relative to ||M||_F
    int jacobi_max_sweeps = 100;

    void validate() const {
        if (!(predicate_tol > 0) || !(rank_tol > 0) || !(gelfand_tol > 0) || !(jacobi_tol > 0))
            throw ValueError("ToleranceProfile: tolerances must be positive");
        if (gelfand_max_squarings < 1 || jacobi_max_sweeps < 1)
            throw ValueError("ToleranceProfile: iteration caps must be >= 1");
    }
};

} // namespace reidlab
