#pragma once

#include <cmath>
#include <string>

#include "spectra.hpp"

namespace reidlab {

namespace detail {

/// Eigensystem of a self-adjoint A with eigenvalues in [-tol, 0) clamped to
/// 0. Eigenvalues more negative than the clamp window are a genuine
/// hypothesis violation, not noise.
inline HermitianEigen psd_eigen(const ComplexMatrix& a, const ToleranceProfile& profile,
                                const char* who) {
    HermitianEigen eig = eig_hermitian(a, profile);
    double top = 0.0;
    for (double lam : eig.values) top = std::max(top, std::abs(lam));
    double clamp = profile.predicate_tol * std::max(1.0, top);
    for (double& lam : eig.values) {
        if (lam < -clamp)
            throw HypothesisError(std::string(who) + ": input is significantly indefinite");
        if (lam < 0.0) lam = 0.0;
    }
    return eig;
}

} // namespace detail

/// The unique positive square root of a PSD matrix.
inline ComplexMatrix sqrt_psd(const ComplexMatrix& a, const ToleranceProfile& profile = {}) {
    HermitianEigen eig = detail::psd_eigen(a, profile, "sqrt_psd");
    return assemble_from_eigen(eig, [](double lam) { return std::sqrt(lam); });
}

/// |T| = positive square root of T* T.
inline ComplexMatrix abs_value(const ComplexMatrix& t, const ToleranceProfile& profile = {}) {
    return sqrt_psd(hermitize(adjoint(t) * t), profile);
}

/// Spectral power A^alpha for PSD A and alpha > 0. alpha = 0 is excluded
/// (callers wanting A^0 use the identity).
inline ComplexMatrix power_psd(const ComplexMatrix& a, double alpha,
                               const ToleranceProfile& profile = {}) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw ValueError("power_psd: alpha must be positive and finite");
    HermitianEigen eig = detail::psd_eigen(a, profile, "power_psd");
    return assemble_from_eigen(eig, [alpha](double lam) { return std::pow(lam, alpha); });
}

/// T = U |T| with U a partial isometry vanishing on ker|T|.
struct PolarParts {
    ComplexMatrix isometry_part; ///< U
    ComplexMatrix modulus;       ///< |T|, positive semidefinite
};

/// Moore-Penrose pseudoinverse of a general square matrix via
/// B+ = (B* B)+ B*.
inline ComplexMatrix pinv_general(const ComplexMatrix& b, const ToleranceProfile& profile = {}) {
    return pinv_hermitian(hermitize(adjoint(b) * b), profile) * adjoint(b);
}

/// Polar decomposition T = U |T|. U = T |T|+ maps |T|x to Tx and is zero on
/// ker|T|, the canonical partial-isometry convention.
inline PolarParts polar_decompose(const ComplexMatrix& t, const ToleranceProfile& profile = {}) {
    PolarParts parts;
    parts.modulus = abs_value(t, profile);
    parts.isometry_part = t * pinv_hermitian(parts.modulus, profile);
    return parts;
}

} // namespace reidlab
