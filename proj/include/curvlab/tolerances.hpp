#pragma once

// Default numerical tolerances, named by role. Every tolerance a public
// operation applies is either one of these or an explicit parameter.

namespace curvlab::tol {

// Curvature symmetry validation, relative to the max-abs component of the input.
inline constexpr double kValidateRel = 1e-9;

// Gallery outputs must validate at this tighter relative tolerance.
inline constexpr double kGallery = 1e-12;

// Closed forms versus the brute-force contraction oracle, relative.
inline constexpr double kOracleRel = 1e-10;

// Anything routed through an eigensolver, relative.
inline constexpr double kEigenRel = 1e-8;

// Half-width of the "numerically zero" band when classifying partial sums.
inline constexpr double kVerdict = 1e-10;

// Values forced exactly by the algebra (orthogonality, pinned eigenvalues).
inline constexpr double kExact = 1e-12;

}  // namespace curvlab::tol
