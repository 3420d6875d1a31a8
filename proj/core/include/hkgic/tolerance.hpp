#pragma once

namespace hkgic {

/// Geometric comparison tolerance shared by the polytope routines.
inline constexpr double kGeomTol = 1e-9;

/// Relative tolerance for decisions that must not move the region itself:
/// dropping implied rows, merging vertices, pinning an optimal face.
inline constexpr double kRoundingTol = 1e-12;

/// Coincidence tolerance for the claim checks, in bits per coordinate.
inline constexpr double kClaimTol = 1e-6;

struct Tolerances {
    double geom = kGeomTol;
    double claim = kClaimTol;
};

}  // namespace hkgic
