#pragma once

#include <array>
#include <cstddef>

#include "hkgic/model.hpp"

namespace hkgic {

/// Number of rate constraints in the Han-Kobayashi system.
inline constexpr std::size_t kNumHkTerms = 14;

/// Right-hand sides of the fourteen HK rate constraints, in bits per
/// channel use. Index 1..14 follows the constraint order:
///
///   1  R_U1            <= I(U1;Y1|U2,V1)      8  R_U1+R_U2       <= I(U1,U2;Y2|V2)
///   2  R_U1            <= I(U1;Y2|U2,V2)      9  R_U1+R_V1       <= I(U1,V1;Y1|U2)
///   3  R_U2            <= I(U2;Y1|U1,V1)     10  R_U2+R_V2       <= I(U2,V2;Y2|U1)
///   4  R_U2            <= I(U2;Y2|U1,V2)     11  R_U2+R_V1       <= I(U2,V1;Y1|U1)
///   5  R_V1            <= I(V1;Y1|U1,U2)     12  R_U1+R_V2       <= I(U1,V2;Y2|U2)
///   6  R_V2            <= I(V2;Y2|U1,U2)     13  R_U1+R_U2+R_V1  <= I(U1,U2,V1;Y1)
///   7  R_U1+R_U2       <= I(U1,U2;Y1|V1)     14  R_U1+R_U2+R_V2  <= I(U1,U2,V2;Y2)
///
/// V2 is never decoded at receiver 1 and V1 never at receiver 2; each
/// stays in its receiver's observation as Gaussian noise.
struct HkBounds {
    std::array<double, kNumHkTerms> values{};

    /// 1-based access matching the constraint numbering.
    double operator[](std::size_t term) const { return values.at(term - 1); }
    double& operator[](std::size_t term) { return values.at(term - 1); }
};

/// Closed-form Gaussian evaluation of all fourteen bounds.
/// Throws std::domain_error if `split` does not match the channel powers.
HkBounds compute_bounds(const GicChannel& channel, const PowerSplit& split);

/// Independent evaluation of bound `term` (1..14) from the joint covariance
/// of (U1, U2, V1, V2, Yk), as (1/2) log2(Var(Yk|T) / Var(Yk|T,S)).
/// Throws std::domain_error on a bad index, an inconsistent split, or a
/// singular conditional covariance.
double mi_oracle(const GicChannel& channel, const PowerSplit& split, std::size_t term);

}  // namespace hkgic
