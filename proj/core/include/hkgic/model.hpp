#pragma once

#include <stdexcept>
#include <string>

namespace hkgic {

/// Two-user Gaussian interference channel in canonical form:
///   Y1 = X1 + sqrt(a) X2 + Z1,   Y2 = sqrt(b) X1 + X2 + Z2,
/// with Zi ~ N(0, ni). All quantities are linear (not dB).
class GicChannel {
public:
    /// Throws std::domain_error naming the first offending field.
    GicChannel(double p1, double p2, double a, double b, double n1, double n2);

    double p1() const { return p1_; }
    double p2() const { return p2_; }
    double a() const { return a_; }
    double b() const { return b_; }
    double n1() const { return n1_; }
    double n2() const { return n2_; }

    /// Exchange the roles of the two users.
    GicChannel swapped() const { return {p2_, p1_, b_, a_, n2_, n1_}; }

    bool operator==(const GicChannel&) const = default;

private:
    double p1_, p2_, a_, b_, n1_, n2_;
};

/// Superposition layers: U (common, decoded at both receivers) and
/// V (private, decoded only at its own receiver).
class PowerSplit {
public:
    /// Validates pu1 + pv1 = p1 and pu2 + pv2 = p2 (relative 1e-12).
    PowerSplit(const GicChannel& channel, double pu1, double pv1, double pu2, double pv2);

    /// lambda1, lambda2 in [0, 1] are the private-power fractions.
    static PowerSplit from_private_fractions(const GicChannel& channel, double lambda1, double lambda2);

    double pu1() const { return pu1_; }
    double pv1() const { return pv1_; }
    double pu2() const { return pu2_; }
    double pv2() const { return pv2_; }

    /// Private fraction pv/p of each user.
    double lambda1() const { return lambda1_; }
    double lambda2() const { return lambda2_; }

    /// True if the split still satisfies its sum invariants for `channel`.
    bool consistent_with(const GicChannel& channel) const;

    /// The split of the relabeled channel (users exchanged).
    PowerSplit swapped() const;

    bool operator==(const PowerSplit&) const = default;

private:
    PowerSplit() = default;

    double pu1_ = 0, pv1_ = 0, pu2_ = 0, pv2_ = 0;
    double lambda1_ = 0, lambda2_ = 0;
};

/// Rates of the four layers, bits per channel use.
struct RateTuple4 {
    double ru1 = 0;
    double ru2 = 0;
    double rv1 = 0;
    double rv2 = 0;
};

/// End-to-end user rates, bits per channel use.
struct RatePair {
    double r1 = 0;
    double r2 = 0;

    static RatePair from_layers(const RateTuple4& t) { return {t.ru1 + t.rv1, t.ru2 + t.rv2}; }
};

/// (1/2) log2(1 + snr). Throws std::domain_error for negative or non-finite snr.
double awgn_capacity(double snr);

}  // namespace hkgic
