#include "hkgic/model.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>
#include <utility>

namespace hkgic {

namespace {

constexpr double kSplitRelTol = 1e-12;

void require(bool ok, const char* field, const char* what) {
    if (!ok) {
        throw std::domain_error(std::string(field) + " " + what);
    }
}

bool sums_to(double u, double v, double total) {
    return std::abs((u + v) - total) <= kSplitRelTol * std::max(1.0, std::abs(total));
}

}  // namespace

GicChannel::GicChannel(double p1, double p2, double a, double b, double n1, double n2)
    : p1_(p1), p2_(p2), a_(a), b_(b), n1_(n1), n2_(n2) {
    require(std::isfinite(p1) && p1 > 0, "p1", "must be finite and > 0");
    require(std::isfinite(p2) && p2 > 0, "p2", "must be finite and > 0");
    require(std::isfinite(a) && a >= 0, "a", "must be finite and >= 0");
    require(std::isfinite(b) && b >= 0, "b", "must be finite and >= 0");
    require(std::isfinite(n1) && n1 > 0, "n1", "must be finite and > 0");
    require(std::isfinite(n2) && n2 > 0, "n2", "must be finite and > 0");
}

PowerSplit::PowerSplit(const GicChannel& channel, double pu1, double pv1, double pu2, double pv2)
    : pu1_(pu1), pv1_(pv1), pu2_(pu2), pv2_(pv2) {
    require(std::isfinite(pu1) && pu1 >= 0, "pu1", "must be finite and >= 0");
    require(std::isfinite(pv1) && pv1 >= 0, "pv1", "must be finite and >= 0");
    require(std::isfinite(pu2) && pu2 >= 0, "pu2", "must be finite and >= 0");
    require(std::isfinite(pv2) && pv2 >= 0, "pv2", "must be finite and >= 0");
    require(sums_to(pu1, pv1, channel.p1()), "pu1+pv1", "must equal p1");
    require(sums_to(pu2, pv2, channel.p2()), "pu2+pv2", "must equal p2");
    lambda1_ = pv1 / channel.p1();
    lambda2_ = pv2 / channel.p2();
}

namespace {

// Split p into (common, private) with private ~= lambda * p and a sum that
// is exactly p: whichever part is at least p / 2 is computed first so the
// other subtraction is exact.
std::pair<double, double> split_exact(double p, double lambda) {
    double priv = lambda * p;
    const double common = p - priv;
    if (priv < 0.5 * p) priv = p - common;
    return {common, priv};
}

}  // namespace

PowerSplit PowerSplit::from_private_fractions(const GicChannel& channel, double lambda1, double lambda2) {
    require(std::isfinite(lambda1) && lambda1 >= 0 && lambda1 <= 1, "lambda1", "must lie in [0, 1]");
    require(std::isfinite(lambda2) && lambda2 >= 0 && lambda2 <= 1, "lambda2", "must lie in [0, 1]");
    PowerSplit s;
    std::tie(s.pu1_, s.pv1_) = split_exact(channel.p1(), lambda1);
    std::tie(s.pu2_, s.pv2_) = split_exact(channel.p2(), lambda2);
    s.lambda1_ = lambda1;
    s.lambda2_ = lambda2;
    return s;
}

bool PowerSplit::consistent_with(const GicChannel& channel) const {
    return pu1_ >= 0 && pv1_ >= 0 && pu2_ >= 0 && pv2_ >= 0 && sums_to(pu1_, pv1_, channel.p1()) &&
           sums_to(pu2_, pv2_, channel.p2());
}

PowerSplit PowerSplit::swapped() const {
    PowerSplit s;
    s.pu1_ = pu2_;
    s.pv1_ = pv2_;
    s.pu2_ = pu1_;
    s.pv2_ = pv1_;
    s.lambda1_ = lambda2_;
    s.lambda2_ = lambda1_;
    return s;
}

double awgn_capacity(double snr) {
    if (!std::isfinite(snr) || snr < 0) {
        throw std::domain_error("awgn_capacity: snr must be finite and >= 0");
    }
    return 0.5 * std::log2(1.0 + snr);
}

}  // namespace hkgic
