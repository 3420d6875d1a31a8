#include "hkgic/miterms.hpp"

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace hkgic {

namespace {

void check_split(const GicChannel& channel, const PowerSplit& split) {
    if (!split.consistent_with(channel)) {
        throw std::domain_error("power split is inconsistent with channel powers");
    }
}

// Layer indices inside the joint covariance.
enum Layer : int { kU1 = 0, kU2 = 1, kV1 = 2, kV2 = 3, kY = 4 };

struct TermSpec {
    int receiver;               // 1 or 2
    std::vector<int> signal;    // S
    std::vector<int> given;     // T
};

TermSpec term_spec(std::size_t term) {
    switch (term) {
        case 1: return {1, {kU1}, {kU2, kV1}};
        case 2: return {2, {kU1}, {kU2, kV2}};
        case 3: return {1, {kU2}, {kU1, kV1}};
        case 4: return {2, {kU2}, {kU1, kV2}};
        case 5: return {1, {kV1}, {kU1, kU2}};
        case 6: return {2, {kV2}, {kU1, kU2}};
        case 7: return {1, {kU1, kU2}, {kV1}};
        case 8: return {2, {kU1, kU2}, {kV2}};
        case 9: return {1, {kU1, kV1}, {kU2}};
        case 10: return {2, {kU2, kV2}, {kU1}};
        case 11: return {1, {kU2, kV1}, {kU1}};
        case 12: return {2, {kU1, kV2}, {kU2}};
        case 13: return {1, {kU1, kU2, kV1}, {}};
        case 14: return {2, {kU1, kU2, kV2}, {}};
        default: throw std::domain_error("mi_oracle: term index must be in 1..14");
    }
}

// Variance of the single Y entry conditioned on the listed layers, by Schur
// complement. Zero-power layers give a singular block; the pseudo-inverse
// treats conditioning on a constant as a no-op.
double conditional_variance(const Eigen::Matrix<double, 5, 5>& cov, const std::vector<int>& given) {
    const double syy = cov(kY, kY);
    if (given.empty()) {
        return syy;
    }
    const auto n = static_cast<Eigen::Index>(given.size());
    Eigen::MatrixXd stt(n, n);
    Eigen::VectorXd sty(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        sty(i) = cov(given[i], kY);
        for (Eigen::Index j = 0; j < n; ++j) {
            stt(i, j) = cov(given[i], given[j]);
        }
    }
    const Eigen::VectorXd w = stt.completeOrthogonalDecomposition().pseudoInverse() * sty;
    return syy - sty.dot(w);
}

}  // namespace

HkBounds compute_bounds(const GicChannel& channel, const PowerSplit& split) {
    check_split(channel, split);
    const double a = channel.a();
    const double b = channel.b();
    const double pu1 = split.pu1(), pv1 = split.pv1(), pu2 = split.pu2(), pv2 = split.pv2();

    // Effective noise: the other user's private layer is never decoded.
    const double d1 = channel.n1() + a * pv2;
    const double d2 = channel.n2() + b * pv1;

    HkBounds out;
    out[1] = awgn_capacity(pu1 / d1);
    out[2] = awgn_capacity(b * pu1 / d2);
    out[3] = awgn_capacity(a * pu2 / d1);
    out[4] = awgn_capacity(pu2 / d2);
    out[5] = awgn_capacity(pv1 / d1);
    out[6] = awgn_capacity(pv2 / d2);
    out[7] = awgn_capacity((pu1 + a * pu2) / d1);
    out[8] = awgn_capacity((b * pu1 + pu2) / d2);
    out[9] = awgn_capacity((pu1 + pv1) / d1);
    out[10] = awgn_capacity((pu2 + pv2) / d2);
    out[11] = awgn_capacity((a * pu2 + pv1) / d1);
    out[12] = awgn_capacity((b * pu1 + pv2) / d2);
    out[13] = awgn_capacity((pu1 + pv1 + a * pu2) / d1);
    out[14] = awgn_capacity((b * pu1 + pu2 + pv2) / d2);
    return out;
}

double mi_oracle(const GicChannel& channel, const PowerSplit& split, std::size_t term) {
    const TermSpec spec = term_spec(term);
    check_split(channel, split);

    // Amplitude gains of each layer into the observed Yk.
    std::array<double, 4> gain{};
    std::array<double, 4> power{split.pu1(), split.pu2(), split.pv1(), split.pv2()};
    double noise = 0;
    if (spec.receiver == 1) {
        gain = {1.0, std::sqrt(channel.a()), 1.0, std::sqrt(channel.a())};
        noise = channel.n1();
    } else {
        gain = {std::sqrt(channel.b()), 1.0, std::sqrt(channel.b()), 1.0};
        noise = channel.n2();
    }

    Eigen::Matrix<double, 5, 5> cov = Eigen::Matrix<double, 5, 5>::Zero();
    double var_y = noise;
    for (int k = 0; k < 4; ++k) {
        cov(k, k) = power[k];
        cov(k, kY) = cov(kY, k) = gain[k] * power[k];
        var_y += gain[k] * gain[k] * power[k];
    }
    cov(kY, kY) = var_y;

    std::vector<int> given_and_signal = spec.given;
    given_and_signal.insert(given_and_signal.end(), spec.signal.begin(), spec.signal.end());

    const double num = conditional_variance(cov, spec.given);
    const double den = conditional_variance(cov, given_and_signal);
    if (!(den > 0) || !(num > 0)) {
        throw std::domain_error("mi_oracle: singular conditional covariance");
    }
    return 0.5 * std::log2(num / den);
}

}  // namespace hkgic
