#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hkgic/model.hpp"
#include "hkgic/tolerance.hpp"

namespace hkgic::cli {

/// Invalid or missing configuration; the message starts with the field name.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { kCsv, kJson };

/// Raw settings as given by flags and the config file; nothing checked yet.
struct RawConfig {
    std::optional<double> p1, p2, a, b, n1, n2;
    int grid = 101;
    std::optional<std::string> mu;
    std::string format = "csv";
    std::string out;
    double tol_geom = kGeomTol;
    double tol_claim = kClaimTol;
    double lambda1 = 0.5;
    double lambda2 = 0.5;
};

struct RunConfig {
    explicit RunConfig(GicChannel ch) : channel(std::move(ch)) {}

    GicChannel channel;
    int grid = 101;
    std::vector<double> mus;  // ascending; the default sweep when none given
    bool mu_given = false;
    Format format = Format::kCsv;
    std::string out;  // empty: standard output
    Tolerances tol;
    double lambda1 = 0.5;
    double lambda2 = 0.5;
};

/// Comma-separated weights; "inf" stands for the infinite weight. Throws
/// ConfigError on an empty list, a malformed entry or a negative weight.
std::vector<double> parse_mu_list(const std::string& text);

/// Throws ConfigError naming the first offending field.
RunConfig validate(const RawConfig& raw);

}  // namespace hkgic::cli
