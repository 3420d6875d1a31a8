#include "run_config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "hkgic/hkregion.hpp"

namespace hkgic::cli {

namespace {

double required(const std::optional<double>& v, const char* field) {
    if (!v) {
        throw ConfigError(std::string(field) + " is required");
    }
    return *v;
}

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<double> parse_mu_list(const std::string& text) {
    std::vector<double> mus;
    if (trim(text).empty()) {
        throw ConfigError("mu list is empty");
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find(',', start), text.size());
        const std::string item = trim(text.substr(start, end - start));
        double v = 0;
        if (item == "inf") {
            v = kMuInfinity;
        } else {
            char* stop = nullptr;
            v = std::strtod(item.c_str(), &stop);
            if (item.empty() || *stop != '\0' || std::isnan(v)) {
                throw ConfigError("mu entry '" + item + "' is not a number");
            }
        }
        if (!(v >= 0)) {
            throw ConfigError("mu entry '" + item + "' must be >= 0");
        }
        mus.push_back(v);
        start = end + 1;
    }
    return mus;
}

RunConfig validate(const RawConfig& raw) {
    const double p1 = required(raw.p1, "p1");
    const double p2 = required(raw.p2, "p2");
    const double a = required(raw.a, "a");
    const double b = required(raw.b, "b");
    const double n1 = required(raw.n1, "n1");
    const double n2 = required(raw.n2, "n2");
    std::optional<GicChannel> channel;
    try {
        channel.emplace(p1, p2, a, b, n1, n2);
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }
    RunConfig cfg(*channel);
    if (raw.grid < 2) {
        throw ConfigError("grid must be >= 2");
    }
    cfg.grid = raw.grid;
    if (raw.mu) {
        cfg.mus = parse_mu_list(*raw.mu);
        std::sort(cfg.mus.begin(), cfg.mus.end());
        cfg.mu_given = true;
    } else {
        cfg.mus = default_mu_sweep();
    }
    if (raw.format == "csv") {
        cfg.format = Format::kCsv;
    } else if (raw.format == "json") {
        cfg.format = Format::kJson;
    } else {
        throw ConfigError("format must be csv or json");
    }
    cfg.out = raw.out;
    if (!(raw.tol_geom > 0) || !std::isfinite(raw.tol_geom)) {
        throw ConfigError("tol-geom must be finite and > 0");
    }
    if (!(raw.tol_claim > 0) || !std::isfinite(raw.tol_claim)) {
        throw ConfigError("tol-claim must be finite and > 0");
    }
    cfg.tol = {raw.tol_geom, raw.tol_claim};
    if (!(raw.lambda1 >= 0 && raw.lambda1 <= 1)) {
        throw ConfigError("lambda1 must lie in [0, 1]");
    }
    if (!(raw.lambda2 >= 0 && raw.lambda2 <= 1)) {
        throw ConfigError("lambda2 must lie in [0, 1]");
    }
    cfg.lambda1 = raw.lambda1;
    cfg.lambda2 = raw.lambda2;
    return cfg;
}

}  // namespace hkgic::cli
