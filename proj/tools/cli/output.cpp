#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace hkgic::cli {

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0) v = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    // A value that rounds to zero may still carry a sign.
    if (buf[0] == '-' && std::strtod(buf, nullptr) == 0) return "0";
    return buf;
}

Json json_number(double v) {
    if (!std::isfinite(v)) return format_number(v);
    return std::strtod(format_number(v).c_str(), nullptr);
}

Json json_numbers(std::span<const double> v) {
    Json arr = Json::array();
    for (double x : v) arr.push_back(json_number(x));
    return arr;
}

std::string join_numbers(std::span<const double> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += format_number(v[i]);
    }
    return s;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

}  // namespace hkgic::cli
