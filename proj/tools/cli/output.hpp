#pragma once

#include <span>
#include <string>

#include <json.hpp>

namespace hkgic::cli {

using Json = nlohmann::ordered_json;

/// Decimal text with 12 significant digits; -0 prints as 0 and infinities
/// as inf / -inf.
std::string format_number(double v);

/// A JSON number rounded to 12 significant digits, or the format_number
/// string when v is not finite.
Json json_number(double v);

Json json_numbers(std::span<const double> v);

/// Numbers joined by single spaces.
std::string join_numbers(std::span<const double> v);

/// CSV field, quoted when it holds a comma, quote or newline.
std::string csv_field(const std::string& s);

}  // namespace hkgic::cli
