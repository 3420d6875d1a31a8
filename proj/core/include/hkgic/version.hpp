#pragma once

namespace hkgic {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hkgic
