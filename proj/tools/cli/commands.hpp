#pragma once

#include <iosfwd>
#include <string>

#include "run_config.hpp"

namespace hkgic::cli {

/// Hull and raw-union vertices of the region over the split grid.
void cmd_region(const RunConfig& cfg, std::ostream& out);

/// One weighted-sum optimum per weight, ascending in mu.
void cmd_boundary(const RunConfig& cfg, std::ostream& out);

/// One claim report per split and claim, followed by verdict counts.
void cmd_verify(const RunConfig& cfg, std::ostream& out);

/// MAC1, MAC2, mac1 and mac2 for the split (lambda1, lambda2).
void cmd_mac_geometry(const RunConfig& cfg, std::ostream& out);

}  // namespace hkgic::cli
