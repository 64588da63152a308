#pragma once

#include <string>
#include <vector>

#include "rotstar/config.hpp"

namespace rotstar {

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;  // measured quantity or failure reason
};

/// Run the full property suite at the given configuration. `quick` skips the
/// slow direct-kernel cross-validation. Grid-resolution-sensitive properties
/// honor the configured panel counts, so a deliberately coarse configuration
/// fails the discrete fixed-point tolerance.
std::vector<PropertyResult> run_validation(const SolverConfig& config, bool quick);

}  // namespace rotstar
