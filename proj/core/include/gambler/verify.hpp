#pragma once

#include <string>
#include <vector>

namespace gambler {

struct PropertyResult {
  std::string name;
  bool pass;
  std::string detail;  // first counterexample or the checked extent
};

/// Runs the cross-module invariant suite. `deep` widens lattice levels,
/// parameter grids and sample counts.
std::vector<PropertyResult> run_properties(bool deep);

}  // namespace gambler
