#pragma once

// Word values on the highest weight vectors, as tabulated for the two
// level-one modules.

#include <string>
#include <vector>

#include "qfock/vectors.hpp"

namespace qfock {

struct GoldenEntry {
  int sector;
  std::string word;
  FockVector expected;
};

/// Ten entries each; sector 0 starts from 1, sector 1 from e^{alpha/2}.
const std::vector<GoldenEntry>& golden_table(int sector);

}  // namespace qfock
