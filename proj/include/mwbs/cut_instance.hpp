#pragma once

#include <vector>

#include "mwbs/instance.hpp"

namespace mwbs {

// A plane digraph whose edges are grouped into all-or-nothing classes. Zero
// weights are allowed. pairs groups class indices into sets of one or two
// classes that came from the same block of a section.
struct CutInstance {
  Instance instance;
  std::vector<std::vector<EdgeId>> classes;
  std::vector<std::vector<std::size_t>> pairs;
  Weight base_kept_weight = 0;
};

}  // namespace mwbs
