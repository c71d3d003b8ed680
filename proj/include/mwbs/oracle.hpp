#pragma once

#include <stdexcept>

#include "mwbs/cut_instance.hpp"
#include "mwbs/instance.hpp"

namespace mwbs {

struct OracleBudget {
  std::size_t max_edges = 16;
  std::size_t max_classes = 16;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive search over kept-edge subsets. Among optimal subsets the one
// with the numerically smallest kept bitmask (bit e = edge e) wins.
Solution brute_force_mwbs(const Instance& inst, const OracleBudget& budget = {});

// Exhaustive search over unions of classes; ties go to the smallest class bitmask.
Solution brute_force_cut(const CutInstance& cut, const OracleBudget& budget = {});

// Direct solver when one vertex meets every edge. Throws std::invalid_argument otherwise.
Solution star_solve(const Instance& inst);

}  // namespace mwbs
