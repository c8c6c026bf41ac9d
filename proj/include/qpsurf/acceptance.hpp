#pragma once

// The acceptance criteria as runnable checks. Shared by the acceptance test
// binary and the CLI `selftest` verb.

#include <cstdint>
#include <string>
#include <vector>

#include "qpsurf/graph.hpp"

namespace qpsurf {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
  double seconds;
  double budget_seconds;
};

std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// Fullness decided independently of cycle_words: enumerate the cycle space
/// of the graph, keep the elements that are single simple cycles, and test
/// their free-group words for triviality.
bool brute_force_is_full(const CombedGraph& g);

}  // namespace qpsurf
