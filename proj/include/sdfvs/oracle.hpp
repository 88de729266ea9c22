#pragma once

#include "sdfvs/instances.hpp"
#include "sdfvs/separators.hpp"

namespace sdfvs {

struct OracleBudget {
  int max_vertices = 10;
  long long max_subsets = 5'000'000;
};

// brute force asked to do more than its budget allows; it refuses instead of
// silently truncating
class OracleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Smallest deletion set of size <= k, lexicographically least among minimum,
// by exhaustive subset search.
std::optional<Solution> brute_force_solve(const EdgeInstance& inst, const OracleBudget& budget = {});

// Definition-level enumeration: all minimal separators of size <= k passing
// the literal non-domination check.
SeparatorList brute_force_important_separators(const Digraph& g, const Bitset& x, const Bitset& y,
                                               int k, const OracleBudget& budget = {});

// All heads of S-arcs witnessed as k-critical by some (u, W), found by
// exhaustive enumeration of W.
Bitset brute_force_critical(const Digraph& g, const std::vector<char>& s_mask, const Bitset& t0,
                            int k, const OracleBudget& budget = {});

}  // namespace sdfvs
