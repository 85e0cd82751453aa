#pragma once

#include <cstdint>
#include <vector>

#include "mls/model.hpp"
#include "mls/rational.hpp"

namespace mls {

// max(ceil(sum p / m), max p). Valid for integral processing times and never
// above the optimal makespan.
Time lower_bound(const Instance& instance);

struct OracleLimits {
  int size_cap = 16;             // reject instances with more jobs than this
  std::uint64_t node_limit = 0;  // 0 = unlimited, else stop after this many search nodes
};

struct OptResult {
  Time opt_makespan = 0;            // exact optimum when proven, else the best upper bound found
  std::uint64_t explored = 0;       // branch-and-bound nodes visited
  bool proven = true;               // false when the node limit stopped the search
  std::vector<int> machine_of_job;  // witness assignment, list-major job order
};

// Exact optimal makespan by depth-first branch and bound over the m^n
// assignment space: jobs pre-sorted non-increasing, the incumbent starts at
// the LPT makespan, and a node branches at most once per distinct machine
// load (in particular into at most one currently-empty machine). A branch is
// cut when max(placed max, ceil(sum p / m), min load + next job) cannot beat
// the incumbent. Throws Error(InstanceTooLarge) when n exceeds the size cap;
// a node-limited search returns proven == false and the incumbent is only an
// upper bound.
OptResult opt_makespan(const Instance& instance, const OracleLimits& limits = {});

// alg/opt as an exact rational. Throws Error(ZeroOpt) when opt < 1.
Rational competitive_ratio(Time alg_makespan, Time opt);

}  // namespace mls
