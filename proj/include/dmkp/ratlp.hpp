#pragma once

#include <vector>

#include "dmkp/instance.hpp"
#include "dmkp/numbers.hpp"

namespace dmkp {

// Exact vertex optimum of an LP relaxation.  x is feasible by substitution in
// rational arithmetic, the active constraints at x have full column rank, and
// at most m coordinates are fractional.
struct LpVertexSolution {
  enum class Status { kOptimal, kInfeasible };
  Status status = Status::kInfeasible;
  std::vector<Rat> x;                // n structural coordinates
  Rat objective = 0;
  std::vector<int> fractional_set;   // F = indices with non-integer x_j
  long long pivots = 0;
};

// max c^T x over {Ax <= b, 0 <= x <= u}.  Never infeasible or unbounded for
// valid knapsack data (x = 0 feasible, box finite).
LpVertexSolution solve_relaxation(const KnapsackInstance& inst);

// max c^T x over {Ax = b, lo <= x <= up}; may be infeasible.
LpVertexSolution solve_relaxation_standard(const StandardFormInstance& inst);

}  // namespace dmkp
