#pragma once

#include <map>
#include <vector>

#include "dmkp/instance.hpp"
#include "dmkp/numbers.hpp"

namespace dmkp {

// Parameters of the scheme for a given epsilon:
//   alpha = eps / (2(m+1)),  beta = alpha^2,  s = beta * C_gr,
//   gamma = (m+1)/alpha,     C = ceil((m+1)/beta),
//   H = { i : c_i > alpha * C_gr },  L = the rest.
// All arithmetic exact; epsilon is a rational in (0,1).
struct FptasParams {
  Rat epsilon;
  Rat alpha;
  Rat beta;
  Rat s;
  Rat gamma;
  Int cost_ceiling;
  Int greedy_value;
  std::vector<int> heavy;
  std::vector<int> light;
};

FptasParams make_fptas_params(const KnapsackInstance& pre, const Rat& epsilon, const Int& greedy_value);

// w_i = floor(c_i / s) for i in heavy, exact rational floor.  s must be
// positive; s = 0 means C_gr = 0 and the caller short-circuits.
std::vector<Int> scaled_costs(const std::vector<long long>& c, const Rat& s, const std::vector<int>& heavy);

// DP(k, c0) = all right-hand-side vectors y = A_{[1..k]} x reachable with
// w^T x = c0, 0 <= x <= u, y <= b, ||x||_1 <= floor(gamma), c0 <= C.  Cells
// keep the minimum l1 per y plus a parent step for witness reconstruction.
class CostLevelTable {
 public:
  using YVec = std::vector<long long>;
  struct Node {
    long long min_l1 = 0;
    long long step = 0;  // z used to enter this cell; parent is (k-1, c0 - z w_k, y - A_k z)
  };
  using Cell = std::map<YVec, Node>;

  // levels[k] maps c0 -> cell; only nonempty cells are materialized.
  std::vector<std::map<Int, Cell>> levels;
  long long states = 0;
  long long max_cell = 0;
  Int max_c0 = 0;  // largest scaled cost reached in any nonempty cell

  // Reconstructs the heavy witness (indexed by heavy position 0..k-1) for an
  // entry of levels[k].
  std::vector<long long> reconstruct(int k, const Int& c0, const YVec& y,
                                     const Mat& heavy_cols, const std::vector<Int>& w) const;
};

// Heavy columns only.  gamma_floor < 0 is treated as an empty budget.
CostLevelTable dp_by_costs(const Mat& heavy_cols, const std::vector<long long>& heavy_u,
                           const std::vector<long long>& b, const std::vector<Int>& w,
                           const Int& cost_ceiling, long long gamma_floor);

// The full scheme: value >= (1 - epsilon) * OPT, witness feasible, reported
// value is the true cost of the combined heavy + light witness.
SolveReport fptas_solve(const KnapsackInstance& inst, const Rat& epsilon);

}  // namespace dmkp
