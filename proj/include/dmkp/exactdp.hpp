#pragma once

#include <optional>
#include <vector>

#include "dmkp/instance.hpp"
#include "dmkp/numbers.hpp"

namespace dmkp {

// Knapsack turned into standard form with one slack column per row: slack
// costs 0, slack bounds [0, b_i].  Objectives coincide on corresponding
// solutions and the slack identity block keeps rank(A') = m.
StandardFormInstance to_standard_form(const KnapsackInstance& inst);

// The standard-form problem re-centered at the floor of an LP vertex optimum:
// x -> x - floor(x*).  radius is the l1 search budget; the default
// proximity_bound(m, Delta(A)) + m makes the restricted optimum the true one.
struct ShiftedInstance {
  StandardFormInstance base;
  bool lp_feasible = false;
  std::vector<long long> floor_x;
  std::vector<long long> lo_s, up_s;  // shifted bounds (lo_s may be negative)
  std::vector<Int> b_s;               // b - A floor(x*)
  Int radius = 0;
  Int delta = 0;                      // Delta(A), kept for reporting
  long long lp_pivots = 0;
};

ShiftedInstance shift(const StandardFormInstance& inst,
                      const std::optional<Int>& radius_override = std::nullopt);

// 0/1 step coefficients whose subset sums stay in [0, cap] and cover every
// integer in it: (1, 2, 4, ..., 2^{p-1}, cap - 2^p + 1), empty for cap = 0.
struct BinarySplit {
  long long cap = 0;
  std::vector<long long> steps;
};

BinarySplit binarize_range(long long cap);

struct ExactOptions {
  bool binarized = false;            // LEVELS: binarize multiplicity ranges
  bool validate_recurrence = false;  // PATHS: check every window against the naive recurrence
};

// Longest path in the triplet DAG (k, h, l): l tracks consumed |z| budget,
// terminals are (n, b', l) for every l <= radius.  States materialize on the
// fly in hash tables.
SolveReport solve_levels(const ShiftedInstance& sh, const ExactOptions& opt = {});

// Longest path in the pair DAG (k, h): each level's reachable set splits into
// chains along A_k and transitions are sliding-window maxima over a MaxQueue.
// Ties in value are broken toward the minimum-l1 path so the witness obeys
// the proximity bound.
SolveReport solve_paths(const ShiftedInstance& sh, const ExactOptions& opt = {});

enum class ExactVariant { kLevels, kLevelsBinarized, kPaths };

SolveReport solve_exact(const KnapsackInstance& inst, ExactVariant variant,
                        const std::optional<Int>& radius_override = std::nullopt,
                        const ExactOptions& opt = {});
SolveReport solve_exact(const StandardFormInstance& inst, ExactVariant variant,
                        const std::optional<Int>& radius_override = std::nullopt,
                        const ExactOptions& opt = {});

}  // namespace dmkp
