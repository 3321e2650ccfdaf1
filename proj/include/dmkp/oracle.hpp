#pragma once

#include <set>
#include <vector>

#include "dmkp/instance.hpp"

namespace dmkp {

struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr long long kDefaultOracleCap = 10'000'000;

// Exhaustive maximum of c^T x over the box intersected with Ax <= b.
// Componentwise prefix pruning (valid because A >= 0).  Witness is the
// lexicographically smallest maximizer.  `reversed` flips the enumeration
// order of each coordinate; the optimum value must not depend on it.
SolveReport brute_force_knapsack(const KnapsackInstance& inst,
                                 long long cap = kDefaultOracleCap,
                                 bool reversed = false);

// Exhaustive maximum over {Ax = b, lo <= x <= up}, no pruning (entries may be
// negative).  feasible=false when no box point satisfies Ax = b.
SolveReport brute_force_standard(const StandardFormInstance& inst,
                                 long long cap = kDefaultOracleCap,
                                 bool reversed = false);

// {Ax : x integer, lo <= x <= up, ||x||_1 <= gamma} by direct enumeration.
// Used to confirm the 2^m * ceil(1+gamma)^m * Delta counting bound.
std::set<std::vector<Int>> enumerate_reachable(const Mat& a, long long gamma,
                                               const std::vector<long long>& lo,
                                               const std::vector<long long>& up,
                                               long long cap = kDefaultOracleCap);

}  // namespace dmkp
