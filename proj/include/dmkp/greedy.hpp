#pragma once

#include "dmkp/instance.hpp"

namespace dmkp {

// Zeroes u_i for every item whose single unit already violates some row
// (A_{*i} <= b fails).  With A >= 0 any feasible x with x_i >= 1 satisfies
// A_{*i} <= Ax <= b, so the integer optimum is unchanged; remaining bounds are
// left alone.  Makes every single-item vector e_i with u_i >= 1 feasible.
KnapsackInstance preprocess(const KnapsackInstance& inst);

// 1/(m+1)-approximation: value = max(c^T floor(x_LP), max_{i in F} c_i) where
// F is the fractional support of an LP vertex optimum.  Preprocessing is
// re-applied internally, so the routine is safe on sub-problems with a
// modified right-hand side.  Ties go to the floor vector.
SolveReport greedy_solve(const KnapsackInstance& inst);

}  // namespace dmkp
