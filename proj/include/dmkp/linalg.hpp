#pragma once

#include <vector>

#include "dmkp/matrix.hpp"
#include "dmkp/numbers.hpp"

namespace dmkp {

// Exact determinant of a k x k integer matrix by Bareiss fraction-free
// elimination.  All divisions are exact; no floating point.
Int det_exact(std::vector<std::vector<Int>> a);

// rank(A) over the rationals, computed with fraction-free elimination on the
// integer entries.
int rank(const Mat& a);

// Delta_k(A): maximum |det| over all k x k submatrices, by enumeration of all
// C(m,k) * C(n,k) minors.  `reversed` enumerates index subsets in the opposite
// order; the result must not depend on it (self-consistency hook for tests).
Int delta_k(const Mat& a, int k, bool reversed = false);

// Delta(A) = Delta_rank(A)(A).  Throws std::invalid_argument for the zero
// matrix (rank 0).
Int delta(const Mat& a);

}  // namespace dmkp
