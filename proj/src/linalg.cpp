#include "dmkp/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace dmkp {

Int det_exact(std::vector<std::vector<Int>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (int p = 0; p < n - 1; ++p) {
    if (a[p][p] == 0) {
      int swap_row = -1;
      for (int i = p + 1; i < n; ++i)
        if (a[i][p] != 0) { swap_row = i; break; }
      if (swap_row < 0) return 0;
      std::swap(a[p], a[swap_row]);
      sign = -sign;
    }
    for (int i = p + 1; i < n; ++i) {
      for (int j = p + 1; j < n; ++j) {
        a[i][j] = (a[p][p] * a[i][j] - a[i][p] * a[p][j]) / prev;  // exact division (Bareiss)
      }
      a[i][p] = 0;
    }
    prev = a[p][p];
  }
  return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

int rank(const Mat& m) {
  std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = make_int(m.at(i, j));

  int r = 0;
  Int prev = 1;
  for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (a[i][col] != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < m.rows(); ++i) {
      for (int j = col + 1; j < m.cols(); ++j)
        a[i][j] = (a[r][col] * a[i][j] - a[i][col] * a[r][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

namespace {

// Visits all k-subsets of [0, n) in lexicographic order (or reversed).
template <class Fn>
void for_each_subset(int n, int k, bool reversed, Fn&& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<std::vector<int>> all;
  while (true) {
    all.push_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  if (reversed) std::reverse(all.begin(), all.end());
  for (const auto& s : all) fn(s);
}

}  // namespace

Int delta_k(const Mat& a, int k, bool reversed) {
  if (k < 1 || k > std::min(a.rows(), a.cols()))
    throw std::invalid_argument("delta_k: k out of range");
  Int best = 0;
  for_each_subset(a.rows(), k, reversed, [&](const std::vector<int>& rows) {
    for_each_subset(a.cols(), k, reversed, [&](const std::vector<int>& cols) {
      std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub[i][j] = make_int(a.at(rows[i], cols[j]));
      Int d = det_exact(std::move(sub));
      if (d < 0) d = -d;
      if (d > best) best = d;
    });
  });
  return best;
}

Int delta(const Mat& a) {
  const int r = rank(a);
  if (r == 0) throw std::invalid_argument("delta: zero matrix has no rank-order minor");
  return delta_k(a, r);
}

}  // namespace dmkp
