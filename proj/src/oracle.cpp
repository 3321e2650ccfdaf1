#include "dmkp/oracle.hpp"

#include <algorithm>

namespace dmkp {

namespace {

void check_cap(const std::vector<long long>& lo, const std::vector<long long>& up, long long cap) {
  Int volume = 1;
  for (size_t j = 0; j < lo.size(); ++j) volume *= make_int(up[j] - lo[j] + 1);
  if (volume > make_int(cap)) throw CapExceededError("search space " + volume.get_str() + " exceeds cap " + std::to_string(cap));
}

}  // namespace

SolveReport brute_force_knapsack(const KnapsackInstance& inst, long long cap, bool reversed) {
  require_valid(inst);
  check_cap(std::vector<long long>(inst.n, 0), inst.u, cap);

  SolveReport best;
  best.mode = SolveMode::kOracle;
  best.value = 0;
  best.witness.assign(inst.n, 0);

  std::vector<long long> x(inst.n, 0);
  std::vector<Int> partial(inst.m, Int(0));  // A_{[1..k]} x prefix sums
  long long visited = 0;

  // DFS in lexicographic order over x; the first maximizer found is the
  // lexicographically smallest because improvements are strict.
  auto rec = [&](auto&& self, int j, const Int& profit) -> void {
    if (j == inst.n) {
      ++visited;
      if (profit > best.value) {
        best.value = profit;
        best.witness = x;
      }
      return;
    }
    for (long long step = 0; step <= inst.u[j]; ++step) {
      long long z = reversed ? inst.u[j] - step : step;
      bool fits = true;
      for (int i = 0; i < inst.m; ++i)
        if (partial[i] + make_int(inst.A.at(i, j)) * make_int(z) > make_int(inst.b[i])) { fits = false; break; }
      if (!fits) {
        if (!reversed) break;  // A >= 0: larger z only grows the prefix sums
        continue;
      }
      for (int i = 0; i < inst.m; ++i) partial[i] += make_int(inst.A.at(i, j)) * make_int(z);
      x[j] = z;
      self(self, j + 1, Int(profit + make_int(inst.c[j]) * make_int(z)));
      for (int i = 0; i < inst.m; ++i) partial[i] -= make_int(inst.A.at(i, j)) * make_int(z);
      x[j] = 0;
    }
  };
  rec(rec, 0, Int(0));

  best.stats["points_visited"] = visited;
  return best;
}

SolveReport brute_force_standard(const StandardFormInstance& inst, long long cap, bool reversed) {
  require_valid(inst);
  check_cap(inst.lo, inst.up, cap);

  SolveReport best;
  best.mode = SolveMode::kOracle;
  best.feasible = false;

  std::vector<long long> x = inst.lo;
  long long visited = 0;
  // Plain odometer over the whole box; equality with general signs admits no
  // prefix pruning.
  while (true) {
    ++visited;
    std::vector<Int> ax = inst.A.mul_i64(x);
    bool eq = true;
    for (int i = 0; i < inst.m; ++i)
      if (ax[i] != make_int(inst.b[i])) { eq = false; break; }
    if (eq) {
      Int v = objective_at(inst.c, x);
      if (!best.feasible || v > best.value) {
        best.feasible = true;
        best.value = v;
        best.witness = x;
      }
    }
    int j = inst.n - 1;
    while (j >= 0) {
      long long& xj = x[j];
      if (!reversed ? xj < inst.up[j] : xj > inst.lo[j]) { xj += reversed ? -1 : 1; break; }
      xj = reversed ? inst.up[j] : inst.lo[j];
      --j;
    }
    if (j < 0) break;
  }
  if (!best.feasible) best.witness.clear();
  best.stats["points_visited"] = visited;
  return best;
}

std::set<std::vector<Int>> enumerate_reachable(const Mat& a, long long gamma,
                                               const std::vector<long long>& lo,
                                               const std::vector<long long>& up,
                                               long long cap) {
  check_cap(lo, up, cap);
  const int n = a.cols();
  std::set<std::vector<Int>> out;
  std::vector<long long> x = lo;
  while (true) {
    long long l1 = 0;
    for (long long v : x) l1 += std::abs(v);
    if (l1 <= gamma) out.insert(a.mul_i64(x));
    int j = n - 1;
    while (j >= 0) {
      if (x[j] < up[j]) { ++x[j]; break; }
      x[j] = lo[j];
      --j;
    }
    if (j < 0) break;
  }
  return out;
}

}  // namespace dmkp
