#include "dmkp/greedy.hpp"

#include <stdexcept>

#include "dmkp/ratlp.hpp"

namespace dmkp {

KnapsackInstance preprocess(const KnapsackInstance& inst) {
  require_valid(inst);
  KnapsackInstance out = inst;
  for (int j = 0; j < inst.n; ++j) {
    for (int i = 0; i < inst.m; ++i) {
      if (inst.A.at(i, j) > inst.b[i]) {
        out.u[j] = 0;
        break;
      }
    }
  }
  return out;
}

SolveReport greedy_solve(const KnapsackInstance& inst) {
  const KnapsackInstance pre = preprocess(inst);
  const LpVertexSolution lp = solve_relaxation(pre);
  if (static_cast<int>(lp.fractional_set.size()) > pre.m)
    throw std::logic_error("greedy: LP vertex with more than m fractional coordinates");

  std::vector<long long> floor_vec(pre.n);
  for (int j = 0; j < pre.n; ++j) floor_vec[j] = to_i64(rat_floor(lp.x[j]));
  const Int floor_value = objective_at(pre.c, floor_vec);

  int best_single = -1;
  for (int i : lp.fractional_set)
    if (best_single < 0 || pre.c[i] > pre.c[best_single]) best_single = i;

  SolveReport rep;
  rep.mode = SolveMode::kGreedy;
  if (best_single >= 0 && make_int(pre.c[best_single]) > floor_value) {
    rep.witness.assign(pre.n, 0);
    rep.witness[best_single] = 1;
    rep.value = make_int(pre.c[best_single]);
  } else {
    rep.witness = floor_vec;
    rep.value = floor_value;
  }
  rep.stats["lp_pivots"] = lp.pivots;
  rep.stats["fractional"] = static_cast<long long>(lp.fractional_set.size());

  auto bad = check_report(inst, rep);
  if (!bad.empty()) throw std::logic_error("greedy: " + bad.front());
  return rep;
}

}  // namespace dmkp
