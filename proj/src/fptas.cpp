#include "dmkp/fptas.hpp"

#include <algorithm>
#include <stdexcept>

#include "dmkp/greedy.hpp"

namespace dmkp {

FptasParams make_fptas_params(const KnapsackInstance& pre, const Rat& epsilon, const Int& greedy_value) {
  if (epsilon <= 0 || epsilon >= 1) throw std::invalid_argument("epsilon must lie in (0,1)");
  FptasParams p;
  p.epsilon = epsilon;
  p.alpha = epsilon / Rat(2 * (pre.m + 1));
  p.beta = p.alpha * p.alpha;
  p.greedy_value = greedy_value;
  p.s = p.beta * Rat(greedy_value);
  p.gamma = Rat(pre.m + 1) / p.alpha;
  p.cost_ceiling = rat_ceil(Rat(pre.m + 1) / p.beta);
  const Rat threshold = p.alpha * Rat(greedy_value);
  for (int i = 0; i < pre.n; ++i) {
    if (make_rat(pre.c[i]) > threshold)
      p.heavy.push_back(i);
    else
      p.light.push_back(i);
  }
  return p;
}

std::vector<Int> scaled_costs(const std::vector<long long>& c, const Rat& s, const std::vector<int>& heavy) {
  if (s <= 0) throw std::invalid_argument("scaled_costs: s must be positive (C_gr = 0 must short-circuit)");
  std::vector<Int> w;
  w.reserve(heavy.size());
  for (int i : heavy) w.push_back(rat_floor(Rat(make_rat(c[i]) / s)));
  return w;
}

CostLevelTable dp_by_costs(const Mat& heavy_cols, const std::vector<long long>& heavy_u,
                           const std::vector<long long>& b, const std::vector<Int>& w,
                           const Int& cost_ceiling, long long gamma_floor) {
  const int m = heavy_cols.rows();
  const int kmax = heavy_cols.cols();
  CostLevelTable t;
  t.levels.resize(kmax + 1);
  if (gamma_floor < 0 || cost_ceiling < 0) return t;

  t.levels[0][Int(0)][CostLevelTable::YVec(m, 0)] = {0, 0};
  t.states = 1;
  t.max_cell = 1;

  for (int k = 1; k <= kmax; ++k) {
    const std::vector<long long> col = heavy_cols.col(k - 1);
    long long zmax = std::min(gamma_floor, heavy_u[k - 1]);
    // z with col_i * z > b_i can never extend any y >= 0; dropping such z up
    // front also keeps every y + col*z sum inside int64.
    for (int i = 0; i < m; ++i)
      if (col[i] > 0) zmax = std::min(zmax, b[i] / col[i]);
    for (const auto& [c0, cell] : t.levels[k - 1]) {
      for (long long z = 0; z <= zmax; ++z) {
        const Int c0_next = c0 + make_int(z) * w[k - 1];
        if (c0_next > cost_ceiling) break;  // w >= 0, larger z only grows c0
        for (const auto& [y, node] : cell) {
          if (node.min_l1 + z > gamma_floor) continue;
          CostLevelTable::YVec y_next(m);
          bool fits = true;
          for (int i = 0; i < m; ++i) {
            y_next[i] = y[i] + col[i] * z;
            if (y_next[i] > b[i]) { fits = false; break; }
          }
          if (!fits) continue;
          auto& target = t.levels[k][c0_next];
          auto [it, inserted] = target.try_emplace(std::move(y_next),
                                                   CostLevelTable::Node{node.min_l1 + z, z});
          if (inserted) {
            ++t.states;
            if (c0_next > t.max_c0) t.max_c0 = c0_next;
          } else if (node.min_l1 + z < it->second.min_l1) {
            it->second = {node.min_l1 + z, z};
          }
        }
      }
    }
    for (const auto& [c0, cell] : t.levels[k])
      t.max_cell = std::max(t.max_cell, static_cast<long long>(cell.size()));
  }
  return t;
}

std::vector<long long> CostLevelTable::reconstruct(int k, const Int& c0, const YVec& y,
                                                   const Mat& heavy_cols, const std::vector<Int>& w) const {
  std::vector<long long> x(heavy_cols.cols(), 0);
  Int c0_cur = c0;
  YVec y_cur = y;
  for (int level = k; level > 0; --level) {
    const auto cell_it = levels[level].find(c0_cur);
    if (cell_it == levels[level].end()) throw std::logic_error("dp table: missing cell on walk");
    const auto node_it = cell_it->second.find(y_cur);
    if (node_it == cell_it->second.end()) throw std::logic_error("dp table: missing entry on walk");
    const long long z = node_it->second.step;
    x[level - 1] = z;
    c0_cur -= make_int(z) * w[level - 1];
    const std::vector<long long> col = heavy_cols.col(level - 1);
    for (int i = 0; i < heavy_cols.rows(); ++i) y_cur[i] -= col[i] * z;
  }
  return x;
}

namespace {

Mat select_columns(const Mat& a, const std::vector<int>& cols) {
  Mat out(a.rows(), static_cast<int>(cols.size()));
  for (int i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < cols.size(); ++j) out.at(i, static_cast<int>(j)) = a.at(i, cols[j]);
  return out;
}

}  // namespace

SolveReport fptas_solve(const KnapsackInstance& inst, const Rat& epsilon) {
  if (epsilon <= 0 || epsilon >= 1) throw std::invalid_argument("epsilon must lie in (0,1)");
  const KnapsackInstance pre = preprocess(inst);

  SolveReport greedy_rep = greedy_solve(pre);
  long long lp_pivots = greedy_rep.stats["lp_pivots"];

  SolveReport rep;
  rep.mode = SolveMode::kFptas;
  if (greedy_rep.value == 0) {
    // C_gr = 0 forces OPT = 0 by the greedy guarantee; s would be zero.
    rep.value = 0;
    rep.witness.assign(inst.n, 0);
    rep.stats["dp_states"] = 0;
    rep.stats["lp_pivots"] = lp_pivots;
    return rep;
  }

  const FptasParams prm = make_fptas_params(pre, epsilon, greedy_rep.value);
  const std::vector<Int> w = scaled_costs(pre.c, prm.s, prm.heavy);
  const long long gamma_floor = to_i64(rat_floor(prm.gamma));

  const Mat heavy_cols = select_columns(pre.A, prm.heavy);
  std::vector<long long> heavy_u;
  for (int i : prm.heavy) heavy_u.push_back(pre.u[i]);

  const CostLevelTable table = dp_by_costs(heavy_cols, heavy_u, pre.b, w, prm.cost_ceiling, gamma_floor);
  const int kmax = static_cast<int>(prm.heavy.size());

  // Light sub-instance template; only b changes per candidate.
  KnapsackInstance light;
  light.m = pre.m;
  light.n = std::max<int>(1, static_cast<int>(prm.light.size()));
  light.A = prm.light.empty() ? Mat(pre.m, 1) : select_columns(pre.A, prm.light);
  light.b = pre.b;
  light.c.assign(light.n, 0);
  light.u.assign(light.n, 0);
  for (size_t j = 0; j < prm.light.size(); ++j) {
    light.c[j] = pre.c[prm.light[j]];
    light.u[j] = pre.u[prm.light[j]];
  }

  std::map<CostLevelTable::YVec, SolveReport> light_cache;
  long long light_solves = 0;
  long long heavy_l1_max = 0;

  bool have_best = false;
  Int best_value = 0;
  std::vector<long long> best_witness;

  for (const auto& [c0, cell] : table.levels[kmax]) {
    for (const auto& [y, node] : cell) {
      auto cached = light_cache.find(y);
      if (cached == light_cache.end()) {
        for (int i = 0; i < pre.m; ++i) light.b[i] = pre.b[i] - y[i];
        SolveReport light_rep = greedy_solve(light);
        lp_pivots += light_rep.stats["lp_pivots"];
        ++light_solves;
        cached = light_cache.emplace(y, std::move(light_rep)).first;
      }
      const SolveReport& light_rep = cached->second;

      const std::vector<long long> xh = table.reconstruct(kmax, c0, y, heavy_cols, w);
      long long xh_l1 = 0;
      for (long long v : xh) xh_l1 += v;
      heavy_l1_max = std::max(heavy_l1_max, xh_l1);
      std::vector<long long> witness(pre.n, 0);
      for (int j = 0; j < kmax; ++j) witness[prm.heavy[j]] = xh[j];
      for (size_t j = 0; j < prm.light.size(); ++j) witness[prm.light[j]] = light_rep.witness[j];
      const Int value = objective_at(pre.c, witness);
      if (!have_best || value > best_value) {
        have_best = true;
        best_value = value;
        best_witness = std::move(witness);
      }
    }
  }

  if (!have_best) throw std::logic_error("fptas: empty candidate set (DP lost the zero state)");
  rep.value = best_value;
  rep.witness = best_witness;
  rep.stats["dp_states"] = table.states;
  rep.stats["dp_max_cell"] = table.max_cell;
  rep.stats["dp_max_c0"] = fits_i64(table.max_c0) ? to_i64(table.max_c0) : -1;
  rep.stats["heavy_l1_max"] = heavy_l1_max;
  rep.stats["heavy"] = kmax;
  rep.stats["light"] = static_cast<long long>(prm.light.size());
  rep.stats["light_solves"] = light_solves;
  rep.stats["lp_pivots"] = lp_pivots;

  auto bad = check_report(inst, rep);
  if (!bad.empty()) throw std::logic_error("fptas: " + bad.front());
  return rep;
}

}  // namespace dmkp
