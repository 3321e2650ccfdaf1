#include "dmkp/ratlp.hpp"

#include <stdexcept>

namespace dmkp {

namespace {

// Bounded-variable primal simplex over exact rationals, Bland's rule
// throughout (smallest eligible index enters; smallest variable index among
// minimal-ratio blockers leaves, the entering variable's own bound flip
// competing under its own index).  Two phases; artificial variables are
// pivoted out and locked to zero after phase one.
class BoundedSimplex {
 public:
  BoundedSimplex(int m, int n_structural, const std::vector<std::vector<Rat>>& a,
                 const std::vector<Rat>& b, const std::vector<Rat>& lo,
                 const std::vector<Rat>& up)
      : m_(m), n_(n_structural), total_(n_structural + m) {
    tab_.assign(m_, std::vector<Rat>(total_, Rat(0)));
    lob_ = lo;
    upb_ = up;
    lob_.resize(total_, Rat(0));
    upb_.resize(total_, Rat(0));
    xval_.assign(total_, Rat(0));
    stat_.assign(total_, kAtLower);
    basis_.assign(m_, -1);

    for (int j = 0; j < n_; ++j) xval_[j] = lob_[j];

    std::vector<Rat> resid(m_, Rat(0));
    for (int i = 0; i < m_; ++i) {
      resid[i] = b[i];
      for (int j = 0; j < n_; ++j) resid[i] -= a[i][j] * lob_[j];
    }
    for (int i = 0; i < m_; ++i) {
      const int sign = resid[i] < 0 ? -1 : 1;
      for (int j = 0; j < n_; ++j) tab_[i][j] = sign * a[i][j];
      const int art = n_ + i;
      tab_[i][art] = 1;  // column is sign * e_i, scaled row keeps identity
      lob_[art] = 0;
      upb_[art] = sign * resid[i];
      xval_[art] = upb_[art];
      stat_[art] = kBasic;
      basis_[i] = art;
    }
  }

  // Returns false when the constraints admit no point (phase-one residue).
  bool solve(const std::vector<Rat>& objective) {
    std::vector<Rat> phase1(total_, Rat(0));
    for (int i = 0; i < m_; ++i) phase1[n_ + i] = -1;
    optimize(phase1);
    for (int i = 0; i < m_; ++i)
      if (xval_[n_ + i] != 0) return false;
    evict_artificials();
    for (int i = 0; i < m_; ++i) upb_[n_ + i] = 0;

    std::vector<Rat> full = objective;
    full.resize(total_, Rat(0));
    optimize(full);
    return true;
  }

  const std::vector<Rat>& values() const { return xval_; }
  long long pivots() const { return pivots_; }

 private:
  enum VarState { kAtLower, kAtUpper, kBasic };

  void optimize(const std::vector<Rat>& cost) {
    std::vector<Rat> d(total_);
    for (int j = 0; j < total_; ++j) {
      d[j] = cost[j];
      for (int i = 0; i < m_; ++i)
        if (cost[basis_[i]] != 0) d[j] -= cost[basis_[i]] * tab_[i][j];
    }

    while (true) {
      int q = -1;
      for (int j = 0; j < total_; ++j) {
        if (stat_[j] == kBasic || lob_[j] == upb_[j]) continue;
        if ((stat_[j] == kAtLower && d[j] > 0) || (stat_[j] == kAtUpper && d[j] < 0)) { q = j; break; }
      }
      if (q < 0) return;

      const int dir = stat_[q] == kAtLower ? 1 : -1;
      Rat best_t = upb_[q] - lob_[q];
      int leave_row = -1;  // -1 means the entering variable flips bound
      int leave_var = q;
      bool leave_hits_upper = false;

      for (int i = 0; i < m_; ++i) {
        const Rat& y = tab_[i][q];
        if (y == 0) continue;
        const int bv = basis_[i];
        Rat step;  // d x_bv / d t = -dir * y
        bool hits_upper;
        if ((dir > 0) != (y > 0)) {  // basic value increases
          step = (upb_[bv] - xval_[bv]) / abs(y);
          hits_upper = true;
        } else {
          step = (xval_[bv] - lob_[bv]) / abs(y);
          hits_upper = false;
        }
        if (step < best_t || (step == best_t && bv < leave_var)) {
          best_t = step;
          leave_row = i;
          leave_var = bv;
          leave_hits_upper = hits_upper;
        }
      }

      xval_[q] += dir * best_t;
      for (int i = 0; i < m_; ++i)
        if (tab_[i][q] != 0) xval_[basis_[i]] -= dir * best_t * tab_[i][q];

      if (leave_row < 0) {
        stat_[q] = stat_[q] == kAtLower ? kAtUpper : kAtLower;
        continue;
      }
      stat_[leave_var] = leave_hits_upper ? kAtUpper : kAtLower;
      pivot(leave_row, q, d);
    }
  }

  void pivot(int row, int col, std::vector<Rat>& d) {
    const Rat piv = tab_[row][col];
    for (int j = 0; j < total_; ++j) tab_[row][j] /= piv;
    for (int i = 0; i < m_; ++i) {
      if (i == row || tab_[i][col] == 0) continue;
      const Rat f = tab_[i][col];
      for (int j = 0; j < total_; ++j) tab_[i][j] -= f * tab_[row][j];
    }
    if (!d.empty() && d[col] != 0) {
      const Rat f = d[col];
      for (int j = 0; j < total_; ++j) d[j] -= f * tab_[row][j];
    }
    basis_[row] = col;
    stat_[col] = kBasic;
    ++pivots_;
  }

  // Degenerate pivots replacing basic artificials (all at value zero) with
  // structural columns; rank(A) = m guarantees a nonzero candidate per row.
  void evict_artificials() {
    std::vector<Rat> no_costs;
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      int col = -1;
      for (int j = 0; j < n_; ++j)
        if (stat_[j] != kBasic && tab_[i][j] != 0) { col = j; break; }
      if (col < 0) throw std::logic_error("simplex: dependent rows despite rank check");
      const int art = basis_[i];
      pivot(i, col, no_costs);
      stat_[art] = kAtLower;
      xval_[art] = 0;
    }
  }

  int m_;
  int n_;
  int total_;
  std::vector<std::vector<Rat>> tab_;
  std::vector<Rat> lob_, upb_, xval_;
  std::vector<int> stat_;
  std::vector<int> basis_;
  long long pivots_ = 0;
};

LpVertexSolution extract(const BoundedSimplex& lp, int n, const std::vector<long long>& c) {
  LpVertexSolution out;
  out.status = LpVertexSolution::Status::kOptimal;
  out.x.assign(lp.values().begin(), lp.values().begin() + n);
  out.objective = 0;
  for (int j = 0; j < n; ++j) out.objective += make_rat(c[j]) * out.x[j];
  for (int j = 0; j < n; ++j)
    if (!rat_is_integer(out.x[j])) out.fractional_set.push_back(j);
  out.pivots = lp.pivots();
  return out;
}

}  // namespace

LpVertexSolution solve_relaxation(const KnapsackInstance& inst) {
  require_valid(inst);
  const int total = inst.n + inst.m;  // structural + slack
  std::vector<std::vector<Rat>> a(inst.m, std::vector<Rat>(total, Rat(0)));
  std::vector<Rat> b(inst.m), lo(total, Rat(0)), up(total, Rat(0));
  for (int i = 0; i < inst.m; ++i) {
    for (int j = 0; j < inst.n; ++j) a[i][j] = make_rat(inst.A.at(i, j));
    a[i][inst.n + i] = 1;
    b[i] = make_rat(inst.b[i]);
    up[inst.n + i] = make_rat(inst.b[i]);  // 0 <= slack <= b since Ax >= 0
  }
  for (int j = 0; j < inst.n; ++j) up[j] = make_rat(inst.u[j]);

  BoundedSimplex lp(inst.m, total, a, b, lo, up);
  std::vector<Rat> cost(total, Rat(0));
  for (int j = 0; j < inst.n; ++j) cost[j] = make_rat(inst.c[j]);
  if (!lp.solve(cost)) throw std::logic_error("knapsack relaxation cannot be infeasible");
  return extract(lp, inst.n, inst.c);
}

LpVertexSolution solve_relaxation_standard(const StandardFormInstance& inst) {
  require_valid(inst);
  std::vector<std::vector<Rat>> a(inst.m, std::vector<Rat>(inst.n));
  std::vector<Rat> b(inst.m), lo(inst.n), up(inst.n);
  for (int i = 0; i < inst.m; ++i) {
    for (int j = 0; j < inst.n; ++j) a[i][j] = make_rat(inst.A.at(i, j));
    b[i] = make_rat(inst.b[i]);
  }
  for (int j = 0; j < inst.n; ++j) {
    lo[j] = make_rat(inst.lo[j]);
    up[j] = make_rat(inst.up[j]);
  }

  BoundedSimplex lp(inst.m, inst.n, a, b, lo, up);
  std::vector<Rat> cost(inst.n);
  for (int j = 0; j < inst.n; ++j) cost[j] = make_rat(inst.c[j]);
  if (!lp.solve(cost)) {
    LpVertexSolution out;
    out.status = LpVertexSolution::Status::kInfeasible;
    out.pivots = lp.pivots();
    return out;
  }
  return extract(lp, inst.n, inst.c);
}

}  // namespace dmkp
