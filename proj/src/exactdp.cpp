#include "dmkp/exactdp.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "dmkp/linalg.hpp"
#include "dmkp/maxqueue.hpp"
#include "dmkp/proximity.hpp"
#include "dmkp/ratlp.hpp"

namespace dmkp {

StandardFormInstance to_standard_form(const KnapsackInstance& inst) {
  require_valid(inst);
  StandardFormInstance out;
  out.m = inst.m;
  out.n = inst.n + inst.m;
  out.A = Mat(inst.m, out.n);
  for (int i = 0; i < inst.m; ++i) {
    for (int j = 0; j < inst.n; ++j) out.A.at(i, j) = inst.A.at(i, j);
    out.A.at(i, inst.n + i) = 1;
  }
  out.b = inst.b;
  out.c = inst.c;
  out.c.resize(out.n, 0);
  out.lo.assign(out.n, 0);
  out.up = inst.u;
  out.up.resize(out.n, 0);
  for (int i = 0; i < inst.m; ++i) out.up[inst.n + i] = inst.b[i];
  return out;
}

ShiftedInstance shift(const StandardFormInstance& inst, const std::optional<Int>& radius_override) {
  require_valid(inst);
  ShiftedInstance sh;
  sh.base = inst;
  sh.delta = delta(inst.A);

  const LpVertexSolution lp = solve_relaxation_standard(inst);
  sh.lp_pivots = lp.pivots;
  if (lp.status != LpVertexSolution::Status::kOptimal) {
    sh.lp_feasible = false;
    sh.radius = radius_override ? *radius_override : Int(proximity_bound(inst.m, sh.delta) + inst.m);
    return sh;
  }
  sh.lp_feasible = true;

  sh.floor_x.resize(inst.n);
  for (int j = 0; j < inst.n; ++j) sh.floor_x[j] = to_i64(rat_floor(lp.x[j]));

  sh.lo_s.resize(inst.n);
  sh.up_s.resize(inst.n);
  for (int j = 0; j < inst.n; ++j) {
    sh.lo_s[j] = inst.lo[j] - sh.floor_x[j];
    sh.up_s[j] = inst.up[j] - sh.floor_x[j];
  }
  const std::vector<Int> ax = sh.base.A.mul_i64(sh.floor_x);
  sh.b_s.resize(inst.m);
  for (int i = 0; i < inst.m; ++i) sh.b_s[i] = make_int(inst.b[i]) - ax[i];

  sh.radius = radius_override ? *radius_override : Int(proximity_bound(inst.m, sh.delta) + inst.m);
  return sh;
}

BinarySplit binarize_range(long long cap) {
  if (cap < 0) throw std::invalid_argument("binarize_range: cap >= 0");
  BinarySplit out;
  out.cap = cap;
  if (cap == 0) return out;
  long long pow2 = 1;
  while (pow2 * 2 <= cap + 1) {
    out.steps.push_back(pow2);
    pow2 *= 2;
  }
  const long long rest = cap - pow2 + 1;
  if (rest > 0) out.steps.push_back(rest);
  return out;
}

namespace {

constexpr long long kInt64SafeLimit = 1LL << 60;

long long floordiv(long long a, long long b) {  // b > 0
  long long q = a / b;
  if (a % b != 0 && a < 0) --q;
  return q;
}

long long abs_ll(long long v) { return v < 0 ? -v : v; }

// Euclidean quotient: h = q*d + r with r in [0, |d|).
long long euclid_q(long long h, long long d) {
  return d > 0 ? floordiv(h, d) : -floordiv(h, -d);
}
Int euclid_q(const Int& h, const Int& d) {
  Int q;
  const Int ad = abs(d);
  mpz_fdiv_q(q.get_mpz_t(), h.get_mpz_t(), ad.get_mpz_t());
  return d > 0 ? q : Int(-q);
}

long long saturate(const Int& v) {
  if (!v.fits_slong_p()) return std::numeric_limits<long long>::max();
  return static_cast<long long>(v.get_si());
}

struct StateHash {
  static size_t mix(size_t h, size_t v) { return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)); }
  static size_t item(long long v) { return std::hash<long long>{}(v); }
  static size_t item(const Int& v) {
    const mpz_srcptr z = v.get_mpz_t();
    size_t h = static_cast<size_t>(mpz_sgn(z)) + 0x1234567u;
    const size_t limbs = mpz_size(z);
    for (size_t i = 0; i < limbs; ++i) h = mix(h, static_cast<size_t>(mpz_getlimbn(z, i)));
    return h;
  }
  template <class T>
  size_t operator()(const std::vector<T>& v) const {
    size_t h = v.size();
    for (const T& x : v) h = mix(h, item(x));
    return h;
  }
  template <class T>
  size_t operator()(const std::pair<std::vector<T>, long long>& p) const {
    return mix(operator()(p.first), item(p.second));
  }
};

#ifdef DMKP_ORDERED_DP
template <class K, class V>
using StateMap = std::map<K, V>;
#else
template <class K, class V>
using StateMap = std::unordered_map<K, V, StateHash>;
#endif

template <class IntT>
IntT make_val(long long v);
template <>
long long make_val<long long>(long long v) { return v; }
template <>
Int make_val<Int>(long long v) { return make_int(v); }

template <class IntT>
IntT from_exact(const Int& v);
template <>
long long from_exact<long long>(const Int& v) { return to_i64(v); }
template <>
Int from_exact<Int>(const Int& v) { return v; }

inline Int to_exact(long long v) { return make_int(v); }
inline Int to_exact(const Int& v) { return v; }

inline long long to_ll(long long v) { return v; }
inline long long to_ll(const Int& v) { return to_i64(v); }

// Exact column/bound/window tables shared by both engines plus the
// int64-safety certificate that picks the machine-word instantiation.
struct EngineSetup {
  int m = 0, n = 0;
  std::vector<std::vector<Int>> cols;            // A columns
  std::vector<long long> cost;                   // objective coefficients
  std::vector<long long> zlo, zhi;               // per-variable range, clamped to +-radius
  std::vector<std::vector<Int>> win_lo, win_hi;  // admissible h window per level 0..n
  std::vector<Int> target;                       // b'
  long long radius_eff = 0;                      // min(radius, achievable |z| mass)
  Int value_shift = 0;                           // c^T floor(x*)
  bool box_empty = false;
  bool int64_safe = true;
};

EngineSetup prepare(const ShiftedInstance& sh) {
  const StandardFormInstance& base = sh.base;
  EngineSetup s;
  s.m = base.m;
  s.n = base.n;
  s.cost = base.c;
  s.target = sh.b_s;
  s.value_shift = objective_at(base.c, sh.floor_x);

  s.cols.resize(s.n);
  for (int j = 0; j < s.n; ++j) {
    s.cols[j].resize(s.m);
    for (int i = 0; i < s.m; ++i) s.cols[j][i] = make_int(base.A.at(i, j));
  }

  s.zlo.resize(s.n);
  s.zhi.resize(s.n);
  Int z_mass = 0;
  for (int j = 0; j < s.n; ++j) {
    const Int lo = std::max(make_int(sh.lo_s[j]), Int(-sh.radius));
    const Int hi = std::min(make_int(sh.up_s[j]), sh.radius);
    if (lo > hi) s.box_empty = true;
    s.zlo[j] = lo > hi ? 0 : to_i64(lo);
    s.zhi[j] = lo > hi ? -1 : to_i64(hi);
    z_mass += std::max(Int(abs(lo)), Int(abs(hi)));
  }
  const Int rad_eff = std::min(sh.radius, z_mass);
  s.radius_eff = rad_eff.fits_slong_p() && rad_eff < make_int(kInt64SafeLimit) ? to_i64(rad_eff)
                                                                     : kInt64SafeLimit - 1;

  // Forward-reachable interval per row and level, intersected with the
  // interval of values completable to b' by the remaining columns.
  std::vector<std::vector<Int>> pre_lo(s.n + 1, std::vector<Int>(s.m, Int(0)));
  std::vector<std::vector<Int>> pre_hi = pre_lo;
  for (int k = 1; k <= s.n; ++k) {
    for (int i = 0; i < s.m; ++i) {
      const Int a = s.cols[k - 1][i] * make_int(s.zlo[k - 1]);
      const Int b = s.cols[k - 1][i] * make_int(s.zhi[k - 1]);
      pre_lo[k][i] = pre_lo[k - 1][i] + std::min(a, b);
      pre_hi[k][i] = pre_hi[k - 1][i] + std::max(a, b);
    }
  }
  s.win_lo.assign(s.n + 1, std::vector<Int>(s.m));
  s.win_hi.assign(s.n + 1, std::vector<Int>(s.m));
  for (int k = 0; k <= s.n; ++k) {
    for (int i = 0; i < s.m; ++i) {
      const Int suf_lo = pre_lo[s.n][i] - pre_lo[k][i];
      const Int suf_hi = pre_hi[s.n][i] - pre_hi[k][i];
      s.win_lo[k][i] = std::max(pre_lo[k][i], Int(s.target[i] - suf_hi));
      s.win_hi[k][i] = std::min(pre_hi[k][i], Int(s.target[i] - suf_lo));
    }
  }

  // Conservative bound on every h component, DP value, chain position and
  // normalized queue key that can arise.
  Int h_bound = 1, v_bound = 1, c_max = 1, col_max = 1, z_max = 1;
  for (int k = 0; k <= s.n; ++k)
    for (int i = 0; i < s.m; ++i)
      h_bound = std::max({h_bound, Int(abs(s.win_lo[k][i])), Int(abs(s.win_hi[k][i]))});
  for (int j = 0; j < s.n; ++j) {
    v_bound += make_int(abs_ll(s.cost[j])) * make_int(std::max(abs_ll(s.zlo[j]), abs_ll(s.zhi[j])));
    c_max = std::max(c_max, make_int(abs_ll(s.cost[j])));
    z_max = std::max({z_max, make_int(abs_ll(s.zlo[j])), make_int(abs_ll(s.zhi[j]))});
    for (int i = 0; i < s.m; ++i) col_max = std::max(col_max, Int(abs(s.cols[j][i])));
  }
  const Int pos_bound = h_bound + 2;
  const Int norm_bound = v_bound + c_max * (pos_bound + z_max + 2) + pos_bound + make_int(s.radius_eff);
  const Int h_comp_bound = h_bound + (pos_bound + z_max + 1) * (col_max + 1);
  s.int64_safe = norm_bound < make_int(kInt64SafeLimit) && h_comp_bound < make_int(kInt64SafeLimit);
  return s;
}

struct EngineResult {
  bool found = false;
  Int value = 0;
  Int witness_l1 = 0;
  std::vector<long long> x_shifted;
  std::map<std::string, long long> stats;
};

// ---------------------------------------------------------------------------
// LEVELS: longest path over triplets (k, h, l), l = consumed |z| budget.
// ---------------------------------------------------------------------------

template <class IntT>
class LevelsEngine {
 public:
  LevelsEngine(const EngineSetup& s, bool binarized) : s_(s), binarized_(binarized) {
    cols_.resize(s.n);
    for (int j = 0; j < s.n; ++j)
      for (const Int& v : s.cols[j]) cols_[j].push_back(from_exact<IntT>(v));
    wlo_.resize(s.n + 1);
    whi_.resize(s.n + 1);
    for (int k = 0; k <= s.n; ++k)
      for (int i = 0; i < s.m; ++i) {
        wlo_[k].push_back(from_exact<IntT>(s.win_lo[k][i]));
        whi_[k].push_back(from_exact<IntT>(s.win_hi[k][i]));
      }
    for (const Int& v : s.target) target_.push_back(from_exact<IntT>(v));
  }

  EngineResult run() {
    EngineResult out;
    levels_.assign(s_.n + 1, {});
    if (!s_.box_empty) {
      HVec zero(s_.m, IntT(0));
      if (inside(zero, 0)) levels_[0][{zero, 0}] = Node{IntT(0), 0, 0};
      for (int k = 1; k <= s_.n; ++k) {
        if (binarized_)
          build_level_binarized(k);
        else
          build_level_plain(k);
      }
    }

    long long states = 0, max_h = 0;
    for (int k = 0; k <= s_.n; ++k) {
      states += static_cast<long long>(levels_[k].size());
      std::unordered_set<HVec, StateHash> distinct;
      for (const auto& entry : levels_[k]) distinct.insert(entry.first.first);
      max_h = std::max(max_h, static_cast<long long>(distinct.size()));
    }
    out.stats["dp_states"] = states;
    out.stats["dp_max_level_h"] = max_h;
    out.stats["dp_arcs"] = arcs_;

    // Terminal: h = b' at every consumed budget l <= radius.
    bool found = false;
    long long best_l = 0;
    IntT best_value{};
    for (const auto& [key, node] : levels_[s_.n]) {
      if (key.first != target_) continue;
      if (!found || node.value > best_value || (node.value == best_value && key.second < best_l)) {
        found = true;
        best_value = node.value;
        best_l = key.second;
      }
    }
    if (!found) return out;

    out.found = true;
    out.value = to_exact(best_value);
    out.witness_l1 = 0;
    out.x_shifted.assign(s_.n, 0);
    HVec h = target_;
    long long l = best_l;
    for (int k = s_.n; k >= 1; --k) {
      const Node& node = levels_[k].at({h, l});
      out.x_shifted[k - 1] = node.z;
      out.witness_l1 += make_int(abs_ll(node.z));
      for (int i = 0; i < s_.m; ++i) h[i] -= cols_[k - 1][i] * make_val<IntT>(node.z);
      l -= node.consumed;
    }
    return out;
  }

 private:
  using HVec = std::vector<IntT>;
  using Key = std::pair<HVec, long long>;
  struct Node {
    IntT value{};
    long long z = 0;         // net multiplicity of item k on the best arc
    long long consumed = 0;  // |z| for plain arcs; sum of |step| when binarized
  };

  bool inside(const HVec& h, int k) const {
    for (int i = 0; i < s_.m; ++i)
      if (h[i] < wlo_[k][i] || h[i] > whi_[k][i]) return false;
    return true;
  }

  void relax(StateMap<Key, Node>& level, HVec&& h, long long l, IntT value, long long z,
             long long consumed) {
    auto [it, inserted] = level.try_emplace(Key{std::move(h), l}, Node{value, z, consumed});
    if (inserted) return;
    Node& cur = it->second;
    if (value > cur.value ||
        (value == cur.value && (abs_ll(z) < abs_ll(cur.z) || (abs_ll(z) == abs_ll(cur.z) && z < cur.z))))
      cur = Node{value, z, consumed};
  }

  void build_level_plain(int k) {
    const std::vector<IntT>& col = cols_[k - 1];
    const IntT cost = make_val<IntT>(s_.cost[k - 1]);
    for (const auto& [key, node] : levels_[k - 1]) {
      for (long long z = s_.zlo[k - 1]; z <= s_.zhi[k - 1]; ++z) {
        const long long l_next = key.second + abs_ll(z);
        if (l_next > s_.radius_eff) continue;
        HVec h = key.first;
        for (int i = 0; i < s_.m; ++i) h[i] += col[i] * make_val<IntT>(z);
        if (!inside(h, k)) continue;
        ++arcs_;
        relax(levels_[k], std::move(h), l_next, IntT(node.value + cost * make_val<IntT>(z)), z, abs_ll(z));
      }
    }
  }

  // Take-or-skip sub-levels: a mandatory arc to the in-range multiplicity
  // closest to zero, then binarized up-steps and down-steps.  Mixing signs
  // only overcounts the consumed budget, so it admits no solution the plain
  // transition would reject.
  void build_level_binarized(int k) {
    const std::vector<IntT>& col = cols_[k - 1];
    const long long zlo = s_.zlo[k - 1], zhi = s_.zhi[k - 1];
    const IntT cost = make_val<IntT>(s_.cost[k - 1]);
    if (zlo > zhi) return;
    const long long z0 = std::clamp(0LL, zlo, zhi);

    std::vector<long long> steps;
    for (long long st : binarize_range(zhi - z0).steps) steps.push_back(st);
    for (long long st : binarize_range(z0 - zlo).steps) steps.push_back(-st);

    struct SubNode {
      IntT value{};
      long long step = 0;  // signed step taken on entry; 0 = skipped
    };
    std::vector<StateMap<Key, SubNode>> sub(steps.size() + 1);

    for (const auto& [key, node] : levels_[k - 1]) {
      const long long l_next = key.second + abs_ll(z0);
      if (l_next > s_.radius_eff) continue;
      HVec h = key.first;
      for (int i = 0; i < s_.m; ++i) h[i] += col[i] * make_val<IntT>(z0);
      ++arcs_;
      sub[0].try_emplace(Key{std::move(h), l_next}, SubNode{IntT(node.value + cost * make_val<IntT>(z0)), z0});
    }

    for (size_t si = 0; si < steps.size(); ++si) {
      const long long st = steps[si];
      for (const auto& [key, node] : sub[si]) {
        auto [it, inserted] = sub[si + 1].try_emplace(key, SubNode{node.value, 0});
        if (!inserted && node.value > it->second.value) it->second = SubNode{node.value, 0};

        const long long l_next = key.second + abs_ll(st);
        if (l_next > s_.radius_eff) continue;
        HVec h = key.first;
        for (int i = 0; i < s_.m; ++i) h[i] += col[i] * make_val<IntT>(st);
        ++arcs_;
        const IntT val = IntT(node.value + cost * make_val<IntT>(st));
        auto [jt, jins] = sub[si + 1].try_emplace(Key{std::move(h), l_next}, SubNode{val, st});
        if (!jins && (val > jt->second.value ||
                      (val == jt->second.value && abs_ll(st) < abs_ll(jt->second.step))))
          jt->second = SubNode{val, st};
      }
    }

    // Fold each surviving sub-path back into a net multiplicity arc.
    for (const auto& [key, node] : sub.back()) {
      if (!inside(key.first, k)) continue;
      long long z_net = z0, consumed = abs_ll(z0);
      Key cur = key;
      for (size_t si = steps.size(); si > 0; --si) {
        const SubNode& sn = sub[si].at(cur);
        if (sn.step != 0) {
          z_net += sn.step;
          consumed += abs_ll(sn.step);
          for (int i = 0; i < s_.m; ++i) cur.first[i] -= col[i] * make_val<IntT>(sn.step);
          cur.second -= abs_ll(sn.step);
        }
      }
      HVec h = key.first;
      relax(levels_[k], std::move(h), key.second, node.value, z_net, consumed);
    }
  }

  const EngineSetup& s_;
  bool binarized_;
  std::vector<std::vector<IntT>> cols_;
  std::vector<std::vector<IntT>> wlo_, whi_;
  HVec target_;
  std::vector<StateMap<Key, Node>> levels_;
  long long arcs_ = 0;
};

// ---------------------------------------------------------------------------
// PATHS: longest path over pairs (k, h); every level splits into chains along
// A_k and transitions are sliding-window maxima over a MaxQueue.  Value ties
// break toward the minimum consumed |z| budget so the witness realizes the
// proximity bound.
// ---------------------------------------------------------------------------

template <class IntT>
class PathsEngine {
 public:
  PathsEngine(const EngineSetup& s, bool validate) : s_(s), validate_(validate) {
    cols_.resize(s.n);
    for (int j = 0; j < s.n; ++j)
      for (const Int& v : s.cols[j]) cols_[j].push_back(from_exact<IntT>(v));
    wlo_.resize(s.n + 1);
    whi_.resize(s.n + 1);
    for (int k = 0; k <= s.n; ++k)
      for (int i = 0; i < s.m; ++i) {
        wlo_[k].push_back(from_exact<IntT>(s.win_lo[k][i]));
        whi_[k].push_back(from_exact<IntT>(s.win_hi[k][i]));
      }
    for (const Int& v : s.target) target_.push_back(from_exact<IntT>(v));
  }

  EngineResult run() {
    EngineResult out;
    levels_.assign(s_.n + 1, {});
    if (!s_.box_empty) {
      HVec zero(s_.m, IntT(0));
      if (inside(zero, 0)) levels_[0][zero] = Node{IntT(0), IntT(0), 0};
      for (int k = 1; k <= s_.n; ++k) build_level(k);
    }

    long long states = 0, max_h = 0;
    for (int k = 0; k <= s_.n; ++k) {
      states += static_cast<long long>(levels_[k].size());
      max_h = std::max(max_h, static_cast<long long>(levels_[k].size()));
    }
    out.stats["dp_states"] = states;
    out.stats["dp_max_level_h"] = max_h;
    out.stats["dp_arcs"] = arcs_;
    out.stats["recurrence_checks"] = recurrence_checks_;

    const auto term = levels_[s_.n].find(target_);
    if (term == levels_[s_.n].end()) return out;

    out.found = true;
    out.value = to_exact(term->second.value);
    out.witness_l1 = to_exact(term->second.l1);
    out.x_shifted.assign(s_.n, 0);
    HVec h = target_;
    for (int k = s_.n; k >= 1; --k) {
      const Node& node = levels_[k].at(h);
      out.x_shifted[k - 1] = node.z;
      for (int i = 0; i < s_.m; ++i) h[i] -= cols_[k - 1][i] * make_val<IntT>(node.z);
    }
    return out;
  }

 private:
  using HVec = std::vector<IntT>;
  struct Node {
    IntT value{};
    IntT l1{};  // minimum consumed budget among value-optimal paths
    long long z = 0;
  };
  struct Src {
    IntT t{};
    const Node* node = nullptr;
  };

  // Queue entries normalized so that value and l1 comparisons are independent
  // of the window position along the chain.
  struct Entry {
    bool valid = false;
    IntT val_norm{};
    IntT l1_norm{};
    IntT pos{};
  };
  struct EntryLess {
    bool prefer_high_pos;
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.valid != b.valid) return !a.valid;
      if (!a.valid) return false;
      if (a.val_norm != b.val_norm) return a.val_norm < b.val_norm;
      if (a.l1_norm != b.l1_norm) return a.l1_norm > b.l1_norm;
      return prefer_high_pos ? a.pos < b.pos : a.pos > b.pos;
    }
  };
  struct Candidate {
    bool valid = false;
    IntT value{};
    IntT l1{};
    long long j = 0;
  };

  bool inside(const HVec& h, int k) const {
    for (int i = 0; i < s_.m; ++i)
      if (h[i] < wlo_[k][i] || h[i] > whi_[k][i]) return false;
    return true;
  }

  void build_level(int k) {
    const std::vector<IntT>& col = cols_[k - 1];
    const long long zlo = s_.zlo[k - 1], zhi = s_.zhi[k - 1];
    const IntT cost = make_val<IntT>(s_.cost[k - 1]);
    if (zlo > zhi) return;

    bool zero_col = true;
    for (const IntT& v : col)
      if (v != IntT(0)) { zero_col = false; break; }

    if (zero_col) {
      // h never moves; the best multiplicity is decided pointwise.
      long long z;
      if (cost > IntT(0))
        z = zhi;
      else if (cost < IntT(0))
        z = zlo;
      else
        z = std::clamp(0LL, zlo, zhi);
      for (const auto& [h, node] : levels_[k - 1]) {
        if (!inside(h, k)) continue;
        ++arcs_;
        levels_[k][h] = Node{IntT(node.value + cost * make_val<IntT>(z)), IntT(node.l1 + make_val<IntT>(abs_ll(z))), z};
      }
      return;
    }

    int pivot_row = 0;
    while (col[pivot_row] == IntT(0)) ++pivot_row;
    const IntT d0 = col[pivot_row];

    // Chains: h = anchor + t * A_k with the canonical anchor per line.
    StateMap<HVec, std::vector<Src>> chains;
    for (const auto& [h, node] : levels_[k - 1]) {
      const IntT t = euclid_q(h[pivot_row], d0);
      HVec anchor = h;
      for (int i = 0; i < s_.m; ++i) anchor[i] -= col[i] * t;
      chains[std::move(anchor)].push_back(Src{t, &node});
    }

    for (auto& [anchor, srcs] : chains) {
      std::sort(srcs.begin(), srcs.end(), [](const Src& a, const Src& b) { return a.t < b.t; });
      for (size_t i = 1; i < srcs.size(); ++i)
        if (srcs[i].t == srcs[i - 1].t) throw std::logic_error("paths: chain position collision");
      scan_chain(k, anchor, srcs, col, cost, zlo, zhi);
    }
  }

  void scan_chain(int k, const HVec& anchor, const std::vector<Src>& srcs,
                  const std::vector<IntT>& col, const IntT& cost, long long zlo, long long zhi) {
    const IntT t_first = IntT(srcs.front().t + make_val<IntT>(zlo));
    const IntT t_last = IntT(srcs.back().t + make_val<IntT>(zhi));

    const bool has_p = zhi >= 0;  // window of steps j >= 0
    const long long jp_lo = std::max(zlo, 0LL), jp_hi = zhi;
    const bool has_n = zlo <= 0;  // window of steps j <= 0
    const long long jn_lo = zlo, jn_hi = std::min(zhi, 0LL);

    MaxQueue<Entry, EntryLess> qp{EntryLess{true}};
    MaxQueue<Entry, EntryLess> qn{EntryLess{false}};
    size_t cur_p = 0, cur_n = 0;

    auto entry_at = [&](const IntT& p, size_t& cursor, bool positive_j) -> Entry {
      while (cursor < srcs.size() && srcs[cursor].t < p) ++cursor;
      if (cursor >= srcs.size() || srcs[cursor].t != p) return Entry{};
      const Node& nd = *srcs[cursor].node;
      Entry e;
      e.valid = true;
      e.val_norm = nd.value - cost * p;
      e.l1_norm = positive_j ? IntT(nd.l1 - p) : IntT(nd.l1 + p);
      e.pos = p;
      return e;
    };

    if (has_p) {
      const IntT first = IntT(t_first - make_val<IntT>(jp_hi));
      const IntT last = IntT(t_first - make_val<IntT>(jp_lo));
      for (IntT p = first; p <= last; ++p) qp.enque(entry_at(p, cur_p, true));
    }
    if (has_n) {
      const IntT first = IntT(t_first - make_val<IntT>(jn_hi));
      const IntT last = IntT(t_first - make_val<IntT>(jn_lo));
      for (IntT p = first; p <= last; ++p) qn.enque(entry_at(p, cur_n, false));
    }

    for (IntT t = t_first;; ++t) {
      Candidate best;
      auto consider = [&](const Entry& e, bool positive_j) {
        if (!e.valid) return;
        const IntT value = e.val_norm + cost * t;
        const IntT l1 = positive_j ? IntT(e.l1_norm + t) : IntT(e.l1_norm - t);
        const long long j = to_ll(IntT(t - e.pos));
        if (!best.valid || value > best.value ||
            (value == best.value && (l1 < best.l1 || (l1 == best.l1 && abs_ll(j) < abs_ll(best.j)))))
          best = Candidate{true, value, l1, j};
      };
      if (has_p && !qp.empty()) consider(qp.get_max(), true);
      if (has_n && !qn.empty()) consider(qn.get_max(), false);

      if (validate_) check_recurrence(srcs, cost, zlo, zhi, t, best);

      if (best.valid) {
        ++arcs_;
        HVec h = anchor;
        for (int i = 0; i < s_.m; ++i) h[i] += col[i] * t;
        if (inside(h, k)) levels_[k][std::move(h)] = Node{best.value, best.l1, best.j};
      }

      if (t == t_last) break;
      if (has_p) {
        qp.decue();
        qp.enque(entry_at(IntT(t + 1 - make_val<IntT>(jp_lo)), cur_p, true));
      }
      if (has_n) {
        qn.decue();
        qn.enque(entry_at(IntT(t + 1 - make_val<IntT>(jn_lo)), cur_n, false));
      }
    }
  }

  // Direct evaluation of the window recurrence
  //   longest(k, h_t) = max_j { longest(k-1, h_{t-j}) + cost * j }
  // as the ground truth for the queue-based computation.
  void check_recurrence(const std::vector<Src>& srcs, const IntT& cost, long long zlo,
                        long long zhi, const IntT& t, const Candidate& best) {
    ++recurrence_checks_;
    bool found = false;
    IntT best_value{};
    for (long long j = zlo; j <= zhi; ++j) {
      const IntT p = IntT(t - make_val<IntT>(j));
      auto it = std::lower_bound(srcs.begin(), srcs.end(), p,
                                 [](const Src& s, const IntT& v) { return s.t < v; });
      if (it == srcs.end() || it->t != p) continue;
      const IntT value = IntT(it->node->value + cost * make_val<IntT>(j));
      if (!found || value > best_value) {
        found = true;
        best_value = value;
      }
    }
    if (found != best.valid || (found && best_value != best.value))
      throw std::logic_error("paths: sliding-window value disagrees with the naive recurrence");
  }

  const EngineSetup& s_;
  bool validate_;
  std::vector<std::vector<IntT>> cols_;
  std::vector<std::vector<IntT>> wlo_, whi_;
  HVec target_;
  std::vector<StateMap<HVec, Node>> levels_;
  long long arcs_ = 0;
  long long recurrence_checks_ = 0;
};

SolveReport run_shifted(const ShiftedInstance& sh, SolveMode mode, const ExactOptions& opt) {
  SolveReport rep;
  rep.mode = mode;
  rep.stats["lp_pivots"] = sh.lp_pivots;
  rep.stats["radius"] = saturate(sh.radius);
  rep.stats["delta"] = saturate(sh.delta);
  if (!sh.lp_feasible) {
    rep.feasible = false;
    return rep;
  }

  const EngineSetup setup = prepare(sh);
  EngineResult res;
  if (mode == SolveMode::kExactLevels) {
    res = setup.int64_safe ? LevelsEngine<long long>(setup, opt.binarized).run()
                           : LevelsEngine<Int>(setup, opt.binarized).run();
  } else {
    res = setup.int64_safe ? PathsEngine<long long>(setup, opt.validate_recurrence).run()
                           : PathsEngine<Int>(setup, opt.validate_recurrence).run();
  }
  for (const auto& [key, v] : res.stats) rep.stats[key] = v;
  rep.stats["int64_engine"] = setup.int64_safe ? 1 : 0;

  if (!res.found) {
    rep.feasible = false;
    return rep;
  }
  rep.feasible = true;
  rep.value = res.value + setup.value_shift;
  rep.witness.resize(sh.base.n);
  for (int j = 0; j < sh.base.n; ++j) rep.witness[j] = res.x_shifted[j] + sh.floor_x[j];
  rep.stats["witness_l1"] = saturate(res.witness_l1);

  auto bad = check_report(sh.base, rep);
  if (!bad.empty()) throw std::logic_error("exactdp: " + bad.front());
  return rep;
}

}  // namespace

SolveReport solve_levels(const ShiftedInstance& sh, const ExactOptions& opt) {
  return run_shifted(sh, SolveMode::kExactLevels, opt);
}

SolveReport solve_paths(const ShiftedInstance& sh, const ExactOptions& opt) {
  return run_shifted(sh, SolveMode::kExactPaths, opt);
}

SolveReport solve_exact(const StandardFormInstance& inst, ExactVariant variant,
                        const std::optional<Int>& radius_override, const ExactOptions& opt) {
  ShiftedInstance sh = shift(inst, radius_override);
  ExactOptions o = opt;
  if (variant == ExactVariant::kLevelsBinarized) o.binarized = true;
  if (variant == ExactVariant::kPaths) return solve_paths(sh, o);
  return solve_levels(sh, o);
}

SolveReport solve_exact(const KnapsackInstance& inst, ExactVariant variant,
                        const std::optional<Int>& radius_override, const ExactOptions& opt) {
  const StandardFormInstance std_form = to_standard_form(inst);
  SolveReport rep = solve_exact(std_form, variant, radius_override, opt);
  if (!rep.feasible) return rep;  // only possible under a radius override
  rep.witness.resize(inst.n);  // drop slack coordinates; slack costs are zero
  auto bad = check_report(inst, rep);
  if (!bad.empty()) throw std::logic_error("exactdp(knapsack): " + bad.front());
  return rep;
}

}  // namespace dmkp
