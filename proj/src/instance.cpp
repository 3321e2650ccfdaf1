#include "dmkp/instance.hpp"

#include <stdexcept>

#include "dmkp/linalg.hpp"

namespace dmkp {

const char* to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::kGreedy: return "greedy";
    case SolveMode::kFptas: return "fptas";
    case SolveMode::kExactLevels: return "exact-levels";
    case SolveMode::kExactPaths: return "exact-paths";
    case SolveMode::kOracle: return "oracle";
  }
  return "?";
}

Int objective_at(const std::vector<long long>& c, const std::vector<long long>& x) {
  Int v = 0;
  for (size_t i = 0; i < c.size(); ++i) v += make_int(c[i]) * make_int(x[i]);
  return v;
}

std::vector<std::string> validate(const KnapsackInstance& inst) {
  std::vector<std::string> bad;
  if (inst.m < 1) bad.push_back("m >= 1");
  if (inst.n < 1) bad.push_back("n >= 1");
  if (inst.A.rows() != inst.m || inst.A.cols() != inst.n) bad.push_back("A is m x n");
  if (static_cast<int>(inst.b.size()) != inst.m) bad.push_back("b has m entries");
  if (static_cast<int>(inst.c.size()) != inst.n) bad.push_back("c has n entries");
  if (static_cast<int>(inst.u.size()) != inst.n) bad.push_back("u has n entries");
  if (!bad.empty()) return bad;

  for (int i = 0; i < inst.m; ++i)
    for (int j = 0; j < inst.n; ++j)
      if (inst.A.at(i, j) < 0) { bad.push_back("A nonnegative"); goto a_done; }
a_done:
  for (long long v : inst.b)
    if (v < 0) { bad.push_back("b nonnegative"); break; }
  for (long long v : inst.c)
    if (v < 0) { bad.push_back("c nonnegative"); break; }
  for (long long v : inst.u)
    if (v < 0) { bad.push_back("u nonnegative"); break; }
  return bad;
}

std::vector<std::string> validate(const StandardFormInstance& inst) {
  std::vector<std::string> bad;
  if (inst.m < 1) bad.push_back("m >= 1");
  if (inst.n < 1) bad.push_back("n >= 1");
  if (inst.A.rows() != inst.m || inst.A.cols() != inst.n) bad.push_back("A is m x n");
  if (static_cast<int>(inst.b.size()) != inst.m) bad.push_back("b has m entries");
  if (static_cast<int>(inst.c.size()) != inst.n) bad.push_back("c has n entries");
  if (static_cast<int>(inst.lo.size()) != inst.n) bad.push_back("lo has n entries");
  if (static_cast<int>(inst.up.size()) != inst.n) bad.push_back("up has n entries");
  if (!bad.empty()) return bad;

  for (int j = 0; j < inst.n; ++j)
    if (inst.lo[j] > inst.up[j]) { bad.push_back("lo <= up componentwise"); break; }
  if (rank(inst.A) != inst.m) bad.push_back("rank(A) = m");
  return bad;
}

namespace {

template <class InstT>
void require_valid_impl(const InstT& inst) {
  auto bad = validate(inst);
  if (!bad.empty()) {
    std::string msg = "invalid instance:";
    for (const auto& v : bad) msg += " [" + v + "]";
    throw std::invalid_argument(msg);
  }
}

}  // namespace

void require_valid(const KnapsackInstance& inst) { require_valid_impl(inst); }
void require_valid(const StandardFormInstance& inst) { require_valid_impl(inst); }

std::vector<std::string> check_report(const KnapsackInstance& inst, const SolveReport& rep) {
  std::vector<std::string> bad;
  if (!rep.feasible) { bad.push_back("knapsack reports are always feasible (x = 0)"); return bad; }
  if (static_cast<int>(rep.witness.size()) != inst.n) { bad.push_back("witness has n entries"); return bad; }
  for (int j = 0; j < inst.n; ++j)
    if (rep.witness[j] < 0 || rep.witness[j] > inst.u[j]) { bad.push_back("0 <= witness <= u"); break; }
  std::vector<Int> ax = inst.A.mul_i64(rep.witness);
  for (int i = 0; i < inst.m; ++i)
    if (ax[i] > make_int(inst.b[i])) { bad.push_back("A witness <= b"); break; }
  if (objective_at(inst.c, rep.witness) != rep.value) bad.push_back("value = c^T witness");
  return bad;
}

std::vector<std::string> check_report(const StandardFormInstance& inst, const SolveReport& rep) {
  std::vector<std::string> bad;
  if (!rep.feasible) return bad;  // nothing to check
  if (static_cast<int>(rep.witness.size()) != inst.n) { bad.push_back("witness has n entries"); return bad; }
  for (int j = 0; j < inst.n; ++j)
    if (rep.witness[j] < inst.lo[j] || rep.witness[j] > inst.up[j]) { bad.push_back("lo <= witness <= up"); break; }
  std::vector<Int> ax = inst.A.mul_i64(rep.witness);
  for (int i = 0; i < inst.m; ++i)
    if (ax[i] != make_int(inst.b[i])) { bad.push_back("A witness = b"); break; }
  if (objective_at(inst.c, rep.witness) != rep.value) bad.push_back("value = c^T witness");
  return bad;
}

}  // namespace dmkp
