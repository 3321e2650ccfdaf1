#pragma once

#include <map>
#include <string>
#include <vector>

#include "dmkp/matrix.hpp"
#include "dmkp/numbers.hpp"

namespace dmkp {

// max c^T x  s.t.  A x <= b, 0 <= x <= u, x integer; all data nonnegative.
struct KnapsackInstance {
  int m = 0;
  int n = 0;
  Mat A;                     // m x n, entries >= 0
  std::vector<long long> b;  // m, >= 0
  std::vector<long long> c;  // n, profits >= 0
  std::vector<long long> u;  // n, upper bounds >= 0
};

// max c^T x  s.t.  A x = b, lo <= x <= up, x integer; entries may be negative,
// rank(A) = m.
struct StandardFormInstance {
  int m = 0;
  int n = 0;
  Mat A;
  std::vector<long long> b;
  std::vector<long long> c;
  std::vector<long long> lo;
  std::vector<long long> up;
};

enum class SolveMode { kGreedy, kFptas, kExactLevels, kExactPaths, kOracle };

const char* to_string(SolveMode mode);

struct SolveReport {
  SolveMode mode = SolveMode::kOracle;
  bool feasible = true;                // exact standard-form solves may fail
  Int value = 0;                       // objective at witness
  std::vector<long long> witness;      // n-vector, feasible for the instance
  std::map<std::string, long long> stats;
};

// Every violated invariant, as data.  Empty means valid.
std::vector<std::string> validate(const KnapsackInstance& inst);
std::vector<std::string> validate(const StandardFormInstance& inst);

// Throwing convenience wrappers used by the solvers' preconditions.
void require_valid(const KnapsackInstance& inst);
void require_valid(const StandardFormInstance& inst);

// Exact feasibility + objective check of a report against its instance.
// Returns a diagnostic per violation; solvers call this before returning.
std::vector<std::string> check_report(const KnapsackInstance& inst, const SolveReport& rep);
std::vector<std::string> check_report(const StandardFormInstance& inst, const SolveReport& rep);

Int objective_at(const std::vector<long long>& c, const std::vector<long long>& x);

}  // namespace dmkp
