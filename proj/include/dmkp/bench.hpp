#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dmkp/numbers.hpp"
#include "dmkp/oracle.hpp"

namespace dmkp {

struct BenchOptions {
  std::vector<std::string> modes;  // greedy fptas exact-levels exact-levels-bin exact-paths oracle
  std::vector<Rat> epsilons;       // one fptas row per epsilon
  long long oracle_cap = kDefaultOracleCap;
};

// One CSV row per (instance, mode[, epsilon]) in deterministic corpus order:
//   id,mode,epsilon,n,m,delta,radius,value,oracle,states,micros
// Per-instance failures become rows with value=error:<kind>; the run goes on.
void run_bench(const std::vector<std::string>& files, const BenchOptions& opt, std::ostream& out);

}  // namespace dmkp
