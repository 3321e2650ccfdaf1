#pragma once

#include <vector>

#include "dmkp/io.hpp"

namespace dmkp {

// Instance generation is deterministic per seed: the stream of draws is fully
// specified (mt19937_64 + modulo), so equal configs produce byte-identical
// files on any platform.
struct GeneratorConfig {
  unsigned long long seed = 1;
  int m = 1;
  int n = 4;
  long long max_entry = 4;  // |A_ij| bound (knapsack entries are nonnegative)
  long long max_u = 3;
  long long max_c = 5;
  int count = 1;
  InstanceFile::Kind kind = InstanceFile::Kind::kKnapsack;
};

std::vector<InstanceFile> generate_instances(const GeneratorConfig& cfg);

}  // namespace dmkp
