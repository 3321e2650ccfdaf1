#include "dmkp/generator.hpp"

#include <random>

#include "dmkp/linalg.hpp"

namespace dmkp {

namespace {

// uniform_int_distribution is implementation-defined; plain modulo keeps the
// byte stream identical everywhere.  The slight bias is irrelevant here.
long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

KnapsackInstance gen_knapsack(std::mt19937_64& rng, const GeneratorConfig& cfg) {
  KnapsackInstance k;
  k.m = cfg.m;
  k.n = cfg.n;
  k.A = Mat(cfg.m, cfg.n);
  for (int i = 0; i < cfg.m; ++i)
    for (int j = 0; j < cfg.n; ++j) k.A.at(i, j) = draw(rng, 0, cfg.max_entry);
  const long long b_hi = cfg.max_entry * std::max<long long>(1, cfg.n / 2);
  k.b.resize(cfg.m);
  for (int i = 0; i < cfg.m; ++i) k.b[i] = draw(rng, 0, b_hi);
  k.c.resize(cfg.n);
  for (int j = 0; j < cfg.n; ++j) k.c[j] = draw(rng, 0, cfg.max_c);
  k.u.resize(cfg.n);
  for (int j = 0; j < cfg.n; ++j) k.u[j] = draw(rng, 0, cfg.max_u);
  return k;
}

StandardFormInstance gen_standard(std::mt19937_64& rng, const GeneratorConfig& cfg) {
  StandardFormInstance s;
  s.m = cfg.m;
  s.n = cfg.n;
  do {  // rank-m repair by resampling
    s.A = Mat(cfg.m, cfg.n);
    for (int i = 0; i < cfg.m; ++i)
      for (int j = 0; j < cfg.n; ++j) s.A.at(i, j) = draw(rng, -cfg.max_entry, cfg.max_entry);
  } while (rank(s.A) != cfg.m);

  s.lo.resize(cfg.n);
  s.up.resize(cfg.n);
  for (int j = 0; j < cfg.n; ++j) {
    s.lo[j] = draw(rng, -cfg.max_u, 0);
    s.up[j] = s.lo[j] + draw(rng, 0, cfg.max_u);
  }
  s.c.resize(cfg.n);
  for (int j = 0; j < cfg.n; ++j) s.c[j] = draw(rng, -cfg.max_c, cfg.max_c);

  s.b.resize(cfg.m);
  if (draw(rng, 0, 1) == 0) {
    // plant a feasible point so roughly half the corpus is solvable
    std::vector<long long> x0(cfg.n);
    for (int j = 0; j < cfg.n; ++j) x0[j] = draw(rng, s.lo[j], s.up[j]);
    const std::vector<Int> ax = s.A.mul_i64(x0);
    for (int i = 0; i < cfg.m; ++i) s.b[i] = to_i64(ax[i]);
  } else {
    const long long b_hi = cfg.max_entry * std::max<long long>(1, cfg.n / 2);
    for (int i = 0; i < cfg.m; ++i) s.b[i] = draw(rng, -b_hi, b_hi);
  }
  return s;
}

}  // namespace

std::vector<InstanceFile> generate_instances(const GeneratorConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<InstanceFile> out;
  out.reserve(cfg.count);
  for (int idx = 0; idx < cfg.count; ++idx) {
    InstanceFile f;
    f.kind = cfg.kind;
    if (cfg.kind == InstanceFile::Kind::kKnapsack)
      f.knapsack = gen_knapsack(rng, cfg);
    else
      f.standard = gen_standard(rng, cfg);

    const Mat& a = cfg.kind == InstanceFile::Kind::kKnapsack ? f.knapsack.A : f.standard.A;
    nlohmann::ordered_json meta;
    meta["seed"] = cfg.seed;
    meta["index"] = idx;
    Int d = 0;
    try {
      d = delta(a);
    } catch (const std::invalid_argument&) {
      // zero matrix; delta stays 0
    }
    meta["delta"] = to_i64(d);
    f.meta = std::move(meta);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace dmkp
