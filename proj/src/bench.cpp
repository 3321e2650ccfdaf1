#include "dmkp/bench.hpp"

#include <chrono>
#include <ostream>

#include "dmkp/exactdp.hpp"
#include "dmkp/fptas.hpp"
#include "dmkp/greedy.hpp"
#include "dmkp/io.hpp"
#include "dmkp/linalg.hpp"

namespace dmkp {

namespace {

std::string basename_of(const std::string& path) {
  const size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

std::string rat_str(const Rat& r) { return r.get_str(); }

struct RunOutcome {
  bool ok = false;
  std::string error;
  SolveReport rep;
  long long micros = 0;
};

RunOutcome run_one(const InstanceFile& f, const std::string& mode, const Rat& eps, long long cap) {
  RunOutcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    const bool knap = f.kind == InstanceFile::Kind::kKnapsack;
    if (mode == "greedy" || mode == "fptas") {
      if (!knap) throw std::invalid_argument(mode + " requires a knapsack instance");
      out.rep = mode == "greedy" ? greedy_solve(f.knapsack) : fptas_solve(f.knapsack, eps);
    } else if (mode == "oracle") {
      out.rep = knap ? brute_force_knapsack(f.knapsack, cap) : brute_force_standard(f.standard, cap);
    } else {
      ExactVariant variant;
      if (mode == "exact-levels")
        variant = ExactVariant::kLevels;
      else if (mode == "exact-levels-bin")
        variant = ExactVariant::kLevelsBinarized;
      else if (mode == "exact-paths")
        variant = ExactVariant::kPaths;
      else
        throw std::invalid_argument("unknown mode '" + mode + "'");
      out.rep = knap ? solve_exact(f.knapsack, variant) : solve_exact(f.standard, variant);
    }
    out.ok = true;
  } catch (const CapExceededError&) {
    out.error = "error:cap";
  } catch (const OverflowError&) {
    out.error = "error:overflow";
  } catch (const std::exception&) {
    out.error = "error:solve";
  }
  out.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return out;
}

}  // namespace

void run_bench(const std::vector<std::string>& files, const BenchOptions& opt, std::ostream& out) {
  out << "id,mode,epsilon,n,m,delta,radius,value,oracle,states,micros\n";
  for (const std::string& path : files) {
    InstanceFile f;
    std::string id = basename_of(path);
    try {
      f = load_instance(path);
    } catch (const ParseError&) {
      out << id << ",,,,,,,error:parse,,,\n";
      continue;
    }
    const bool knap = f.kind == InstanceFile::Kind::kKnapsack;
    const int n = knap ? f.knapsack.n : f.standard.n;
    const int m = knap ? f.knapsack.m : f.standard.m;
    std::string delta_str;
    try {
      delta_str = delta(knap ? f.knapsack.A : f.standard.A).get_str();
    } catch (const std::invalid_argument&) {
      delta_str = "0";
    }

    std::string oracle_str;
    try {
      const SolveReport ora =
          knap ? brute_force_knapsack(f.knapsack, opt.oracle_cap) : brute_force_standard(f.standard, opt.oracle_cap);
      oracle_str = ora.feasible ? ora.value.get_str() : "infeasible";
    } catch (const std::exception&) {
      oracle_str = "";
    }

    for (const std::string& mode : opt.modes) {
      std::vector<Rat> eps_list;
      if (mode == "fptas")
        eps_list = opt.epsilons;
      else
        eps_list.push_back(Rat(0));
      for (const Rat& eps : eps_list) {
        const RunOutcome res = run_one(f, mode, eps, opt.oracle_cap);
        out << id << ',' << mode << ',' << (mode == "fptas" ? rat_str(eps) : "") << ',' << n << ','
            << m << ',' << delta_str << ',';
        auto stat = [&](const char* key) -> std::string {
          const auto it = res.rep.stats.find(key);
          return it == res.rep.stats.end() ? "" : std::to_string(it->second);
        };
        out << stat("radius") << ',';
        if (!res.ok)
          out << res.error;
        else if (!res.rep.feasible)
          out << "infeasible";
        else
          out << res.rep.value.get_str();
        out << ',' << oracle_str << ',' << stat("dp_states") << ',' << res.micros << '\n';
      }
    }
  }
}

}  // namespace dmkp
