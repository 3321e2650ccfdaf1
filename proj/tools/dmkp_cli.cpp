// Command-line front-end: solve / validate / generate / bench.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "dmkp/bench.hpp"
#include "dmkp/exactdp.hpp"
#include "dmkp/fptas.hpp"
#include "dmkp/generator.hpp"
#include "dmkp/greedy.hpp"
#include "dmkp/io.hpp"

namespace {

// Stable exit codes, also listed in --help.
enum ExitCode {
  kOk = 0,
  kUsage = 1,
  kParseError = 2,
  kValidationError = 3,
  kBadEpsilon = 4,
  kCapExceeded = 5,
  kInfeasible = 6,
  kOverflow = 7,
};

constexpr const char* kExitCodeHelp =
    "Exit codes:\n"
    "  0 success\n"
    "  1 usage error\n"
    "  2 instance parse error\n"
    "  3 invalid instance (or mode/kind mismatch)\n"
    "  4 missing or invalid --epsilon\n"
    "  5 oracle search-space cap exceeded\n"
    "  6 problem infeasible\n"
    "  7 arithmetic range exceeded\n";

dmkp::Rat parse_epsilon(const std::string& text) {
  dmkp::Rat eps;
  try {
    eps = dmkp::parse_rat(text);
  } catch (const std::invalid_argument& e) {
    std::cerr << "bad --epsilon: " << e.what() << "\n";
    std::exit(kBadEpsilon);
  }
  if (eps <= 0 || eps >= 1) {
    std::cerr << "--epsilon must lie strictly between 0 and 1\n";
    std::exit(kBadEpsilon);
  }
  return eps;
}

dmkp::InstanceFile load_or_exit(const std::string& path) {
  try {
    return dmkp::load_instance(path);
  } catch (const dmkp::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    std::exit(kParseError);
  }
}

void validate_or_exit(const dmkp::InstanceFile& f) {
  const auto bad = f.validate_instance();
  if (bad.empty()) return;
  for (const auto& v : bad) std::cerr << "violation: " << v << "\n";
  std::exit(kValidationError);
}

int cmd_solve(const std::string& path, const std::string& mode, const std::string& eps_text,
              std::optional<long long> radius, long long cap, bool binarized) {
  const dmkp::InstanceFile f = load_or_exit(path);
  validate_or_exit(f);
  const bool knap = f.kind == dmkp::InstanceFile::Kind::kKnapsack;

  dmkp::Rat eps;
  if (mode == "fptas") {
    if (eps_text.empty()) {
      std::cerr << "--epsilon is required with --mode fptas\n";
      return kBadEpsilon;
    }
    eps = parse_epsilon(eps_text);
  }

  std::optional<dmkp::Int> radius_override;
  if (radius) radius_override = dmkp::make_int(*radius);

  dmkp::SolveReport rep;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (mode == "greedy" || mode == "fptas") {
      if (!knap) {
        std::cerr << "mode '" << mode << "' requires a knapsack instance\n";
        return kValidationError;
      }
      rep = mode == "greedy" ? dmkp::greedy_solve(f.knapsack) : dmkp::fptas_solve(f.knapsack, eps);
    } else if (mode == "oracle") {
      rep = knap ? dmkp::brute_force_knapsack(f.knapsack, cap)
                 : dmkp::brute_force_standard(f.standard, cap);
    } else if (mode == "exact-levels" || mode == "exact-paths") {
      dmkp::ExactVariant variant = mode == "exact-paths" ? dmkp::ExactVariant::kPaths
                                   : binarized           ? dmkp::ExactVariant::kLevelsBinarized
                                                         : dmkp::ExactVariant::kLevels;
      rep = knap ? dmkp::solve_exact(f.knapsack, variant, radius_override)
                 : dmkp::solve_exact(f.standard, variant, radius_override);
    } else {
      std::cerr << "unknown mode '" << mode << "'\n";
      return kUsage;
    }
  } catch (const dmkp::CapExceededError& e) {
    std::cerr << "oracle cap exceeded: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const dmkp::OverflowError& e) {
    std::cerr << "overflow: " << e.what() << "\n";
    return kOverflow;
  }
  rep.stats["micros"] = std::chrono::duration_cast<std::chrono::microseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();

  std::cout << dmkp::serialize_report(rep);
  return rep.feasible ? kOk : kInfeasible;
}

int cmd_validate(const std::string& path) {
  const dmkp::InstanceFile f = load_or_exit(path);
  const auto bad = f.validate_instance();
  if (bad.empty()) {
    std::cout << "ok\n";
    return kOk;
  }
  for (const auto& v : bad) std::cout << "violation: " << v << "\n";
  return kValidationError;
}

int cmd_generate(const dmkp::GeneratorConfig& cfg, const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  const auto files = dmkp::generate_instances(cfg);
  const char* prefix = cfg.kind == dmkp::InstanceFile::Kind::kKnapsack ? "knapsack" : "standard";
  for (size_t i = 0; i < files.size(); ++i) {
    const std::string name =
        std::string(prefix) + "_s" + std::to_string(cfg.seed) + "_" + std::to_string(i) + ".json";
    const std::string path = out_dir + "/" + name;
    dmkp::save_instance(files[i], path);
    std::cout << path << "\n";
  }
  return kOk;
}

int cmd_bench(const std::string& corpus, const std::vector<std::string>& modes,
              const std::vector<std::string>& eps_texts, long long cap) {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(corpus))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());

  dmkp::BenchOptions opt;
  opt.modes = modes;
  opt.oracle_cap = cap;
  for (const auto& t : eps_texts) opt.epsilons.push_back(parse_epsilon(t));
  if (opt.epsilons.empty()) opt.epsilons.push_back(dmkp::Rat(1, 4));
  dmkp::run_bench(files, opt, std::cout);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvers for bounded multidimensional knapsack and standard-form integer programs\n"
               "with bounded minors: greedy approximation, FPTAS, and two exact dynamic programs."};
  app.footer(kExitCodeHelp);
  app.require_subcommand(1);

  std::string path, mode = "oracle", eps_text;
  std::optional<long long> radius;
  long long cap = dmkp::kDefaultOracleCap;
  bool binarized = false;

  CLI::App* solve = app.add_subcommand("solve", "Solve one instance file and print a report");
  solve->add_option("file", path, "instance file (JSON)")->required();
  solve->add_option("--mode", mode, "greedy | fptas | exact-levels | exact-paths | oracle")->required();
  solve->add_option("--epsilon", eps_text, "rational p/q, required for fptas");
  solve->add_option("--radius", radius, "override the exact-solver search radius (testing)");
  solve->add_option("--cap", cap, "oracle enumeration cap");
  solve->add_flag("--binarized", binarized, "binarize multiplicity ranges (exact-levels)");

  CLI::App* validate = app.add_subcommand("validate", "Check instance invariants");
  validate->add_option("file", path, "instance file (JSON)")->required();

  dmkp::GeneratorConfig cfg;
  std::string out_dir = ".";
  std::string kind = "knapsack";
  CLI::App* gen = app.add_subcommand("generate", "Write random instance files");
  gen->add_option("--out", out_dir, "output directory");
  gen->add_option("--seed", cfg.seed, "RNG seed");
  gen->add_option("--m", cfg.m, "rows")->check(CLI::PositiveNumber);
  gen->add_option("--n", cfg.n, "columns")->check(CLI::PositiveNumber);
  gen->add_option("--max-entry", cfg.max_entry, "entry magnitude bound");
  gen->add_option("--max-u", cfg.max_u, "variable bound range");
  gen->add_option("--max-c", cfg.max_c, "profit bound");
  gen->add_option("--count", cfg.count, "number of instances")->check(CLI::PositiveNumber);
  gen->add_option("--kind", kind, "knapsack | standard");

  std::string corpus;
  std::vector<std::string> modes, eps_list;
  CLI::App* bench = app.add_subcommand("bench", "Run solvers over a corpus, CSV to stdout");
  bench->add_option("--corpus", corpus, "directory of instance files")->required();
  bench->add_option("--modes", modes, "comma-separated mode list")->required()->delimiter(',');
  bench->add_option("--epsilons", eps_list, "comma-separated rationals for fptas")->delimiter(',');
  bench->add_option("--cap", cap, "oracle enumeration cap");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return cmd_solve(path, mode, eps_text, radius, cap, binarized);
    if (validate->parsed()) return cmd_validate(path);
    if (gen->parsed()) {
      if (kind == "standard")
        cfg.kind = dmkp::InstanceFile::Kind::kStandard;
      else if (kind != "knapsack") {
        std::cerr << "unknown kind '" << kind << "'\n";
        return kUsage;
      }
      return cmd_generate(cfg, out_dir);
    }
    if (bench->parsed()) return cmd_bench(corpus, modes, eps_list, cap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
