// Process-level checks of the CLI: exit codes, report output, generator
// determinism, bench CSV shape, golden corpus byte-stability.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dmkp/io.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& cmd) {
  const std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  RunResult r;
  if (!pipe) return r;
  char buf[4096];
  while (size_t got = fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: cli_tests <dmkp-binary> <golden-dir>\n";
    return 2;
  }
  const std::string bin = argv[1];
  const fs::path golden = argv[2];
  const fs::path work = fs::temp_directory_path() / "dmkp_cli_tests";
  fs::remove_all(work);
  fs::create_directories(work);

  const fs::path e2 = work / "e2.json";
  write_file(e2,
             "{\"kind\":\"knapsack\",\"m\":1,\"n\":3,\"A\":[[3,4,5]],\"b\":[10],"
             "\"c\":[3,4,5],\"u\":[1,1,1]}\n");

  auto r = run(bin + " solve " + e2.string() + " --mode oracle");
  expect(r.code == 0, "oracle solve exits 0");
  expect(r.out.find("\"value\": 9") != std::string::npos, "oracle finds 9");

  r = run(bin + " solve " + e2.string() + " --mode exact-paths");
  expect(r.code == 0, "exact-paths exits 0");
  expect(r.out.find("\"value\": 9") != std::string::npos, "exact-paths finds 9");

  r = run(bin + " solve " + e2.string() + " --mode exact-levels --binarized");
  expect(r.out.find("\"value\": 9") != std::string::npos, "binarized levels finds 9");

  r = run(bin + " solve " + e2.string() + " --mode fptas --epsilon 1/4");
  expect(r.code == 0, "fptas exits 0");
  {
    const auto pos = r.out.find("\"value\": ");
    long long got = -1;
    if (pos != std::string::npos) got = std::atoll(r.out.c_str() + pos + 9);
    expect(got >= 7 && got <= 9, "fptas value within [ceil(0.75*9), 9]");
  }

  r = run(bin + " solve " + e2.string() + " --mode fptas");
  expect(r.code == 4, "missing epsilon exits 4");

  r = run(bin + " solve " + e2.string() + " --mode fptas --epsilon 5/4");
  expect(r.code == 4, "epsilon out of range exits 4");

  const fs::path bad = work / "bad.json";
  write_file(bad, "{\"kind\":\"knapsack\"\n");
  r = run(bin + " solve " + bad.string() + " --mode oracle");
  expect(r.code == 2, "parse error exits 2");

  const fs::path neg = work / "neg.json";
  write_file(neg,
             "{\"kind\":\"knapsack\",\"m\":1,\"n\":1,\"A\":[[1]],\"b\":[-1],"
             "\"c\":[1],\"u\":[1]}\n");
  r = run(bin + " validate " + neg.string());
  expect(r.code == 3, "validation failure exits 3");
  expect(r.out.find("b nonnegative") != std::string::npos, "violation is printed");
  r = run(bin + " solve " + neg.string() + " --mode oracle");
  expect(r.code == 3, "solving an invalid instance exits 3");

  r = run(bin + " validate " + e2.string());
  expect(r.code == 0 && r.out == "ok\n", "valid instance prints ok");

  const fs::path infeas = work / "inf.json";
  write_file(infeas,
             "{\"kind\":\"standard\",\"m\":1,\"n\":1,\"A\":[[2]],\"b\":[3],"
             "\"c\":[1],\"u\":[5],\"lo\":[0]}\n");
  r = run(bin + " solve " + infeas.string() + " --mode exact-levels");
  expect(r.code == 6, "infeasible exits 6");
  expect(r.out.find("\"status\": \"infeasible\"") != std::string::npos, "infeasible status printed");

  // an undersized radius override turns e2 infeasible (z = 0 cannot reach b')
  r = run(bin + " solve " + e2.string() + " --mode exact-levels --radius 0");
  expect(r.code == 6, "radius 0 override reports infeasible");

  const fs::path big = work / "big.json";
  write_file(big,
             "{\"kind\":\"knapsack\",\"m\":1,\"n\":8,\"A\":[[1,1,1,1,1,1,1,1]],\"b\":[100],"
             "\"c\":[1,1,1,1,1,1,1,1],\"u\":[9,9,9,9,9,9,9,9]}\n");
  r = run(bin + " solve " + big.string() + " --mode oracle --cap 1000");
  expect(r.code == 5, "oracle cap exceeded exits 5");

  // generator determinism at the byte level
  const fs::path gen1 = work / "gen1";
  const fs::path gen2 = work / "gen2";
  run(bin + " generate --out " + gen1.string() + " --seed 7 --m 2 --n 4 --count 3");
  run(bin + " generate --out " + gen2.string() + " --seed 7 --m 2 --n 4 --count 3");
  int gen_files = 0;
  for (const auto& entry : fs::directory_iterator(gen1)) {
    ++gen_files;
    const fs::path twin = gen2 / entry.path().filename();
    expect(fs::exists(twin), "twin generated file exists");
    expect(slurp(entry.path()) == slurp(twin), "generated bytes identical across runs");
  }
  expect(gen_files == 3, "generator wrote three files");

  // bench: header + one row per (instance, mode), oracle column agrees
  const fs::path corpus = work / "corpus";
  run(bin + " generate --out " + corpus.string() + " --seed 11 --m 1 --n 4 --count 3");
  r = run(bin + " bench --corpus " + corpus.string() + " --modes oracle,exact-paths,fptas --epsilons 1/2");
  expect(r.code == 0, "bench exits 0");
  {
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    expect(line == "id,mode,epsilon,n,m,delta,radius,value,oracle,states,micros",
           "bench header matches the contract");
    int rows = 0;
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      ++rows;
      // exact rows must reproduce the oracle column
      std::vector<std::string> cells;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) cells.push_back(cell);
      if (cells.size() >= 9 && cells[1] == "exact-paths") expect(cells[7] == cells[8], "exact value = oracle");
      if (cells.size() >= 9 && cells[1] == "fptas" && cells[8] != "" && cells[8] != "infeasible") {
        const double value = std::atof(cells[7].c_str());
        const double oracle = std::atof(cells[8].c_str());
        expect(2 * value >= oracle && value <= oracle, "fptas row within [oracle/2, oracle]");
      }
    }
    expect(rows == 9, "bench emits 3 instances x 3 modes rows");
  }

  // a corrupt corpus member becomes an error row, the run continues
  write_file(corpus / "zz_broken.json", "{nope\n");
  r = run(bin + " bench --corpus " + corpus.string() + " --modes oracle");
  expect(r.code == 0, "bench survives a corrupt file");
  expect(r.out.find("error:parse") != std::string::npos, "corrupt file recorded as error row");
  {
    int rows = 0;
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line))
      if (!line.empty()) ++rows;
    expect(rows == 4, "three oracle rows plus one error row");
  }

  // standard-form corpus goes through bench, infeasible rows included
  const fs::path std_corpus = work / "std_corpus";
  run(bin + " generate --out " + std_corpus.string() +
      " --seed 21 --m 2 --n 4 --count 4 --kind standard");
  r = run(bin + " bench --corpus " + std_corpus.string() + " --modes oracle,exact-paths");
  expect(r.code == 0, "standard bench exits 0");
  {
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    while (std::getline(lines, line)) {
      if (line.empty()) continue;
      std::vector<std::string> cells;
      std::stringstream ss(line);
      std::string cell;
      while (std::getline(ss, cell, ',')) cells.push_back(cell);
      if (cells.size() >= 9 && cells[1] == "exact-paths")
        expect(cells[7] == cells[8], "standard exact value (or infeasible) = oracle");
    }
  }

  // golden corpus: canonical serialization is byte-stable
  int golden_files = 0;
  for (const auto& entry : fs::directory_iterator(golden)) {
    if (entry.path().extension() != ".json") continue;
    ++golden_files;
    const std::string text = slurp(entry.path());
    const auto f = dmkp::parse_instance(text);
    expect(dmkp::serialize_instance(f) == text,
           "golden round-trip byte-exact: " + entry.path().filename().string());
  }
  expect(golden_files >= 3, "golden corpus present");

  if (failures == 0) {
    std::cout << "cli_tests: all checks passed\n";
    return 0;
  }
  std::cerr << "cli_tests: " << failures << " failures\n";
  return 1;
}
