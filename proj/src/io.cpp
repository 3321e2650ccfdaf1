#include "dmkp/io.hpp"

#include <fstream>
#include <sstream>

namespace dmkp {

namespace {

using json = nlohmann::ordered_json;

long long get_i64(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw ParseError(what + " must be an integer");
  return j.get<long long>();
}

std::vector<long long> get_vec(const json& j, int len, const std::string& what) {
  if (!j.is_array() || static_cast<int>(j.size()) != len)
    throw ParseError(what + " must be an array of " + std::to_string(len) + " integers");
  std::vector<long long> out;
  out.reserve(len);
  for (const auto& v : j) out.push_back(get_i64(v, what + " entry"));
  return out;
}

Mat get_matrix(const json& j, int m, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != m) throw ParseError("A must have m rows");
  Mat a(m, n);
  for (int i = 0; i < m; ++i) {
    const auto row = get_vec(j[i], n, "A row");
    for (int jj = 0; jj < n; ++jj) a.at(i, jj) = row[jj];
  }
  return a;
}

json matrix_to_json(const Mat& a) {
  json rows = json::array();
  for (int i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

InstanceFile parse_instance(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  for (const auto& key : {"kind", "m", "n", "A", "b", "c", "u"})
    if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");

  InstanceFile f;
  const std::string kind = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";
  if (kind == "knapsack")
    f.kind = InstanceFile::Kind::kKnapsack;
  else if (kind == "standard")
    f.kind = InstanceFile::Kind::kStandard;
  else
    throw ParseError("kind must be \"knapsack\" or \"standard\"");

  const int m = static_cast<int>(get_i64(doc["m"], "m"));
  const int n = static_cast<int>(get_i64(doc["n"], "n"));
  if (m < 1 || m > 64 || n < 1 || n > 100000) throw ParseError("m or n out of supported range");

  if (f.kind == InstanceFile::Kind::kKnapsack) {
    KnapsackInstance& k = f.knapsack;
    k.m = m;
    k.n = n;
    k.A = get_matrix(doc["A"], m, n);
    k.b = get_vec(doc["b"], m, "b");
    k.c = get_vec(doc["c"], n, "c");
    k.u = get_vec(doc["u"], n, "u");
  } else {
    if (!doc.contains("lo")) throw ParseError("missing field 'lo'");
    StandardFormInstance& s = f.standard;
    s.m = m;
    s.n = n;
    s.A = get_matrix(doc["A"], m, n);
    s.b = get_vec(doc["b"], m, "b");
    s.c = get_vec(doc["c"], n, "c");
    s.lo = get_vec(doc["lo"], n, "lo");
    s.up = get_vec(doc["u"], n, "u");
  }
  if (doc.contains("meta")) f.meta = doc["meta"];
  return f;
}

InstanceFile load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str());
}

std::string serialize_instance(const InstanceFile& f) {
  json doc;
  const bool knap = f.kind == InstanceFile::Kind::kKnapsack;
  doc["kind"] = knap ? "knapsack" : "standard";
  if (knap) {
    const KnapsackInstance& k = f.knapsack;
    doc["m"] = k.m;
    doc["n"] = k.n;
    doc["A"] = matrix_to_json(k.A);
    doc["b"] = k.b;
    doc["c"] = k.c;
    doc["u"] = k.u;
  } else {
    const StandardFormInstance& s = f.standard;
    doc["m"] = s.m;
    doc["n"] = s.n;
    doc["A"] = matrix_to_json(s.A);
    doc["b"] = s.b;
    doc["c"] = s.c;
    doc["u"] = s.up;
    doc["lo"] = s.lo;
  }
  if (!f.meta.is_null()) doc["meta"] = f.meta;
  return doc.dump(2) + "\n";
}

void save_instance(const InstanceFile& f, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << serialize_instance(f);
}

std::string serialize_report(const SolveReport& rep) {
  json doc;
  doc["mode"] = to_string(rep.mode);
  doc["status"] = rep.feasible ? "optimal" : "infeasible";
  if (rep.feasible) {
    if (fits_i64(rep.value))
      doc["value"] = to_i64(rep.value);
    else
      doc["value"] = rep.value.get_str();
    doc["witness"] = rep.witness;
  }
  json stats = json::object();
  for (const auto& [key, v] : rep.stats) stats[key] = v;
  doc["stats"] = std::move(stats);
  return doc.dump(2) + "\n";
}

}  // namespace dmkp
