#include <doctest.h>

#include "dmkp/generator.hpp"
#include "dmkp/io.hpp"
#include "dmkp/linalg.hpp"

using namespace dmkp;

TEST_CASE("instance parse and canonical round-trip") {
  const std::string text = R"({
  "kind": "knapsack",
  "m": 1,
  "n": 3,
  "A": [[3, 4, 5]],
  "b": [10],
  "c": [3, 4, 5],
  "u": [1, 1, 1],
  "meta": {"known_opt": 9}
})";
  const InstanceFile f = parse_instance(text);
  CHECK(f.kind == InstanceFile::Kind::kKnapsack);
  CHECK(f.knapsack.A == Mat{{3, 4, 5}});
  CHECK(f.knapsack.b == std::vector<long long>{10});
  CHECK(f.meta.at("known_opt") == 9);
  CHECK(f.validate_instance().empty());

  const std::string canon = serialize_instance(f);
  CHECK(serialize_instance(parse_instance(canon)) == canon);
}

TEST_CASE("standard-form files carry lo and round-trip") {
  InstanceFile f;
  f.kind = InstanceFile::Kind::kStandard;
  f.standard.m = 1;
  f.standard.n = 2;
  f.standard.A = Mat{{1, -1}};
  f.standard.b = {0};
  f.standard.c = {1, 0};
  f.standard.lo = {-1, 0};
  f.standard.up = {1, 2};
  const std::string canon = serialize_instance(f);
  const InstanceFile g = parse_instance(canon);
  CHECK(g.kind == InstanceFile::Kind::kStandard);
  CHECK(g.standard.A == f.standard.A);
  CHECK(g.standard.lo == f.standard.lo);
  CHECK(g.standard.up == f.standard.up);
  CHECK(serialize_instance(g) == canon);
}

TEST_CASE("parse failures carry a reason") {
  CHECK_THROWS_AS(parse_instance("not json"), ParseError);
  CHECK_THROWS_AS(parse_instance("{}"), ParseError);
  CHECK_THROWS_AS(parse_instance(R"({"kind":"knapsack","m":1,"n":1,"A":[[1]],"b":[1],"c":[1]})"),
                  ParseError);  // missing u
  CHECK_THROWS_AS(parse_instance(R"({"kind":"weird","m":1,"n":1,"A":[[1]],"b":[1],"c":[1],"u":[1]})"),
                  ParseError);
  CHECK_THROWS_AS(
      parse_instance(R"({"kind":"knapsack","m":1,"n":2,"A":[[1]],"b":[1],"c":[1,1],"u":[1,1]})"),
      ParseError);  // ragged A
}

TEST_CASE("report serialization is stable") {
  SolveReport rep;
  rep.mode = SolveMode::kOracle;
  rep.value = 9;
  rep.witness = {0, 1, 1};
  rep.stats["points_visited"] = 8;
  const std::string doc = serialize_report(rep);
  CHECK(doc.find("\"mode\": \"oracle\"") != std::string::npos);
  CHECK(doc.find("\"value\": 9") != std::string::npos);
  CHECK(doc.find("\"status\": \"optimal\"") != std::string::npos);

  SolveReport inf;
  inf.mode = SolveMode::kExactPaths;
  inf.feasible = false;
  CHECK(serialize_report(inf).find("\"status\": \"infeasible\"") != std::string::npos);
}

TEST_CASE("generator is deterministic and emits valid annotated instances") {
  GeneratorConfig cfg;
  cfg.seed = 99;
  cfg.m = 2;
  cfg.n = 5;
  cfg.count = 8;
  const auto first = generate_instances(cfg);
  const auto second = generate_instances(cfg);
  REQUIRE(first.size() == 8);
  for (size_t i = 0; i < first.size(); ++i) {
    CHECK(serialize_instance(first[i]) == serialize_instance(second[i]));
    CHECK(first[i].validate_instance().empty());
    CHECK(first[i].meta.contains("delta"));
  }

  cfg.kind = InstanceFile::Kind::kStandard;
  const auto std_batch = generate_instances(cfg);
  for (const auto& f : std_batch) {
    CHECK(f.validate_instance().empty());
    CHECK(rank(f.standard.A) == f.standard.m);
  }
}
