#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "dmkp/instance.hpp"

namespace dmkp {

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// On-disk instance document.  Exactly one of knapsack/standard is active.
// meta is carried through verbatim so annotated corpora round-trip.
struct InstanceFile {
  enum class Kind { kKnapsack, kStandard };
  Kind kind = Kind::kKnapsack;
  KnapsackInstance knapsack;
  StandardFormInstance standard;
  nlohmann::ordered_json meta;  // null when absent

  std::vector<std::string> validate_instance() const {
    return kind == Kind::kKnapsack ? validate(knapsack) : validate(standard);
  }
};

// Structural parsing only (shapes and integer ranges); invariant checking is
// the caller's move via validate_instance().
InstanceFile parse_instance(const std::string& text);
InstanceFile load_instance(const std::string& path);

// Canonical form: fixed key order, two-space indent, trailing newline.
// serialize(parse(f)) is idempotent byte-for-byte.
std::string serialize_instance(const InstanceFile& f);
void save_instance(const InstanceFile& f, const std::string& path);

std::string serialize_report(const SolveReport& rep);

}  // namespace dmkp
