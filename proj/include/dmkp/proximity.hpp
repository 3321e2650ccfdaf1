#pragma once

#include <stdexcept>

#include "dmkp/numbers.hpp"

namespace dmkp {

// l1 proximity bound m * (2m+1)^m * delta between an LP vertex optimum and
// some integer optimum of the standard-form problem.
inline Int proximity_bound(int m, const Int& delta) {
  if (m < 1 || delta < 1) throw std::invalid_argument("proximity_bound: m >= 1, delta >= 1");
  return Int(m) * pow_int(Int(2 * m + 1), static_cast<unsigned long>(m)) * delta;
}

// Variant in terms of Delta_1 = max |A_ij|: m * (2m*delta1 + 1)^m.
inline Int proximity_bound_inf(int m, const Int& delta1) {
  if (m < 1 || delta1 < 1) throw std::invalid_argument("proximity_bound_inf: m >= 1, delta1 >= 1");
  return Int(m) * pow_int(Int(2) * m * delta1 + 1, static_cast<unsigned long>(m));
}

}  // namespace dmkp
