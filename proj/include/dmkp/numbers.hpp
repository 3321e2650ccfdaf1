#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace dmkp {

// Exact arithmetic carriers for everything that can outgrow machine words:
// determinants, LP coordinates, scaled costs, objective values.  Instance
// entries and DP coordinates stay in int64 wherever a range check proves it
// safe; the check lives next to the code that relies on it.
using Int = mpz_class;
using Rat = mpq_class;

struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

inline bool fits_i64(const Int& v) { return v.fits_slong_p(); }

inline long long to_i64(const Int& v) {
  if (!v.fits_slong_p()) throw OverflowError("integer exceeds 64-bit range: " + v.get_str());
  return static_cast<long long>(v.get_si());
}

// gmpxx has no long long overloads; long is 64-bit on every platform we
// target (static_assert below), so these casts are lossless.
static_assert(sizeof(long) == sizeof(long long), "requires LP64: long must be 64-bit");

inline Int make_int(long long v) { return Int(static_cast<long>(v)); }
inline Rat make_rat(long long v) { return Rat(static_cast<long>(v)); }

// floor(p/q) as an exact integer, correct for negative values.
inline Int rat_floor(const Rat& r) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return out;
}

inline Int rat_ceil(const Rat& r) {
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return out;
}

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

// Parses "p/q" or a bare integer.  Rational flags are strings on purpose:
// no float round-trip anywhere near the guarantees.
inline Rat parse_rat(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

inline Int pow_int(Int base, unsigned long exp) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace dmkp
