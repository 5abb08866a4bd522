#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qpdo {

using Rat = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw Error("expected integer, got " + r.get_str());
  if (!r.get_num().fits_slong_p()) throw Error("integer out of range: " + r.get_str());
  return mpz_get_si(r.get_num().get_mpz_t());
}

// Denominator of r in lowest terms, as a positive long.
inline long rat_den(const Rat& r) {
  if (!r.get_den().fits_slong_p()) throw Error("denominator out of range");
  return mpz_get_si(r.get_den().get_mpz_t());
}

inline Rat parse_rat(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw Error("bad rational: '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

// floor(a/b) for b > 0
inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline long mod_floor(long a, long b) { return a - b * floor_div(a, b); }

}  // namespace qpdo
