#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

#include "algent/errors.hpp"

namespace algent {

using Int = mpz_class;
using Rat = mpq_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rat& v) {
  return v.get_den() == 1 ? v.get_num().get_str() : v.get_str();
}

inline Int parse_int(std::string_view s) {
  Int out;
  if (s.empty() || out.set_str(std::string(s), 10) != 0)
    throw ParseError("invalid integer '" + std::string(s) + "'", 0);
  return out;
}

// Accepts "p" or "p/q"; result is canonicalized.
inline Rat parse_rat(std::string_view s) {
  Rat out;
  if (s.empty() || out.set_str(std::string(s), 10) != 0)
    throw ParseError("invalid rational '" + std::string(s) + "'", 0);
  if (out.get_den() == 0) throw ParseError("zero denominator in '" + std::string(s) + "'", 0);
  out.canonicalize();
  return out;
}

// Natural log of a positive big integer without overflowing double.
inline double log_abs(const Int& v) {
  if (v == 0) return -HUGE_VAL;
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

inline double to_double(const Rat& v) { return v.get_d(); }

inline Int binomial(unsigned long n, unsigned long k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace algent
