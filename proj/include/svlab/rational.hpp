#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

#include "svlab/halfint.hpp"

namespace svlab {

/// Exact scalar used everywhere a verdict depends on the value.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational rat(HalfInt v) { return rat(v.twice(), 2); }

/// Canonical "p/q" form; plain "p" when the denominator is 1.
inline std::string rat_str(const Rational& r) { return r.get_str(); }

/// Parses "p", "p/q", or a plain decimal integer with sign.
inline Rational parse_rational(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("not a rational: '" + s + "'");
  r.canonicalize();
  return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace svlab
