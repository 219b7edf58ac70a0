#pragma once

#include <gmpxx.h>

#include <string>

#include "qdc/errors.hpp"

namespace qdc {

// Exact rational numbers. mpq_class keeps values canonical (lowest terms,
// positive denominator, 0/1 for zero), which is exactly the invariant we
// need for golden files and equality tests.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p" or "p/q" with optional sign. Whitespace must be pre-stripped.
Rational parse_rational(const std::string& s);

std::string to_string(const Rational& r);

}  // namespace qdc
