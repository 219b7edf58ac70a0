#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qdc/rational.hpp"

namespace qdc {

// Euler totient and the N-th cyclotomic polynomial (monic, integer
// coefficients, ascending degree). Both cached.
long euler_phi(long n);
const std::vector<mpz_class>& cyclotomic_polynomial(long n);

// An element of a cyclotomic field Q(zeta_N), stored in the power basis
// 1, z, ..., z^{phi(N)-1} modulo Phi_N and kept canonical: the conductor is
// always the least M with the value in Q(zeta_M) (so M = 1 or M >= 3 with
// M != 2 mod 4), and the coefficients are reduced. Two values are equal iff
// their representations are identical.
class CycNum {
 public:
  CycNum() : conductor_(1), coeffs_{Rational(0)} {}
  CycNum(long n) : conductor_(1), coeffs_{Rational(n)} {}
  explicit CycNum(Rational r) : conductor_(1), coeffs_{std::move(r)} {}

  // zeta_n^k, canonicalized (e.g. zeta(2) == -1 at conductor 1).
  static CycNum zeta(long n, long k = 1);
  // Builds from raw power-basis coefficients at the given conductor; the
  // vector may have any length and is reduced mod Phi_N, then the conductor
  // is minimized.
  static CycNum from_coeffs(long conductor, std::vector<Rational> coeffs);

  long conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return conductor_ == 1 && coeffs_[0] == 0; }
  bool is_one() const { return conductor_ == 1 && coeffs_[0] == 1; }
  bool is_rational() const { return conductor_ == 1; }
  const Rational& rational_value() const;  // requires is_rational()

  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  CycNum operator-() const;
  CycNum& operator+=(const CycNum& b) { return *this = *this + b; }
  CycNum& operator-=(const CycNum& b) { return *this = *this - b; }
  CycNum& operator*=(const CycNum& b) { return *this = *this * b; }

  // Multiplicative inverse; throws input_error on zero.
  CycNum inverse() const;
  CycNum pow(long k) const;  // negative k allowed for nonzero values

  // Validates that m is a multiple of the conductor and returns the value
  // (embedding is the identity on canonical representations; the raising
  // machinery it exercises is raised_coeffs below).
  CycNum embedded(long m) const;
  // Power-basis coefficients of this value at conductor m (m must be a
  // multiple of the conductor); sends zeta_N -> zeta_m^{m/N}.
  std::vector<Rational> raised_coeffs(long m) const;

  bool operator==(const CycNum& o) const {
    return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const CycNum& o) const { return !(*this == o); }
  // Deterministic total order (conductor, then coefficients); used for maps.
  bool operator<(const CycNum& o) const;

  // Literal grammar: sum of terms `c` or `c*z^k`, c rational, sorted by
  // ascending power; e.g. "1/2 - 1/2*z^1". to_string() uses the value's own
  // conductor; to_string_at(m) re-expresses it with z = zeta_m.
  std::string to_string() const;
  std::string to_string_at(long m) const;
  // Parses the grammar with z = zeta_conductor. Whitespace-insensitive.
  static CycNum parse(const std::string& text, long conductor);

 private:
  long conductor_;
  std::vector<Rational> coeffs_;  // length phi(conductor_)

  void canonicalize(std::vector<Rational> raw);
};

inline CycNum operator*(const Rational& r, const CycNum& x) {
  return CycNum(r) * x;
}

long lcm_long(long a, long b);

}  // namespace qdc
