#include "qdc/rational.hpp"

#include <cctype>

namespace qdc {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw input_error("empty rational literal");
  size_t i = 0;
  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = (s[i] == '-');
    ++i;
  }
  auto read_digits = [&](mpz_class& out) {
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw input_error("bad rational literal: " + s);
    out = mpz_class(s.substr(start, i - start));
  };
  mpz_class num, den(1);
  read_digits(num);
  if (i < s.size() && s[i] == '/') {
    ++i;
    read_digits(den);
    if (den == 0) throw input_error("rational with zero denominator: " + s);
  }
  if (i != s.size()) throw input_error("trailing junk in rational: " + s);
  Rational r(neg ? mpz_class(-num) : num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace qdc
