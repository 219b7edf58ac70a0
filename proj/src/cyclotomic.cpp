#include "qdc/cyclotomic.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>

namespace qdc {

long lcm_long(long a, long b) { return std::lcm(a, b); }

long euler_phi(long n) {
  assert(n >= 1);
  long result = n, m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

std::vector<long> divisors_ascending(long n) {
  std::vector<long> d;
  for (long i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

// Exact division of integer polynomials, quotient known to be integral.
std::vector<mpz_class> poly_div_exact(std::vector<mpz_class> num,
                                      const std::vector<mpz_class>& den) {
  assert(!den.empty() && den.back() == 1);  // monic divisors only
  long dn = static_cast<long>(num.size()) - 1;
  long dd = static_cast<long>(den.size()) - 1;
  assert(dn >= dd);
  std::vector<mpz_class> quot(dn - dd + 1);
  for (long i = dn; i >= dd; --i) {
    mpz_class c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (long j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const auto& r : num) {
    assert(r == 0);
    (void)r;
  }
  return quot;
}

std::map<long, std::vector<mpz_class>> g_cyclo_cache;
std::recursive_mutex g_cyclo_mutex;  // compute_cyclotomic recurses

std::vector<mpz_class> compute_cyclotomic(long n) {
  if (n == 1) return {mpz_class(-1), mpz_class(1)};  // x - 1
  // (x^n - 1) / prod_{d | n, d < n} Phi_d
  std::vector<mpz_class> p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (long d : divisors_ascending(n)) {
    if (d == n) continue;
    p = poly_div_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

// Reduces a rational polynomial modulo Phi_n in place and truncates it to
// degree < phi(n).
void reduce_mod_phi(std::vector<Rational>& v, long n) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const long deg = static_cast<long>(phi_poly.size()) - 1;
  for (long i = static_cast<long>(v.size()) - 1; i >= deg; --i) {
    if (v[i] == 0) continue;
    Rational c = v[i];
    v[i] = 0;
    for (long j = 0; j < deg; ++j) {
      if (phi_poly[j] != 0) v[i - deg + j] -= c * Rational(phi_poly[j]);
    }
  }
  v.resize(deg, Rational(0));
}

// Solves A x = b exactly, A given by columns. Returns false if inconsistent.
// A is assumed to have full column rank (columns are field basis vectors).
bool solve_columns(std::vector<std::vector<Rational>> cols,
                   std::vector<Rational> b, std::vector<Rational>& out) {
  const size_t nrows = b.size();
  const size_t ncols = cols.size();
  // Augmented row-major matrix.
  std::vector<std::vector<Rational>> m(nrows,
                                       std::vector<Rational>(ncols + 1));
  for (size_t j = 0; j < ncols; ++j)
    for (size_t i = 0; i < nrows; ++i) m[i][j] = cols[j][i];
  for (size_t i = 0; i < nrows; ++i) m[i][ncols] = b[i];

  std::vector<long> pivot_row_of_col(ncols, -1);
  size_t rank = 0;
  for (size_t c = 0; c < ncols && rank < nrows; ++c) {
    size_t r = rank;
    while (r < nrows && m[r][c] == 0) ++r;
    if (r == nrows) continue;
    std::swap(m[rank], m[r]);
    Rational inv = 1 / m[rank][c];
    for (size_t j = c; j <= ncols; ++j) m[rank][j] *= inv;
    for (size_t i = 0; i < nrows; ++i) {
      if (i == rank || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t j = c; j <= ncols; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_row_of_col[c] = static_cast<long>(rank);
    ++rank;
  }
  for (size_t i = rank; i < nrows; ++i)
    if (m[i][ncols] != 0) return false;
  out.assign(ncols, Rational(0));
  for (size_t c = 0; c < ncols; ++c) {
    if (pivot_row_of_col[c] < 0) return false;  // deficient column rank
    out[c] = m[pivot_row_of_col[c]][ncols];
  }
  return true;
}

// Power-basis coordinates of zeta_n^k (k >= 0) as a rational vector.
std::vector<Rational> zeta_power_coords(long n, long k) {
  std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
  v[k] = 1;
  reduce_mod_phi(v, n);
  return v;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(long n) {
  assert(n >= 1);
  std::lock_guard<std::recursive_mutex> lock(g_cyclo_mutex);
  auto it = g_cyclo_cache.find(n);
  if (it != g_cyclo_cache.end()) return it->second;
  auto poly = compute_cyclotomic(n);
  return g_cyclo_cache.emplace(n, std::move(poly)).first->second;
}

const Rational& CycNum::rational_value() const {
  assert(is_rational());
  return coeffs_[0];
}

void CycNum::canonicalize(std::vector<Rational> raw) {
  long n = conductor_;
  reduce_mod_phi(raw, n);
  if (n == 1) {
    coeffs_ = std::move(raw);
    return;
  }
  // Fast path: a value with only a constant term is rational.
  bool constant_only = true;
  for (size_t i = 1; i < raw.size(); ++i)
    if (raw[i] != 0) {
      constant_only = false;
      break;
    }
  if (constant_only) {
    conductor_ = 1;
    coeffs_ = {raw.empty() ? Rational(0) : raw[0]};
    return;
  }
  // Minimal conductor: first divisor M of n whose field contains the value.
  // M = 2 mod 4 is skipped (Q(zeta_M) = Q(zeta_{M/2}) and M/2 comes first),
  // so canonical conductors are 1 or >= 3 with M != 2 mod 4.
  for (long m : divisors_ascending(n)) {
    if (m == n || m == 1 || m % 4 == 2) continue;
    long step = n / m;
    std::vector<std::vector<Rational>> cols;
    cols.reserve(euler_phi(m));
    for (long j = 0; j < euler_phi(m); ++j) {
      auto col = zeta_power_coords(n, j * step);
      col.resize(euler_phi(n), Rational(0));
      cols.push_back(std::move(col));
    }
    std::vector<Rational> sol;
    if (solve_columns(std::move(cols), raw, sol)) {
      conductor_ = m;
      coeffs_ = std::move(sol);
      return;
    }
  }
  assert(n % 4 != 2);  // otherwise Q(zeta_{n/2}) would have matched above
  coeffs_ = std::move(raw);
}

CycNum CycNum::from_coeffs(long conductor, std::vector<Rational> coeffs) {
  if (conductor < 1) throw input_error("conductor must be positive");
  CycNum x;
  x.conductor_ = conductor;
  x.canonicalize(std::move(coeffs));
  return x;
}

CycNum CycNum::zeta(long n, long k) {
  if (n < 1) throw input_error("conductor must be positive");
  k %= n;
  if (k < 0) k += n;
  std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
  v[k] = 1;
  return from_coeffs(n, std::move(v));
}

std::vector<Rational> CycNum::raised_coeffs(long m) const {
  if (m % conductor_ != 0)
    throw input_error("embed with non-divisible conductor");
  if (m == conductor_) {
    auto v = coeffs_;
    v.resize(euler_phi(m), Rational(0));
    return v;
  }
  long step = m / conductor_;
  std::vector<Rational> raw(static_cast<size_t>(m), Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) raw[k * step] += coeffs_[k];
  }
  reduce_mod_phi(raw, m);
  return raw;
}

CycNum CycNum::embedded(long m) const {
  if (m % conductor_ != 0)
    throw input_error("embed with non-divisible conductor");
  return *this;
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  if (a.is_rational() && b.is_rational())
    return CycNum(a.coeffs_[0] + b.coeffs_[0]);
  long l = lcm_long(a.conductor_, b.conductor_);
  auto va = a.raised_coeffs(l);
  auto vb = b.raised_coeffs(l);
  for (size_t i = 0; i < va.size(); ++i) va[i] += vb[i];
  return CycNum::from_coeffs(l, std::move(va));
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;  // negation cannot shrink the field
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  if (a.is_zero() || b.is_zero()) return CycNum();
  if (a.is_rational() && b.is_rational())
    return CycNum(a.coeffs_[0] * b.coeffs_[0]);
  if (a.is_rational()) {
    CycNum r = b;
    for (auto& c : r.coeffs_) c *= a.coeffs_[0];
    return r;  // scaling by a nonzero rational preserves the field
  }
  if (b.is_rational()) return b * a;
  long l = lcm_long(a.conductor_, b.conductor_);
  auto va = a.raised_coeffs(l);
  auto vb = b.raised_coeffs(l);
  std::vector<Rational> prod(va.size() + vb.size() - 1, Rational(0));
  for (size_t i = 0; i < va.size(); ++i) {
    if (va[i] == 0) continue;
    for (size_t j = 0; j < vb.size(); ++j) {
      if (vb[j] != 0) prod[i + j] += va[i] * vb[j];
    }
  }
  return CycNum::from_coeffs(l, std::move(prod));
}

CycNum CycNum::inverse() const {
  if (is_zero()) throw input_error("division by zero");
  if (is_rational()) return CycNum(1 / coeffs_[0]);
  // Solve (this * y) = 1 via the multiplication-by-this matrix.
  long n = conductor_;
  long phi = euler_phi(n);
  std::vector<std::vector<Rational>> cols;
  cols.reserve(phi);
  for (long j = 0; j < phi; ++j) {
    // Column j: coordinates of this * z^j.
    std::vector<Rational> col(coeffs_.size() + j, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) col[i + j] = coeffs_[i];
    reduce_mod_phi(col, n);
    cols.push_back(std::move(col));
  }
  std::vector<Rational> rhs(phi, Rational(0));
  rhs[0] = 1;
  std::vector<Rational> sol;
  bool ok = solve_columns(std::move(cols), std::move(rhs), sol);
  assert(ok);  // nonzero elements of a field are invertible
  (void)ok;
  return from_coeffs(n, std::move(sol));
}

CycNum CycNum::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycNum r(1), base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

bool CycNum::operator<(const CycNum& o) const {
  if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    int c = cmp(coeffs_[i], o.coeffs_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string CycNum::to_string() const { return to_string_at(conductor_); }

std::string CycNum::to_string_at(long m) const {
  auto v = raised_coeffs(m);
  std::string out;
  for (size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    bool neg = v[k] < 0;
    Rational a = neg ? Rational(-v[k]) : v[k];
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    out += a.get_str();
    if (k > 0) out += "*z^" + std::to_string(k);
  }
  if (out.empty()) out = "0";
  return out;
}

CycNum CycNum::parse(const std::string& text, long conductor) {
  if (conductor < 1) throw input_error("conductor must be positive");
  std::string s;
  s.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw input_error("empty cyclotomic literal");

  CycNum result;
  size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
    } else if (!first) {
      throw input_error("expected '+' or '-' in cyclotomic literal: " + text);
    }
    first = false;
    if (i >= s.size())
      throw input_error("dangling sign in cyclotomic literal: " + text);

    Rational coeff(1);
    bool have_coeff = false;
    if (s[i] != 'z') {
      size_t start = i;
      while (i < s.size() &&
             (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
        ++i;
      coeff = parse_rational(s.substr(start, i - start));
      have_coeff = true;
    }
    long power = 0;
    bool have_z = false;
    if (i < s.size() && (s[i] == '*' || s[i] == 'z')) {
      if (s[i] == '*') {
        ++i;
        if (i >= s.size() || s[i] != 'z')
          throw input_error("expected z after '*': " + text);
      }
      ++i;  // consume 'z'
      have_z = true;
      power = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          ++i;
        if (start == i) throw input_error("missing exponent: " + text);
        power = std::stol(s.substr(start, i - start));
      }
    }
    if (!have_coeff && !have_z)
      throw input_error("bad term in cyclotomic literal: " + text);
    CycNum term = have_z ? CycNum::zeta(conductor, power) : CycNum(1);
    term = Rational(sign) * coeff * term;
    result += term;
  }
  return result;
}

}  // namespace qdc
