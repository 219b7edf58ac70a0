#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "qdc/matrix.hpp"

using namespace qdc;

namespace {

// Random element with canonical conductor dividing 12.
CycNum random_cyc(std::mt19937& rng) {
  static const long conductors[] = {1, 2, 3, 4, 6, 12};
  std::uniform_int_distribution<int> pick(0, 5);
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  long n = conductors[pick(rng)];
  std::vector<Rational> c;
  for (long i = 0; i < euler_phi(n); ++i) c.push_back(rational(num(rng), den(rng)));
  return CycNum::from_coeffs(n, std::move(c));
}

}  // namespace

TEST_CASE("field arithmetic on roots of unity") {
  CycNum z3 = CycNum::zeta(3);
  CHECK(z3 + z3 * z3 == CycNum(-1));

  CycNum z4 = CycNum::zeta(4);
  CHECK(z4 * z4 == CycNum(-1));

  CycNum z6 = CycNum::zeta(6);
  CHECK(z6.inverse() == z6.pow(5));
  CHECK(z6.pow(6) == CycNum(1));

  CHECK(CycNum::zeta(2) == CycNum(-1));
  CHECK(CycNum::zeta(1) == CycNum(1));
}

TEST_CASE("conductor normalisation") {
  // zeta_6 lies in Q(zeta_3): zeta_6 = 1 + zeta_3.
  CycNum z6 = CycNum::zeta(6);
  CHECK(z6.conductor() == 3);
  CHECK(z6 == CycNum(1) + CycNum::zeta(3));

  // zeta_12^2 = zeta_6 normalises to conductor 3 as well.
  CHECK(CycNum::zeta(12).pow(2).conductor() == 3);
  // zeta_12^3 = zeta_4.
  CHECK(CycNum::zeta(12).pow(3) == CycNum::zeta(4));
  // A sum that collapses to a rational.
  CycNum z = CycNum::zeta(5);
  CHECK((z + z.pow(2) + z.pow(3) + z.pow(4)).is_rational());
  CHECK(z + z.pow(2) + z.pow(3) + z.pow(4) == CycNum(-1));
}

TEST_CASE("inverse and errors") {
  CHECK_THROWS_AS(CycNum().inverse(), input_error);
  CHECK_THROWS_AS(CycNum::zeta(3).embedded(4), input_error);
  CHECK(CycNum::zeta(3).embedded(12) == CycNum::zeta(3));

  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    CycNum a = random_cyc(rng);
    if (a.is_zero()) continue;
    CHECK(a * a.inverse() == CycNum(1));
  }
}

TEST_CASE("field axioms and embedding homomorphism on random samples") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    CycNum a = random_cyc(rng);
    CycNum b = random_cyc(rng);
    CycNum c = random_cyc(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);

    // Raising to a common larger field and reducing back is lossless, and
    // arithmetic commutes with the embedding.
    CHECK(CycNum::from_coeffs(12, a.raised_coeffs(12)) == a);
    CHECK(a.embedded(12) + b.embedded(12) == (a + b).embedded(12));
    CHECK(a.embedded(12) * b.embedded(12) == (a * b).embedded(12));
  }
}

TEST_CASE("literal grammar") {
  CHECK(CycNum::parse("1/2 - 1/2*z^1", 3) ==
        CycNum(Rational(1, 2)) - Rational(1, 2) * CycNum::zeta(3));
  CHECK(CycNum::parse("  -z^2+ 2 ", 4) == CycNum(2) - CycNum::zeta(4).pow(2));
  CHECK(CycNum::parse("0", 12).is_zero());
  CHECK(CycNum::parse("z", 3) == CycNum::zeta(3));
  CHECK(CycNum().to_string() == "0");
  CHECK((CycNum(Rational(1, 2)) - Rational(1, 2) * CycNum::zeta(3)).to_string() ==
        "1/2 - 1/2*z^1");
  CHECK_THROWS_AS(CycNum::parse("1 + + 2", 3), input_error);
  CHECK_THROWS_AS(CycNum::parse("q*z", 3), input_error);

  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    CycNum a = random_cyc(rng);
    CHECK(CycNum::parse(a.to_string(), a.conductor()) == a);
  }
}

TEST_CASE("rank: identity and cyclotomic rank-1 matrix") {
  CHECK(mat_rank(CycMatrix::identity(3)) == 3);

  CycMatrix m(2, 2);
  m.at(0, 0) = CycNum(1);
  m.at(0, 1) = CycNum::zeta(3);
  m.at(1, 0) = CycNum::zeta(3);
  m.at(1, 1) = CycNum::zeta(3).pow(2);
  CHECK(mat_rank(m) == 1);
}

TEST_CASE("rank of a constructed rank-r product") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> num(-3, 3);
  const long n = 10, r = 4;
  // Unitriangular blocks guarantee full-rank factors.
  CycMatrix u(n, r), v(r, n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < r; ++j) {
      if (i == j)
        u.at(i, j) = CycNum(1);
      else if (i > j)
        u.at(i, j) = CycNum(Rational(num(rng)));
    }
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < n; ++j) {
      if (i == j)
        v.at(i, j) = CycNum(1);
      else if (j > i)
        v.at(i, j) = CycNum(Rational(num(rng)));
    }
  CycMatrix m = u * v;
  CHECK(mat_rank(m) == r);

  // Rank is invariant under row permutation and row scaling.
  CycMatrix p(n, n), s(n, n);
  std::vector<long> perm(n);
  for (long i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  for (long i = 0; i < n; ++i) p.at(i, perm[i]) = CycNum(1);
  for (long i = 0; i < n; ++i)
    s.at(i, i) = CycNum::zeta(3).pow(i % 3) * CycNum(Rational(i + 1));
  CHECK(mat_rank(p * m) == r);
  CHECK(mat_rank(s * m) == r);
}

TEST_CASE("kernel bases") {
  CycMatrix zero(2, 2);
  CycMatrix k = mat_kernel(zero);
  CHECK(k.rows() == 2);
  CHECK(k.cols() == 2);
  CHECK(k == CycMatrix::identity(2));

  CHECK(mat_kernel(CycMatrix::identity(4)).cols() == 0);

  CycMatrix row(1, 3);
  row.at(0, 0) = row.at(0, 1) = row.at(0, 2) = CycNum(1);
  CycMatrix kr = mat_kernel(row);
  CHECK(kr.cols() == 2);
  CHECK((row * kr).is_zero());
}

TEST_CASE("rank-nullity on random matrices") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> dim(1, 8);
  std::uniform_int_distribution<int> fill(0, 3);
  for (int t = 0; t < 30; ++t) {
    long rr = dim(rng), cc = dim(rng);
    CycMatrix m(rr, cc);
    for (long i = 0; i < rr; ++i)
      for (long j = 0; j < cc; ++j)
        if (fill(rng) == 0) m.at(i, j) = random_cyc(rng);
    CycMatrix k = mat_kernel(m);
    CHECK(mat_rank(m) + k.cols() == cc);
    CHECK((m * k).is_zero());
  }
}
