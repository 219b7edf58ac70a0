#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "qdc/group.hpp"

using namespace qdc;

TEST_CASE("closure from generators") {
  auto s3 = FiniteGroup::from_generators(
      3, {Perm::from_cycles(3, {{1, 2}}), Perm::from_cycles(3, {{2, 3}})});
  CHECK(s3.order() == 6);

  auto z3 = FiniteGroup::from_generators(3, {Perm::from_cycles(3, {{1, 2, 3}})});
  CHECK(z3.order() == 3);

  auto trivial = FiniteGroup::from_generators(1, {});
  CHECK(trivial.order() == 1);

  GroupOptions tight;
  tight.closure_bound = 4;
  CHECK_THROWS_AS(FiniteGroup::from_generators(
                      3,
                      {Perm::from_cycles(3, {{1, 2}}),
                       Perm::from_cycles(3, {{2, 3}})},
                      tight),
                  bound_error);

  GroupOptions small;
  small.max_order = 3;
  CHECK_THROWS_AS(
      FiniteGroup::from_generators(4, {Perm::from_cycles(4, {{1, 2, 3, 4}})},
                                   small),
      input_error);
}

TEST_CASE("table validation") {
  // Associativity failure: tweak Z3's table.
  std::vector<std::vector<int>> bad = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  bad[1][1] = 0;
  bad[1][2] = 2;  // keep rows permutations but break the law
  CHECK_THROWS_AS(FiniteGroup::from_table(bad), input_error);

  std::vector<std::vector<int>> latin_bad = {{0, 0}, {1, 1}};
  CHECK_THROWS_AS(FiniteGroup::from_table(latin_bad), input_error);

  std::vector<std::vector<int>> z2 = {{0, 1}, {1, 0}};
  CHECK(FiniteGroup::from_table(z2).order() == 2);
}

TEST_CASE("conjugacy classes") {
  auto s3 = FiniteGroup::builtin("S3");
  auto classes = s3.conjugacy_classes();
  REQUIRE(classes.size() == 3);
  CHECK(classes[0].size() == 1);
  CHECK(classes[1].size() == 2);
  CHECK(classes[2].size() == 3);
  CHECK(classes[2].elements == std::vector<int>{1, 2, 3});  // {u, v, w}
  CHECK(classes[1].elements == std::vector<int>{4, 5});     // {uv, vu}

  auto z4 = FiniteGroup::builtin("Z4");
  CHECK(z4.conjugacy_classes().size() == 4);

  auto trivial = FiniteGroup::from_generators(1, {});
  CHECK(trivial.conjugacy_classes().size() == 1);
}

TEST_CASE("centralizers and the class equation") {
  auto s3 = FiniteGroup::builtin("S3");
  int u = s3.element_by_selector("u");
  auto cu = s3.centralizer(u);
  CHECK(cu.group->order() == 2);
  CHECK(cu.embed == std::vector<int>{0, 1});

  auto cuv = s3.centralizer(s3.element_by_selector("uv"));
  CHECK(cuv.group->order() == 3);

  CHECK(s3.centralizer(0).group->order() == 6);

  for (const auto& name : {"S3", "Z2", "Z3", "Z4", "D4"}) {
    auto g = FiniteGroup::builtin(name);
    int total = 0;
    for (const auto& cls : g.conjugacy_classes()) {
      total += cls.size();
      CHECK(cls.size() * g.centralizer(cls.basepoint).group->order() ==
            g.order());
    }
    CHECK(total == g.order());
  }
}

TEST_CASE("sections") {
  auto s3 = FiniteGroup::builtin("S3");
  auto classes = s3.conjugacy_classes();
  const auto& transpositions = classes[2];

  auto sec = default_section(s3, transpositions);
  // Least-index conjugators reproduce the published section g_u=e, g_v=w,
  // g_w=v for basepoint u.
  CHECK(sec.basepoint == s3.element_by_selector("u"));
  CHECK(sec.g_of(transpositions, s3.element_by_selector("u")) == 0);
  CHECK(sec.g_of(transpositions, s3.element_by_selector("v")) ==
        s3.element_by_selector("w"));
  CHECK(sec.g_of(transpositions, s3.element_by_selector("w")) ==
        s3.element_by_selector("v"));

  for (const auto& cls : classes) {
    auto s = default_section(s3, cls);
    for (int a : cls.elements)
      CHECK(s3.conj(s.g_of(cls, a), s.basepoint) == a);
  }

  // The same section is loadable explicitly.
  auto custom = make_section(s3, transpositions, 1, {{1, 0}, {2, 3}, {3, 2}});
  CHECK(custom.g == sec.g);

  // An alternative valid section: g_v = uv, g_w = vu.
  auto alt = make_section(s3, transpositions, 1, {{1, 0}, {2, 4}, {3, 5}});
  for (int a : transpositions.elements)
    CHECK(s3.conj(alt.g_of(transpositions, a), 1) == a);

  CHECK_THROWS_AS(make_section(s3, transpositions, 1, {{1, 0}, {2, 3}}),
                  input_error);
  CHECK_THROWS_AS(make_section(s3, transpositions, 1, {{1, 0}, {2, 2}, {3, 2}}),
                  input_error);
  // Basepoint must map to the identity (g_v = v fixes v under conjugation
  // but breaks the convention).
  CHECK_THROWS_AS(make_section(s3, transpositions, 2, {{2, 2}, {1, 3}, {3, 1}}),
                  input_error);
}

TEST_CASE("cocycle values for the S3 transposition class") {
  auto s3 = FiniteGroup::builtin("S3");
  auto cls = s3.conjugacy_classes()[2];
  auto sec = default_section(s3, cls);
  int u = 1, v = 2, w = 3;

  CHECK(cocycle(s3, cls, sec, u, u) == u);
  CHECK(cocycle(s3, cls, sec, v, w) == 0);
  for (int a : cls.elements) CHECK(cocycle(s3, cls, sec, a, 0) == 0);

  // Where the table has entry q the cocycle lands on the basepoint u, and
  // where it has 1 it lands on the identity: rows a = u,v,w over columns
  // e,u,v,w,uv,vu.
  const int expect[3][6] = {
      {0, 1, 0, 0, 1, 1},  // zeta_u
      {0, 1, 1, 0, 0, 1},  // zeta_v
      {0, 1, 0, 1, 1, 0},  // zeta_w
  };
  for (int a = 0; a < 3; ++a)
    for (int x = 0; x < 6; ++x) {
      int z = cocycle(s3, cls, sec, a + 1, x);
      CHECK(z == (expect[a][x] ? u : 0));
    }
}

TEST_CASE("cocycle identity holds exhaustively on small groups") {
  for (const auto& name : {"S3", "Z4", "D4"}) {
    auto gptr = std::make_shared<FiniteGroup>(FiniteGroup::builtin(name));
    const auto& G = *gptr;
    for (const auto& cls : G.conjugacy_classes()) {
      auto sec = default_section(G, cls);
      for (int a : cls.elements)
        for (int x = 0; x < G.order(); ++x)
          for (int y = 0; y < G.order(); ++y) {
            int lhs = cocycle(G, cls, sec, a, G.mul(x, y));
            int rhs = G.mul(cocycle(G, cls, sec, G.conj(y, a), x),
                            cocycle(G, cls, sec, a, y));
            CHECK(lhs == rhs);
          }
    }
  }
}

TEST_CASE("element selectors") {
  auto s3 = FiniteGroup::builtin("S3");
  CHECK(s3.element_by_selector("(12)") == 1);
  CHECK(s3.element_by_selector("(1 2 3)") == 4);
  CHECK(s3.element_by_selector("e") == 0);
  CHECK(s3.element_by_selector("5") == 5);
  CHECK(s3.element_by_selector("uv") == 4);
  CHECK_THROWS_AS(s3.element_by_selector("(1 4)"), input_error);
  CHECK_THROWS_AS(s3.element_by_selector("nope"), input_error);
}
