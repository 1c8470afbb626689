#include "helpers.hpp"
#include "oracles.hpp"

#include "ordspace/census.hpp"
#include "ordspace/core.hpp"

#include <doctest.h>

#include <random>

using namespace ordspace;

TEST_CASE("rank matrix validation") {
  CHECK_NOTHROW(OrdinalSpace(ranks(3, {0, 1, 2, 1, 0, 2, 2, 2, 0})));
  CHECK_THROWS_AS(OrdinalSpace(ranks(3, {0, 1, 2, 2, 0, 2, 2, 2, 0})), ValidationError);  // asymmetric
  CHECK_THROWS_AS(OrdinalSpace(ranks(3, {1, 1, 2, 1, 0, 2, 2, 2, 0})), ValidationError);  // diagonal
  CHECK_THROWS_AS(OrdinalSpace(ranks(3, {0, 1, 3, 1, 0, 3, 3, 3, 0})), ValidationError);  // level 2 missing
  CHECK_THROWS_AS(OrdinalSpace(ranks(3, {0, 0, 1, 0, 0, 1, 1, 1, 0})), ValidationError);  // zero off diagonal
}

TEST_CASE("from_levels renumbers distinct levels") {
  const auto s = OrdinalSpace::from_levels(ranks(3, {0, 10, 40, 10, 0, 25, 40, 25, 0}));
  CHECK(s.levels() == 3);
  CHECK(s.rank(0, 1) == 1);
  CHECK(s.rank(1, 2) == 2);
  CHECK(s.rank(0, 2) == 3);
}

TEST_CASE("flat key is in column order") {
  const auto s = OrdinalSpace::from_flat(4, std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(s.rank(0, 1) == 1);
  CHECK(s.rank(0, 2) == 2);
  CHECK(s.rank(1, 2) == 3);
  CHECK(s.rank(0, 3) == 4);
  CHECK(s.rank(2, 3) == 6);
  CHECK(s.flat() == std::vector<int>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("ordinal type of exact distances") {
  RationalMatrix d(3, 3);
  d << 0, Rational(1, 3), 2, Rational(1, 3), 0, Rational(7, 3), 2, Rational(7, 3), 0;
  const auto s = ordinal_type(DistanceMatrix(d));
  CHECK(s.levels() == 3);
  CHECK(s.rank(0, 1) == 1);
  CHECK(s.rank(0, 2) == 2);
  CHECK(s.rank(1, 2) == 3);
  RationalMatrix bad = d;
  bad(0, 1) = 0;
  bad(1, 0) = 0;
  CHECK_THROWS_AS(DistanceMatrix{bad}, ValidationError);
}

TEST_CASE("relation satisfies the seven axioms on every 4-point class") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_spaces(n, CensusFilter::All)) {
      auto rel = [&](int x, int y, int z, int w) { return relation(s, x, y, z, w); };
      bool ok = true;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          ok &= rel(x, y, x, y) == Relation::Equal;
          for (int z = 0; z < n; ++z)
            for (int w = 0; w < n; ++w) {
              const auto r = rel(x, y, z, w);
              ok &= r == rel(y, x, z, w) && r == rel(x, y, w, z);
              ok &= r == negate(rel(z, w, x, y));
              if (x == y) ok &= rel(x, x, z, w) == (z == w ? Relation::Equal : Relation::Less);
              for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                  const auto a = rel(x, y, u, v);
                  const auto b = rel(u, v, z, w);
                  if (a == Relation::Equal && b == Relation::Equal) ok &= r == Relation::Equal;
                  if (a == Relation::Less && b != Relation::Greater) ok &= r == Relation::Less;
                  if (a != Relation::Greater && b == Relation::Less) ok &= r == Relation::Less;
                }
            }
        }
      CHECK(ok);
    }
  }
}

TEST_CASE("comparisons round trip") {
  const auto s = load_fixture("fig1_X.ord");
  CHECK(from_comparisons(to_comparisons(s)) == s);
}

TEST_CASE("comparisons: axiom violations and gaps are reported") {
  ComparisonList cycle{3, {{0, 1, 0, 2, Relation::Less}, {0, 2, 1, 2, Relation::Less}, {1, 2, 0, 1, Relation::Less}}};
  CHECK_THROWS_AS(from_comparisons(cycle), AxiomViolation);

  ComparisonList clash{3, {{0, 1, 0, 2, Relation::Less}, {0, 2, 0, 1, Relation::Less}}};
  CHECK_THROWS_AS(from_comparisons(clash), AxiomViolation);

  ComparisonList self{2, {{0, 0, 0, 1, Relation::Greater}}};
  CHECK_THROWS_AS(from_comparisons(self), AxiomViolation);

  ComparisonList partial{3, {{0, 1, 0, 2, Relation::Less}}};
  CHECK_THROWS_AS(from_comparisons(partial), Underdetermined);
}

TEST_CASE("comparison chain yields the expected ranks") {
  ComparisonList c{3, {{0, 1, 1, 2, Relation::Less}, {1, 2, 0, 2, Relation::Equal}}};
  const auto s = from_comparisons(c);
  CHECK(s.levels() == 2);
  CHECK(s.rank(0, 1) == 1);
  CHECK(s.rank(1, 2) == 2);
  CHECK(s.rank(0, 2) == 2);
}

TEST_CASE("relabel, canonical form and isomorphism") {
  const auto s = load_fixture("table_em.ord");
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Permutation f(6);
    std::iota(f.begin(), f.end(), 0);
    std::shuffle(f.begin(), f.end(), rng);
    const auto t = relabel(s, f);
    CHECK(canonical_form(t) == canonical_form(s));
    const auto iso = is_isomorphic(s, t);
    REQUIRE(iso.isomorphic);
    CHECK(relabel(s, *iso.witness) == t);
  }
  CHECK(is_canonical(canonical_form(s)));
  CHECK_FALSE(is_isomorphic(load_fixture("fig1_X.ord"), load_fixture("fig1_Y.ord")).isomorphic);
}

TEST_CASE("canonical form respects the point guard") {
  const auto s = OrdinalSpace(RankMatrix::Ones(9, 9) - RankMatrix::Identity(9, 9));
  CHECK_THROWS_AS(canonical_form(s), SizeLimit);
  CHECK_NOTHROW(canonical_form(s, 9));
}

TEST_CASE("realization round trip and weak similarity") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_spaces(n, CensusFilter::All)) {
      CHECK(ordinal_type(realize(s)) == s);
      CHECK(weakly_similar(realize(s), realize_scaled(s, Rational(1, 7))));
    }
  }
  CHECK_FALSE(weakly_similar(realize(load_fixture("fig1_X.ord")), realize(load_fixture("fig1_Y.ord"))));
}

TEST_CASE("permutation helpers") {
  const Permutation f{2, 0, 1};
  CHECK(compose(f, inverse(f)) == Permutation{0, 1, 2});
  CHECK(all_permutations(4).size() == 24);
}

TEST_CASE("subspace keeps relative order") {
  const auto s = load_fixture("table_em.ord");
  const std::vector<Point> pts{0, 1, 5};
  const auto t = subspace(s, pts);
  CHECK(t.size() == 3);
  // a-b 5, a-f 6, b-f 7
  CHECK(t.rank(0, 1) == 1);
  CHECK(t.rank(0, 2) == 2);
  CHECK(t.rank(1, 2) == 3);
}
