#include "helpers.hpp"

#include "ordspace/census.hpp"
#include "ordspace/line.hpp"

#include <doctest.h>

#include <functional>
#include <numeric>
#include <set>

using namespace ordspace;

namespace {

// Ordinal types of integer point sets 0 = x_1 < ... < x_n <= bound.
std::set<std::vector<int>> grid_line_types(int n, int bound) {
  std::set<std::vector<int>> out;
  std::vector<int> x(n, 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      RationalMatrix d(n, n);
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) d(a, b) = std::abs(x[a] - x[b]);
      out.insert(canonical_form(ordinal_type(DistanceMatrix(d))).flat());
      return;
    }
    for (int v = x[i - 1] + 1; v <= bound; ++v) {
      x[i] = v;
      rec(i + 1);
    }
  };
  rec(1);
  return out;
}

Permutation identity(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

TEST_CASE("line embeddability agrees with an integer-grid search at n = 3, 4") {
  for (int n : {3, 4}) {
    const auto grid = grid_line_types(n, 16);
    std::set<std::vector<int>> lp;
    for (const auto& s : enumerate_spaces(n, CensusFilter::All)) {
      if (embed_line(s)) lp.insert(s.flat());
    }
    CHECK(grid == lp);
  }
  CHECK(grid_line_types(3, 16).size() == 2);
  CHECK(grid_line_types(4, 16).size() == 14);
}

TEST_CASE("grid-realizable 5-point types are found by the LP") {
  for (const auto& flat : grid_line_types(5, 14)) {
    const auto s = OrdinalSpace::from_flat(5, flat);
    const auto w = embed_line(s);
    REQUIRE(w.has_value());
    CHECK(ordinal_type(w->distances()) == s);
  }
}

TEST_CASE("witness gaps are normalized and strictly positive") {
  const auto w = embed_line(load_fixture("t10_d15.ord"));
  REQUIRE(w.has_value());
  Rational sum = 0;
  for (const auto& g : w->gaps) {
    CHECK(g > 0);
    sum += g;
  }
  CHECK(sum == 1);
  CHECK(w->margin > 0);
  CHECK(w->ordering.front() < w->ordering.back());
}

TEST_CASE("two tied maximal pairs cannot lie on a line") {
  const auto s = load_fixture("3pt_two_max.ord");
  CHECK_FALSE(embed_line(s).has_value());
  CHECK_FALSE(check_p210(s).holds);
}

TEST_CASE("seven-point example: full majorization fails, consecutive holds") {
  const auto s = load_fixture("seven_point.ord");
  const auto full = check_majorization(s, identity(7), MajorizationMode::Full);
  CHECK_FALSE(full.holds);
  REQUIRE(full.counterexample.has_value());
  CHECK(full.counterexample->first == IndexSequence{0, 2, 3});
  CHECK(full.counterexample->second == IndexSequence{3, 5, 6});
  CHECK(is_majorization_counterexample(s, identity(7), {0, 2, 3}, {3, 5, 6}));
  CHECK(check_majorization(s, identity(7), MajorizationMode::Consecutive).holds);
  CHECK_FALSE(embed_line(s).has_value());
  CHECK_FALSE(find_majorizing_enumeration(s).has_value());
}

TEST_CASE("sequence comparison") {
  const auto s = load_fixture("seven_point.ord");
  const auto e = identity(7);
  CHECK(compare_sequences(s, {0, 2, 3}, {3, 5, 6}, e) == SequenceOrder::Prec);
  CHECK(compare_sequences(s, {0, 1, 2, 3}, {3, 4, 5, 6}, e) == SequenceOrder::Neither);
  CHECK(compare_sequences(s, {0, 1}, {0, 1}, e) == SequenceOrder::Equiv);
  CHECK_THROWS_AS(compare_sequences(s, {0, 1}, {0, 1, 2}, e), ValidationError);
}

TEST_CASE("padding: a shorter sequence with equal interval ranks is a counterexample") {
  // three equally spaced collinear points: (1,3) padded vs (1,2,3) would be
  // equivalent, but the endpoint ranks differ
  const auto s = OrdinalSpace(ranks(3, {0, 1, 2, 1, 0, 1, 2, 1, 0}));
  CHECK(check_majorization(s, identity(3)).holds);
  const auto bad = OrdinalSpace(ranks(3, {0, 1, 1, 1, 0, 1, 1, 1, 0}));
  CHECK_FALSE(check_majorization(bad, identity(3)).holds);
}

TEST_CASE("line witnesses satisfy majorization, its consequences and the profile bounds") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& s : enumerate_spaces(n, CensusFilter::All)) {
      const auto w = embed_line(s);
      if (!w) continue;
      CHECK(check_majorization(s, w->ordering).holds);
      CHECK(majorization_consequences(s, w->ordering).all());
      CHECK(check_p210(s).holds);
      CHECK(check_p68(s, *w).agree());
    }
  }
}

TEST_CASE("majorization is also sufficient at n = 4") {
  for (const auto& s : enumerate_spaces(4, CensusFilter::All)) {
    CHECK(find_majorizing_enumeration(s).has_value() == embed_line(s).has_value());
  }
}

TEST_CASE("four-point case classification agrees with the LP on every class") {
  std::set<std::string> tags;
  int embeddable = 0;
  for (const auto& s : enumerate_spaces(4, CensusFilter::All)) {
    const auto c = classify_t10(s);
    CHECK(c.embeddable == embed_line(s).has_value());
    if (c.embeddable) {
      ++embeddable;
      tags.insert(c.tag);
    } else {
      CHECK(c.tag == "not-embeddable");
    }
  }
  CHECK(embeddable == 14);
  CHECK(tags.size() == 14);
  CHECK_THROWS_AS(classify_t10(load_fixture("3pt_two_max.ord")), ValidationError);
}

TEST_CASE("case fixtures carry their own tag and are numbered in line order") {
  for (const auto& tag : {"d1", "d2", "d3", "d4", "d5", "d6", "d7", "d8", "d9", "d10", "d11", "d12", "d13", "d15"}) {
    const auto s = load_fixture(std::string("t10_") + tag + ".ord");
    CHECK(classify_t10(s).tag == tag);
    CHECK_FALSE(t10_gap_relations(tag).empty());
    CHECK(embed_line_ordered(s, identity(4)).has_value());
  }
}

TEST_CASE("class profile") {
  const auto p = class_profile(load_fixture("fig1_X.ord"));
  CHECK(p.sizes == std::vector<int>{6, 1, 2, 1});
  CHECK_THROWS_AS(class_profile(OrdinalSpace(RankMatrix::Zero(1, 1))), ValidationError);
}

TEST_CASE("embed_line point guard") {
  const auto s = OrdinalSpace(RankMatrix::Ones(9, 9) - RankMatrix::Identity(9, 9));
  CHECK_THROWS_AS(embed_line(s), SizeLimit);
}
