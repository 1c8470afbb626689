#include "oracles.hpp"

#include "ordspace/census.hpp"

#include <doctest.h>

#include <set>

using namespace ordspace;

TEST_CASE("candidate counts") {
  for (int n = 1; n <= 5; ++n) {
    const int m = n * (n - 1) / 2;
    CHECK(census_candidates(n, CensusFilter::All) == oracle::fubini(m));
    CHECK(census_candidates(n, CensusFilter::Injective) == oracle::factorial(m));
  }
  CHECK(census_candidates(4, CensusFilter::All) == 4683);
}

TEST_CASE("class counts match Burnside orbit counts") {
  for (int n = 1; n <= 4; ++n) {
    CHECK(static_cast<long long>(enumerate_spaces(n, CensusFilter::All).size()) == oracle::burnside_all(n));
  }
  for (int n = 3; n <= 4; ++n) {
    CHECK(static_cast<long long>(enumerate_spaces(n, CensusFilter::Injective).size()) ==
          oracle::burnside_injective(n));
  }
  CHECK(oracle::burnside_all(4) == 225);
}

TEST_CASE("representatives are canonical, distinct and pairwise non-isomorphic") {
  const auto three = enumerate_spaces(3, CensusFilter::All);
  for (std::size_t i = 0; i < three.size(); ++i) {
    CHECK(is_canonical(three[i]));
    for (std::size_t j = i + 1; j < three.size(); ++j) CHECK_FALSE(is_isomorphic(three[i], three[j]).isomorphic);
  }
  std::set<std::vector<int>> keys;
  for (const auto& s : enumerate_spaces(4, CensusFilter::All)) {
    CHECK(canonical_form(s) == s);
    keys.insert(s.flat());
  }
  CHECK(keys.size() == 225);
}

TEST_CASE("parallel enumeration is identical to the serial one") {
  CensusOptions par;
  par.jobs = 3;
  CHECK(enumerate_spaces(4, CensusFilter::All, par) == enumerate_spaces(4, CensusFilter::All));
}

TEST_CASE("maximum ball counts for n <= 4") {
  const std::vector<int> expected{1, 3, 6, 12};
  for (int n = 1; n <= 4; ++n) {
    const auto r = ball_extremes(n, CensusFilter::All);
    REQUIRE(r.max_balls.has_value());
    CHECK(r.max_balls->value == expected[n - 1]);
    CHECK(r.max_verdict == Verdict::Match);
    CHECK(count_balls(r.max_balls->witness) == expected[n - 1]);
  }
}

TEST_CASE("minimum ball counts over injective spaces") {
  const auto three = ball_extremes(3, CensusFilter::Injective);
  CHECK(three.min_balls_distinct->value == 6);
  CHECK(three.min_verdict == Verdict::Match);
  // at n = 4 the minimum is 9, below the triangular number 10
  const auto four = ball_extremes(4, CensusFilter::Injective);
  CHECK(four.total_nonisomorphic == 30);
  CHECK(four.min_balls_distinct->value == 9);
  CHECK(four.min_attainers == 2);
  CHECK(four.min_verdict == Verdict::Mismatch);
}

TEST_CASE("nine-ball injective 4-point space, counted by hand") {
  // d12 < d34 < d13 < d23 < d14 < d24
  RankMatrix r(4, 4);
  r << 0, 1, 3, 5, 1, 0, 4, 6, 3, 4, 0, 2, 5, 6, 2, 0;
  const OrdinalSpace s(r);
  // singletons, {1,2}, {3,4}, {1,2,3}, {1,3,4}, X
  CHECK(count_balls(s) == 9);
}

TEST_CASE("path-interval shape versus minimal attainers") {
  const auto three = minimal_hasse_shape_probe(3, path_interval_hasse(3));
  CHECK(three.all_match());
  const auto four = minimal_hasse_shape_probe(4, path_interval_hasse(4));
  CHECK(four.min_balls == 9);
  CHECK(four.attainers_matching == 0);
  CHECK(four.non_attainers_matching > 0);
}

TEST_CASE("line-embeddable class counts") {
  const auto c = count_r1_embeddable(4);
  CHECK(c.total == 225);
  CHECK(c.embeddable == 14);
  CHECK(c.classifier_disagreements == 0);
  CHECK(count_r1_embeddable(3).embeddable == 2);
}

TEST_CASE("census guards") {
  CHECK_THROWS_AS(enumerate_spaces(5, CensusFilter::All), SizeLimit);
  CHECK_THROWS_AS(enumerate_spaces(6, CensusFilter::Injective), SizeLimit);
  CHECK(census_limit(CensusFilter::All, true) == 5);
}
