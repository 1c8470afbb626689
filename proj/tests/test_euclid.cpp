#include "helpers.hpp"
#include "oracles.hpp"

#include "ordspace/census.hpp"
#include "ordspace/euclid.hpp"
#include "ordspace/linalg.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ordspace;

namespace {

DistanceMatrix constant(int n, const Rational& a) {
  RationalMatrix d = RationalMatrix::Constant(n, n, a);
  for (int i = 0; i < n; ++i) d(i, i) = 0;
  return DistanceMatrix(d);
}

Eigen::MatrixXd to_double(const RationalMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = ordspace::to_double(m(i, j));
  return out;
}

}  // namespace

TEST_CASE("Bareiss determinant matches cofactor expansion") {
  RationalMatrix m(3, 3);
  m << 2, Rational(1, 2), -1, 3, 0, 4, Rational(-2, 3), 5, 1;
  const Rational expanded = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                            m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                            m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  CHECK(bareiss_determinant<Rational>(m) == expanded);
  RationalMatrix singular(2, 2);
  singular << 1, 2, 2, 4;
  CHECK(bareiss_determinant<Rational>(singular) == 0);
}

TEST_CASE("Cayley-Menger closed form for equal distances") {
  for (const Rational& a : {Rational(1), Rational(3, 2), Rational(2)}) {
    for (int k = 1; k <= 6; ++k) {
      const auto r = cayley_menger(constant(k + 1, a));
      Rational expected = (k + 1) * oracle::power(a, 2 * k);
      if (k % 2 == 0) expected = -expected;
      CHECK(r.k == k);
      CHECK(r.value == expected);
    }
  }
}

TEST_CASE("Cayley-Menger of a triangle is minus sixteen squared areas") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> side(1, 20);
  for (int trial = 0; trial < 50; ++trial) {
    int a = side(rng), b = side(rng), c = side(rng);
    RationalMatrix d(3, 3);
    d << 0, a, b, a, 0, c, b, c, 0;
    const auto r = cayley_menger(DistanceMatrix(d));
    CHECK(ordspace::to_double(r.value) == doctest::Approx(-oracle::heron16(a * a, b * b, c * c)));
  }
}

TEST_CASE("Blumenthal signs separate embeddable from non-embeddable triangles") {
  RationalMatrix ok(3, 3);
  ok << 0, 3, 4, 3, 0, 5, 4, 5, 0;
  CHECK(blumenthal_check(DistanceMatrix(ok)).holds);
  RationalMatrix bad(3, 3);
  bad << 0, 1, 1, 1, 0, 3, 1, 3, 0;
  const auto r = blumenthal_check(DistanceMatrix(bad));
  CHECK_FALSE(r.holds);
  CHECK(r.failing_k == 2);
}

TEST_CASE("exact LDL^T reconstructs the matrix") {
  RationalMatrix g(3, 3);
  g << 4, 2, Rational(2, 3), 2, 5, 1, Rational(2, 3), 1, 3;
  const auto f = ldlt_exact<Rational>(g);
  REQUIRE(f.exists);
  RationalMatrix d = RationalMatrix::Zero(3, 3);
  for (int i = 0; i < 3; ++i) d(i, i) = f.diagonal(i);
  CHECK(RationalMatrix(f.lower * d * f.lower.transpose()) == g);
  CHECK(f.positive_semidefinite());
  CHECK(f.rank() == 3);
}

TEST_CASE("Gram embedding agrees with a floating eigenvalue test") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> entry(1, 9);
  int embeddable = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 3;
    RationalMatrix sq = RationalMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) sq(i, j) = sq(j, i) = entry(rng);
    const auto w = gram_embedding(sq);
    CHECK(w.has_value() == oracle::gram_psd(to_double(sq)));
    if (w) {
      ++embeddable;
      CHECK(w->squared_distances() == sq);
    }
  }
  CHECK(embeddable > 0);
}

TEST_CASE("Gram embedding of a right triangle has rational coordinates") {
  RationalMatrix sq(3, 3);
  sq << 0, 9, 16, 9, 0, 25, 16, 25, 0;
  const auto w = gram_embedding(sq);
  REQUIRE(w.has_value());
  CHECK(w->dim == 2);
  CHECK(w->rational_coordinates());
}

TEST_CASE("simplex realization verifies for every space up to four points") {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& s : enumerate_spaces(n, CensusFilter::All)) {
      const auto w = realize_simplex(s);
      CHECK(w.verified);
      CHECK(verify_witness(s, w));
      CHECK(w.dim == n - 1);
    }
  }
}

TEST_CASE("diametrical pairs") {
  CHECK(dp_pairs(load_fixture("3pt_two_max.ord")).size() == 2);
  CHECK(dp_pairs(load_fixture("table_em.ord")) == std::vector<std::pair<Point, Point>>{{0, 3}});
}

TEST_CASE("planar necessary conditions") {
  const auto r = check_r2_necessary(load_fixture("five_equal.ord"));
  CHECK_FALSE(r.passes);
  CHECK_FALSE(r.diametrical_ok());
  CHECK(check_r2_necessary(load_fixture("table_em.ord")).passes);
  CHECK(smallest_class_bound(10) == 19);
  for (long long n = 1; n <= 200; ++n) {
    CHECK(smallest_class_bound(n) == static_cast<long long>(std::floor(3.0 * n - std::sqrt(12.0 * n - 3.0))));
  }
}

TEST_CASE("planar search finds verified witnesses for line spaces and squares") {
  HeuristicOptions opts;
  opts.restarts = 8;
  const auto line = embed_heuristic(load_fixture("t10_d15.ord"), 2, opts);
  REQUIRE(line.witness.has_value());
  CHECK(verify_witness(load_fixture("t10_d15.ord"), *line.witness));
  // unit square: sides rank 1, diagonals rank 2
  const auto square = OrdinalSpace(ranks(4, {0, 1, 2, 1, 1, 0, 1, 2, 2, 1, 0, 1, 1, 2, 1, 0}));
  const auto sq = embed_heuristic(square, 2, opts);
  REQUIRE(sq.witness.has_value());
  CHECK(verify_witness(square, *sq.witness));
}

TEST_CASE("search is reproducible for a fixed seed") {
  HeuristicOptions opts;
  opts.restarts = 2;
  opts.iterations = 200;
  const auto s = load_fixture("table_em.ord");
  const auto a = embed_heuristic(s, 2, opts);
  const auto b = embed_heuristic(s, 2, opts);
  CHECK(a.best_loss == b.best_loss);
  CHECK_THROWS_AS(embed_heuristic(s, 0, opts), ValidationError);
}

TEST_CASE("subset probe in the line is exact") {
  // every subset of at most four points lies on a line, the whole space does not
  const auto p = menger_probe(load_fixture("seven_point.ord"), 1);
  CHECK(p.whole == EmbedStatus::NotEmbeddable);
  CHECK(p.inconclusive == 0);
  CHECK(p.refuted.empty());
  CHECK(p.subsets_checked == 35 + 35);
  CHECK(p.conjecture_counterexample);
  const auto q = menger_probe(load_fixture("t10_d4.ord"), 1);
  CHECK(q.whole == EmbedStatus::Embeddable);
  CHECK(q.refuted.empty());
  CHECK_FALSE(q.conjecture_counterexample);
}
