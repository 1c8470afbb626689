#include "helpers.hpp"

#include "ordspace/balls.hpp"
#include "ordspace/census.hpp"

#include <doctest.h>

#include <set>
#include <string>

using namespace ordspace;

namespace {

PointSet letters(const std::string& s) {
  PointSet out;
  for (char c : s) out.insert(c - 'a');
  return out;
}

bool acyclic_reduction(const HasseDiagram& h) {
  const auto arcs = std::set<std::pair<int, int>>(h.arcs.begin(), h.arcs.end());
  for (auto [u, v] : h.arcs) {
    if (!h.vertices[u].proper_subset_of(h.vertices[v])) return false;
    for (int w = 0; w < h.size(); ++w) {
      if (h.vertices[u].proper_subset_of(h.vertices[w]) && h.vertices[w].proper_subset_of(h.vertices[v])) return false;
    }
  }
  // every proper inclusion is witnessed by a chain of arcs: check the count of
  // comparable pairs equals the reachability closure of the arcs
  const int n = h.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (auto [u, v] : arcs) reach[u][v] = true;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (reach[i][j] != h.vertices[i].proper_subset_of(h.vertices[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("six-point table: 29 balls and the listed chains per center") {
  const auto s = load_fixture("table_em.ord");
  CHECK(count_balls(s) == 29);
  CHECK(ball_set(s).size() == 29);
  const std::vector<std::vector<std::string>> rows = {
      {"a", "ab", "abf", "abef", "abcef", "abcdef"}, {"b", "bc", "abc", "abcf", "abcdf", "abcdef"},
      {"c", "cd", "bcd", "bcde", "abcde", "abcdef"}, {"d", "de", "cde", "cdef", "bcdef", "abcdef"},
      {"e", "ef", "def", "adef", "acdef", "abcdef"}, {"f", "ef", "aef", "abef", "abdef", "abcdef"}};
  for (int c = 0; c < 6; ++c) {
    const auto balls = balls_at(s, c);
    REQUIRE(balls.size() == rows[c].size());
    for (std::size_t i = 0; i < balls.size(); ++i) CHECK(balls[i].members == letters(rows[c][i]));
  }
}

TEST_CASE("spectrum lists ranks seen from a center") {
  const auto s = load_fixture("table_em.ord");
  CHECK(spectrum(s, 0) == std::vector<int>{0, 5, 6, 8, 12, 15});
}

TEST_CASE("tree-shaped pair: nine balls, same Hasse tree") {
  const auto x = load_fixture("fig1_X.ord");
  const auto y = load_fixture("fig1_Y.ord");
  CHECK(count_balls(x) == 9);
  CHECK(count_balls(y) == 9);
  const auto hx = hasse(ball_set(x));
  const auto hy = hasse(ball_set(y));
  CHECK(hx.arcs.size() == 8);  // a tree on 9 vertices
  CHECK(hasse_isomorphic(hx, hy).isomorphic);
  CHECK_FALSE(is_isomorphic(x, y).isomorphic);
  // the two ball families coincide, so balls alone cannot tell them apart
  CHECK(ball_set(x).balls == ball_set(y).balls);
  CHECK(ball_preserving_bijection(x, y).has_value());
}

TEST_CASE("ball-preserving bijections exist between isomorphic spaces") {
  const auto s = load_fixture("table_em.ord");
  const auto t = relabel(s, Permutation{5, 4, 3, 2, 1, 0});
  const auto f = ball_preserving_bijection(s, t);
  REQUIRE(f.has_value());
  for (auto b : ball_set(s).balls) CHECK(ball_set(t).contains(b.mapped(*f)));
}

TEST_CASE("metric balls of a realization equal the ordinal balls") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& s : enumerate_spaces(n, CensusFilter::All)) {
      auto metric = metric_balls(realize(s));
      auto ordinal = ball_set(s).balls;
      std::sort(metric.begin(), metric.end());
      CHECK(metric == ordinal);
    }
  }
}

TEST_CASE("Hasse diagrams are acyclic transitive reductions with singleton sources") {
  for (const auto& name : {"table_em.ord", "fig1_X.ord", "seven_point.ord", "four_equal.ord"}) {
    const auto s = load_fixture(name);
    const auto h = hasse(ball_set(s));
    CHECK(acyclic_reduction(h));
    std::vector<bool> has_in(h.size(), false);
    for (auto [u, v] : h.arcs) has_in[v] = true;
    for (int v = 0; v < h.size(); ++v) CHECK(has_in[v] == (h.vertices[v].size() > 1));
  }
}

TEST_CASE("set-family fixtures give the path-interval diagrams") {
  for (int n : {3, 4}) {
    const auto name = n == 3 ? "fig2_left.sets" : "fig2_right.sets";
    const auto sets = parse_set_family(read_file(fixture(name)));
    CHECK(static_cast<int>(sets.size()) == n * (n + 1) / 2);
    CHECK(hasse_isomorphic(hasse(sets), path_interval_hasse(n)).isomorphic);
  }
  CHECK(path_interval_hasse(4).arcs.size() == 12);
}

TEST_CASE("DOT export lists every vertex and arc") {
  const auto h = hasse(ball_set(load_fixture("fig1_X.ord")));
  const auto dot = to_dot(h);
  CHECK(dot.find("digraph") == 0);
  CHECK(std::count(dot.begin(), dot.end(), '>') == static_cast<long>(h.arcs.size()));
  CHECK(dot.find("{x4,x5}") != std::string::npos);
}

TEST_CASE("Hasse isomorphism guard") {
  std::vector<PointSet> sets;
  for (int i = 0; i < 10; ++i) sets.push_back(PointSet::single(i));
  const auto h = hasse(sets);
  CHECK_THROWS_AS(hasse_isomorphic(h, h, 5), SizeLimit);
}
