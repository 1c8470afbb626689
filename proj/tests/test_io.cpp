#include "helpers.hpp"

#include "ordspace/io.hpp"

#include <doctest.h>

using namespace ordspace;

TEST_CASE("rank matrix round trip") {
  const auto s = load_fixture("table_em.ord");
  CHECK(parse_rank_matrix(format_rank_matrix(s)) == s);
}

TEST_CASE("rank matrix errors carry line and column") {
  try {
    parse_rank_matrix("3 2\n0 1 2\n1 0 x\n2 2 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 5);
  }
  try {
    parse_rank_matrix("# comment\n3 3\n0 1 2\n1 0 2\n2 2 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_rank_matrix("2 1\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_rank_matrix("2 1\n0 1\n2 0\n"), ValidationError);
  CHECK_THROWS_AS(parse_rank_matrix(""), ParseError);
}

TEST_CASE("distance CSV accepts decimals and fractions exactly") {
  const auto d = parse_distance_csv("0, 1/3, 2.5\n1/3,0,1\n2.5,1,0\n");
  CHECK(d(0, 1) == Rational(1, 3));
  CHECK(d(0, 2) == Rational(5, 2));
  CHECK(parse_distance_csv(format_distance_csv(d)).matrix() == d.matrix());
  try {
    parse_distance_csv("0,1\n1,abc\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
}

TEST_CASE("seven-point CSV has the swapped distances and the stored ordinal type") {
  const auto d = parse_distance_csv(read_file(fixture("seven_point.csv")));
  CHECK(d(0, 3) == parse_rational("8.1101"));
  CHECK(d(3, 6) == parse_rational("8.001011"));
  CHECK(ordinal_type(d) == load_fixture("seven_point.ord"));
}

TEST_CASE("comparison files") {
  const auto c = parse_comparisons(read_file(fixture("path3.cmp")));
  CHECK(c.n == 3);
  CHECK(c.entries.size() == 2);
  const auto again = parse_comparisons(format_comparisons(c));
  CHECK(again.entries == c.entries);
  CHECK_THROWS_AS(parse_comparisons("1 2 1 3 LE\n"), ParseError);
  CHECK_THROWS_AS(parse_comparisons("n 2\n1 2 1 3 LT\n"), ParseError);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("-2.000011") == Rational(-2000011, 1000000));
  CHECK(parse_rational("7") == 7);
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_decimal(Rational(1, 3), 3) == "0.333");
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ValidationError);
}
