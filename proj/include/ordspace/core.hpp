#pragma once

#include "ordspace/errors.hpp"
#include "ordspace/rational.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ordspace {

using Point = int;
using RankMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

/// A bijection on point indices, stored as its image vector: f[i] = f(i).
using Permutation = std::vector<Point>;

/// Default size guard for every n!-style search in the library.
inline constexpr int kDefaultPointLimit = 8;

enum class Relation { Less, Equal, Greater };

char symbol(Relation r);
std::string name(Relation r);  // "LT" / "EQ" / "GT"
Relation negate(Relation r);

/// Three-way comparison of two integers or rationals as a Relation.
template <typename T>
Relation compare(const T& lhs, const T& rhs) {
  if (lhs < rhs) return Relation::Less;
  if (rhs < lhs) return Relation::Greater;
  return Relation::Equal;
}

/// Finite ordinal space in normalized form: ranks of unordered pairs in
/// {1..k}, every level attained, zero on the diagonal.
class OrdinalSpace {
 public:
  /// Validating constructor; throws ValidationError when the matrix is not
  /// symmetric, has a nonzero diagonal, or misses a level in 1..k.
  explicit OrdinalSpace(RankMatrix ranks);

  /// Builds a space from any symmetric matrix of positive off-diagonal
  /// integer levels by renumbering the distinct levels 1..k.
  static OrdinalSpace from_levels(const RankMatrix& levels);

  /// Upper-triangular ranks in column order (0,1),(0,2),(1,2),(0,3),...
  static OrdinalSpace from_flat(int n, std::span<const int> flat);

  int size() const { return static_cast<int>(ranks_.rows()); }
  int levels() const { return levels_; }
  int rank(Point x, Point y) const { return ranks_(x, y); }
  const RankMatrix& ranks() const { return ranks_; }

  /// Pair ranks in column order; the key used for canonical comparison.
  std::vector<int> flat() const;

  bool operator==(const OrdinalSpace& other) const { return ranks_ == other.ranks_; }

 private:
  OrdinalSpace(RankMatrix ranks, int levels) : ranks_(std::move(ranks)), levels_(levels) {}

  RankMatrix ranks_;
  int levels_ = 0;
};

/// Exact symmetric semimetric: zero diagonal, positive off-diagonal.
class DistanceMatrix {
 public:
  /// Throws ValidationError naming the first offending entry.
  explicit DistanceMatrix(RationalMatrix d);

  int size() const { return static_cast<int>(d_.rows()); }
  const Rational& operator()(Point x, Point y) const { return d_(x, y); }
  const RationalMatrix& matrix() const { return d_; }

 private:
  RationalMatrix d_;
};

struct Comparison {
  Point x, y, z, w;
  Relation rel;

  bool operator==(const Comparison&) const = default;
};

/// Raw quadruple relations prior to axiom validation (0-based indices).
struct ComparisonList {
  int n = 0;
  std::vector<Comparison> entries;
};

/// The supplied relations contradict one of the ordinal-space axioms.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::vector<Comparison> witnesses, const std::string& detail);

  const std::string& axiom() const { return axiom_; }
  const std::vector<Comparison>& witnesses() const { return witnesses_; }

 private:
  std::string axiom_;
  std::vector<Comparison> witnesses_;
};

/// The supplied relations leave two pair classes unordered.
class Underdetermined : public Error {
 public:
  using Pair = std::pair<Point, Point>;
  Underdetermined(Pair first, Pair second);

  Pair first() const { return first_; }
  Pair second() const { return second_; }

 private:
  Pair first_;
  Pair second_;
};

/// Ranks distinct off-diagonal distances ascending; equal distances share a rank.
OrdinalSpace ordinal_type(const DistanceMatrix& d);

/// Validates axioms (i)-(vii) on the given relations and returns the
/// normalized space. Throws AxiomViolation or Underdetermined.
OrdinalSpace from_comparisons(const ComparisonList& c);

/// Every non-degenerate quadruple relation of `s` (x<y, z<w, {x,y} before {z,w}).
ComparisonList to_comparisons(const OrdinalSpace& s);

/// Compares delta(x,y) with delta(z,w). Throws ValidationError on bad indices.
Relation relation(const OrdinalSpace& s, Point x, Point y, Point z, Point w);

/// Space t with t.rank(f(x), f(y)) = s.rank(x, y), so f is an isomorphism s -> t.
OrdinalSpace relabel(const OrdinalSpace& s, const Permutation& f);

/// Induced subspace on the listed points (in the listed order), renormalized.
OrdinalSpace subspace(const OrdinalSpace& s, std::span<const Point> points);

/// Lexicographically minimal `flat()` over all relabelings.
/// Throws SizeLimit when s.size() > limit.
OrdinalSpace canonical_form(const OrdinalSpace& s, int limit = kDefaultPointLimit);

/// True iff `s` already equals its canonical form; cheaper than computing it.
bool is_canonical(const OrdinalSpace& s);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<Permutation> witness;  // f with a.rank(x,y) = b.rank(f(x),f(y))
};

IsomorphismResult is_isomorphic(const OrdinalSpace& a, const OrdinalSpace& b);

/// Isomorphism of ordinal types; equivalent to weak similarity of the metrics.
bool weakly_similar(const DistanceMatrix& d1, const DistanceMatrix& d2);

/// Metric realization d(x,y) = 1 + rank/(2k); ordinal_type(realize(s)) == s.
DistanceMatrix realize(const OrdinalSpace& s);

/// Same construction with the level offsets multiplied by `scale` (0 < scale <= 1).
DistanceMatrix realize_scaled(const OrdinalSpace& s, const Rational& scale);

/// All permutations of {0..n-1} in lexicographic order.
std::vector<Permutation> all_permutations(int n);

Permutation inverse(const Permutation& f);
Permutation compose(const Permutation& outer, const Permutation& inner);  // outer(inner(x))

}  // namespace ordspace
