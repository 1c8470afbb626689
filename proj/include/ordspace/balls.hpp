#pragma once

#include "ordspace/core.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ordspace {

/// Subset of at most 64 points as a bitmask.
class PointSet {
 public:
  constexpr PointSet() = default;
  constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

  static PointSet all(int n) {
    return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static PointSet single(Point p) { return PointSet(std::uint64_t{1} << p); }

  std::uint64_t bits() const { return bits_; }
  int size() const { return std::popcount(bits_); }
  bool contains(Point p) const { return (bits_ >> p) & 1U; }
  void insert(Point p) { bits_ |= std::uint64_t{1} << p; }

  bool subset_of(PointSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool proper_subset_of(PointSet other) const { return subset_of(other) && bits_ != other.bits_; }

  std::vector<Point> members() const;

  /// Image under a point map.
  PointSet mapped(const Permutation& f) const;

  bool operator==(const PointSet&) const = default;

  /// Deterministic order: by cardinality, then by sorted member list.
  friend bool operator<(PointSet a, PointSet b);

 private:
  std::uint64_t bits_ = 0;
};

/// `{x1,x2}`-style rendering with 1-based point names.
std::string format_point_set(PointSet s, const std::string& prefix = "x");

struct Ball {
  Point center = 0;
  int threshold = 0;  // last level of the initial segment of the spectrum
  PointSet members;
};

struct BallSet {
  /// Distinct balls in deterministic order (see PointSet::operator<).
  std::vector<PointSet> balls;
  /// For every ball, each (center, threshold) that generates it.
  std::vector<std::vector<std::pair<Point, int>>> provenance;

  int size() const { return static_cast<int>(balls.size()); }
  bool contains(PointSet s) const;
  std::optional<int> index_of(PointSet s) const;
};

struct HasseDiagram {
  std::vector<PointSet> vertices;
  /// Covering arcs (child, parent) as vertex indices, sorted.
  std::vector<std::pair<int, int>> arcs;

  int size() const { return static_cast<int>(vertices.size()); }
};

/// Sorted distinct levels seen from c, always starting with 0.
std::vector<int> spectrum(const OrdinalSpace& s, Point c);

/// One ball per nonempty initial segment of the spectrum at c.
std::vector<Ball> balls_at(const OrdinalSpace& s, Point c);

BallSet ball_set(const OrdinalSpace& s);

/// Distinct closed balls {x : d(c,x) <= r} of a finite semimetric.
std::vector<PointSet> metric_balls(const DistanceMatrix& d);

/// Number of distinct balls without building provenance (census hot path).
int count_balls(const OrdinalSpace& s);

/// Covering digraph of a family of sets under inclusion.
HasseDiagram hasse(const std::vector<PointSet>& sets);
HasseDiagram hasse(const BallSet& bs);

struct HasseIsomorphism {
  bool isomorphic = false;
  std::optional<std::vector<int>> witness;  // vertex map a -> b
};

/// Abstract digraph isomorphism; vertex contents are ignored.
/// Throws SizeLimit when the vertex count exceeds `vertex_limit`.
HasseIsomorphism hasse_isomorphic(const HasseDiagram& a, const HasseDiagram& b,
                                  int vertex_limit = 256);

/// Bijection f with f(Z) a ball for every ball Z of a, and f^-1(W) a ball
/// for every ball W of b.
std::optional<Permutation> ball_preserving_bijection(const OrdinalSpace& a, const OrdinalSpace& b,
                                                     int limit = kDefaultPointLimit);

/// Graphviz rendering; arcs point from child to parent.
std::string to_dot(const HasseDiagram& h, const std::string& prefix = "x");

}  // namespace ordspace
