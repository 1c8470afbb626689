#pragma once

#include "ordspace/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ordspace {

using PointPair = std::pair<Point, Point>;

struct OrdDistResult {
  long long value = 0;
  Permutation witness;  // optimal bijection a -> b, lexicographically first
  /// Unordered {pair, pair} comparisons of a whose relation changes under witness.
  std::vector<std::pair<PointPair, PointPair>> disagreements;
};

/// Number of unordered comparisons {p, q} of distinct non-degenerate pairs
/// whose relation differs between a and b under f.
long long disagreement_count(const OrdinalSpace& a, const OrdinalSpace& b, const Permutation& f);

/// Distance between equal-size spaces: minimum disagreement count over all
/// bijections, by branch and bound. An ordered quadruple (x,y,z,w) with
/// x != y, z != w and {x,y} != {z,w} lies in an orbit of exactly 8 under
/// swapping within pairs and swapping the pairs, and every orbit member
/// disagrees iff one does. Degenerate quadruples never disagree under a
/// bijection, so the ordered count is exactly 8 times this one.
/// Throws ValidationError on size mismatch, SizeLimit when n > limit.
OrdDistResult d_ord(const OrdinalSpace& a, const OrdinalSpace& b, int limit = kDefaultPointLimit);

/// Brute force over all bijections and all n^4 ordered quadruples, divided
/// by 8. Throws SolverFailure if a raw count is not divisible by 8.
long long d_ord_ordered_quadruples(const OrdinalSpace& a, const OrdinalSpace& b, int limit = kDefaultPointLimit);

struct MetricViolation {
  std::string property;  // "symmetry", "identity", "triangle"
  std::vector<int> indices;  // into the sample
};

struct MetricProbeReport {
  long long pairs_checked = 0;
  long long triples_checked = 0;
  std::vector<MetricViolation> violations;

  bool holds() const { return violations.empty(); }
};

/// Symmetry and d = 0 <=> isomorphic over all pairs of the sample, and the
/// triangle inequality over all triples, or over `sampled_triples` random
/// triples when given.
MetricProbeReport d_ord_metric_probe(const std::vector<OrdinalSpace>& sample,
                                     std::optional<long long> sampled_triples = std::nullopt,
                                     std::uint64_t seed = 1);

}  // namespace ordspace
