#pragma once

#include "ordspace/core.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ordspace {

struct CMResult {
  int k = 0;
  Rational value;
  int sign = 0;
};

/// Bordered Cayley-Menger determinant of squared distances over `points`
/// (k = points.size() - 1), computed by fraction-free elimination.
CMResult cayley_menger(const DistanceMatrix& d, std::span<const Point> points);

/// Same over all points of d.
CMResult cayley_menger(const DistanceMatrix& d);

/// Same, taking squared distances directly.
CMResult cayley_menger_squared(const RationalMatrix& squared, std::span<const Point> points);

struct BlumenthalResult {
  bool holds = true;
  std::optional<int> failing_k;
  std::vector<CMResult> determinants;  // k = 1 .. n-1, up to the first failure
};

/// sgn D_k(x_0..x_k) = (-1)^(k+1) for k = 1..n-1, i.e. irreducible
/// embeddability of the n points in R^(n-1).
BlumenthalResult blumenthal_check(const DistanceMatrix& d);

/// Point configuration whose coordinate (i, j) is coeffs(i, j) * sqrt(radicands(j)).
/// Squared distances are therefore exact rationals even when a coordinate
/// is irrational. When every radicand is 1 the coordinates are rational.
struct EuclidWitness {
  int dim = 0;
  RationalMatrix coeffs;          // n x dim
  RationalVector radicands;       // dim entries, all positive
  Eigen::MatrixXd approx;         // n x dim floating rendering
  bool verified = false;          // exact ordinal check passed
  std::string method;             // "simplex", "gram", "grid"

  int size() const { return static_cast<int>(coeffs.rows()); }
  bool rational_coordinates() const;
  RationalMatrix squared_distances() const;
};

/// Exact coordinates for a squared-distance matrix from an LDL^T of the Gram
/// matrix anchored at point 0, or nullopt when that matrix is not positive
/// semidefinite (no Euclidean realization in any dimension). The dimension
/// equals the Gram rank. Perfect-square radicands are folded into coeffs.
std::optional<EuclidWitness> gram_embedding(const RationalMatrix& squared);

/// Exact check that the witness's squared distances reproduce s.
bool verify_witness(const OrdinalSpace& s, const EuclidWitness& w);

/// Irreducible embedding of n points in R^(n-1): realize with a shrinking
/// level scale until the Blumenthal signs hold (halving, at most
/// `max_retries` times), then recover coordinates. Throws RetryExhausted.
EuclidWitness realize_simplex(const OrdinalSpace& s, int max_retries = 32);

/// Pairs of maximal rank (x < y).
std::vector<std::pair<Point, Point>> dp_pairs(const OrdinalSpace& s);

struct NecessaryClause {
  std::string name;     // "diametrical", "top", "second", "second-smallest", "smallest"
  std::string formula;  // human-readable inequality
  long long value = 0;  // left-hand side
  long long bound = 0;  // right-hand side
  bool applies = true;  // false when the space has too few classes
  bool holds = true;
};

struct R2Report {
  std::vector<NecessaryClause> clauses;
  bool passes = true;  // every applicable clause holds; necessary only
  std::vector<std::string> notes;

  /// The largest-distance count clause.
  bool diametrical_ok() const;
};

/// floor(3n - sqrt(12n - 3)), evaluated exactly.
long long smallest_class_bound(long long n);

/// Necessary conditions for embeddability in the plane. A failing clause
/// refutes embeddability; passing all of them proves nothing.
R2Report check_r2_necessary(const OrdinalSpace& s);

struct HeuristicOptions {
  int restarts = 32;
  int iterations = 3000;
  std::uint64_t seed = 1;
};

struct HeuristicResult {
  std::optional<EuclidWitness> witness;  // present only when verified exactly
  double best_loss = 0.0;
  int restarts_used = 0;
  Eigen::MatrixXd best_config;           // unverified float configuration
};

/// Random-restart gradient descent for a configuration in R^dim with the
/// ordinal type of s. Success only after exact verification of a
/// rationalized configuration; failure is inconclusive. Throws
/// ValidationError for dim < 1.
HeuristicResult embed_heuristic(const OrdinalSpace& s, int dim, const HeuristicOptions& options = {});

enum class EmbedStatus { Embeddable, NotEmbeddable, Inconclusive };

std::string name(EmbedStatus s);

struct MengerProbe {
  int dim = 0;
  EmbedStatus whole = EmbedStatus::Inconclusive;
  int subsets_checked = 0;
  std::vector<std::vector<Point>> refuted;  // subsets shown not embeddable
  int inconclusive = 0;
  /// All subsets of size <= dim+3 embed but the whole space does not.
  bool conjecture_counterexample = false;
};

/// Subset evidence for the Menger-type conjecture: every subset of size
/// <= dim+3 is decided exactly (dim = 1) or by necessary conditions plus
/// the heuristic (dim >= 2). Throws SizeLimit when n > limit.
MengerProbe menger_probe(const OrdinalSpace& s, int dim, const HeuristicOptions& options = {},
                         int limit = kDefaultPointLimit);

}  // namespace ordspace
