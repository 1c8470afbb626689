#pragma once

#include "ordspace/balls.hpp"
#include "ordspace/core.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ordspace {

enum class CensusFilter { All, Injective };

std::string name(CensusFilter f);  // "all" / "injective"

struct CensusOptions {
  bool huge = false;  // allow n = 5 for the unrestricted enumeration
  int jobs = 1;
};

/// Largest n each filter accepts without `huge`.
int census_limit(CensusFilter f, bool huge);

/// Number of candidates scanned: ordered set partitions of the n(n-1)/2
/// pairs (All) or linear orders of them (Injective).
long long census_candidates(int n, CensusFilter f);

/// One canonical representative per isomorphism class, sorted by flat key.
/// A candidate level assignment is kept iff it is already canonical, so no
/// dedup set is needed and the result is independent of `jobs`.
/// Throws SizeLimit beyond census_limit.
std::vector<OrdinalSpace> enumerate_spaces(int n, CensusFilter filter, const CensusOptions& options = {});

enum class Verdict { Match, Mismatch, Untested };

std::string name(Verdict v);  // "MATCH" / "MISMATCH" / "UNTESTED"

/// Known maximal ball counts b_1..b_7.
const std::vector<int>& max_ball_sequence();

struct BallExtreme {
  int value = 0;
  OrdinalSpace witness;
};

struct CensusReport {
  int n = 0;
  CensusFilter filter = CensusFilter::All;
  long long candidates = 0;
  long long total_nonisomorphic = 0;
  std::optional<BallExtreme> max_balls;           // over all spaces (All filter only)
  std::optional<BallExtreme> min_balls_distinct;  // over injective-rank spaces
  long long min_attainers = 0;
  Verdict max_verdict = Verdict::Untested;        // against max_ball_sequence()
  Verdict min_verdict = Verdict::Untested;        // against n(n+1)/2
  std::optional<long long> r1_embeddable;         // classes embeddable in the line
  double seconds = 0.0;
};

/// Enumerates and evaluates ball-count extremes. Witnesses are the first
/// attainers in enumeration order and are re-counted before returning.
CensusReport ball_extremes(int n, CensusFilter filter, const CensusOptions& options = {});

struct LineCount {
  long long embeddable = 0;
  long long total = 0;
  /// n = 4 only: classes where the case classification and the LP disagree.
  long long classifier_disagreements = 0;
};

/// Isomorphism classes of n-point spaces embeddable in the real line.
LineCount count_r1_embeddable(int n, const CensusOptions& options = {});

/// Inclusion Hasse diagram of all intervals {i..j} of a path on n points.
HasseDiagram path_interval_hasse(int n);

struct HasseShapeReport {
  int n = 0;
  int min_balls = 0;
  long long attainers = 0;
  long long attainers_matching = 0;     // Hasse isomorphic to the reference
  long long non_attainers_matching = 0; // should be 0 for an "iff"
  bool all_match() const { return attainers == attainers_matching && non_attainers_matching == 0; }
};

/// Compares Hasse diagrams of injective-rank spaces with `reference`.
HasseShapeReport minimal_hasse_shape_probe(int n, const HasseDiagram& reference);

}  // namespace ordspace
