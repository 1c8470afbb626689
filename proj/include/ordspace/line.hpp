#pragma once

#include "ordspace/core.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ordspace {

/// Nondecreasing index sequence (i_0 <= ... <= i_k), k >= 1, 0-based.
/// Indices refer to positions in an enumeration, not to points directly.
using IndexSequence = std::vector<int>;

enum class SequenceOrder { Prec, Equiv, Neither };

std::string name(SequenceOrder o);  // "PREC" / "EQUIV" / "NEITHER"

/// Compares two sequences of equal length by their interval-rank multisets
/// under `enumeration` (position -> point). Sort-and-compare: a matching
/// with componentwise <= exists iff the ascending sorts compare that way.
/// Throws ValidationError on length mismatch or a non-monotone sequence.
SequenceOrder compare_sequences(const OrdinalSpace& s, const IndexSequence& a, const IndexSequence& b,
                                const Permutation& enumeration);

enum class MajorizationMode { Full, Consecutive };

struct MajorizationResult {
  bool holds = true;
  /// First failing pair (a, b) of strictly increasing sequences: a PREC b
  /// without endpoint strictness, or a EQUIV b with different endpoint ranks.
  std::optional<std::pair<IndexSequence, IndexSequence>> counterexample;
};

/// Checks the majorization property of an enumeration.
///
/// Every nondecreasing sequence is a strictly increasing one with repeated
/// indices inserted, and a repeated index contributes a rank-0 interval.
/// Rank-0 intervals on both sides cancel in the sorted comparison, so it
/// suffices to pair strictly increasing sequences of any two lengths, the
/// shorter one padded with rank-0 intervals. Equal lengths alone are not
/// enough: (x1,x3) padded to (x1,x1,x3) precedes (x1,x2,x3) whenever all
/// three ranks agree, which must fail.
///
/// Sequences are visited by length, then lexicographically; pairs (a, b) in
/// that order with a before b in the outer loop.
/// Consecutive mode only uses runs (i, i+1, ..., j).
MajorizationResult check_majorization(const OrdinalSpace& s, const Permutation& enumeration,
                                      MajorizationMode mode = MajorizationMode::Full);

/// True iff (a, b) is a counterexample in the sense above (the shorter
/// sequence is padded by repeating its last index).
bool is_majorization_counterexample(const OrdinalSpace& s, const Permutation& enumeration,
                                    const IndexSequence& a, const IndexSequence& b);

/// Consequences of the majorization property, each checked literally.
struct MajorizationConsequences {
  bool nested_strict = false;        // i<=k<=l<=j, (i,j) != (k,l) => d(k,l) < d(i,j)
  bool unimodal_rows = false;        // d(1,2)<...<d(1,n)>...>d(n-1,n)
  bool single_diametrical = false;   // {x_1, x_n} is the only top pair
  bool crossing_equivalence = false; // i<k<j<l: cmp(d(i,j), d(k,l)) == cmp(d(i,k), d(j,l))

  bool all() const { return nested_strict && unimodal_rows && single_diametrical && crossing_equivalence; }
};

MajorizationConsequences majorization_consequences(const OrdinalSpace& s, const Permutation& enumeration);

/// Only the nested-interval clause; a cheap exact necessary test.
bool nested_intervals_strict(const OrdinalSpace& s, const Permutation& enumeration);

/// First enumeration (lexicographic, first point below last point) with the
/// full majorization property. Throws SizeLimit when n > limit.
std::optional<Permutation> find_majorizing_enumeration(const OrdinalSpace& s,
                                                       int limit = kDefaultPointLimit);

struct LineWitness {
  Permutation ordering;        // position -> point
  std::vector<Rational> gaps;  // consecutive coordinate differences, sum 1
  Rational margin;             // optimal LP margin, > 0

  /// Coordinate of every point (indexed by point).
  std::vector<Rational> coordinates() const;
  DistanceMatrix distances() const;
};

/// Exact decision of embeddability in the real line. Orderings are tried in
/// lexicographic order (first point below last point); each is settled by a
/// rational margin LP, and a witness is returned only after its ordinal
/// type has been recomputed and compared exactly. Throws SizeLimit when
/// n > limit and SolverFailure if a witness does not verify.
std::optional<LineWitness> embed_line(const OrdinalSpace& s, int limit = kDefaultPointLimit);

/// The margin LP for one ordering; nullopt when infeasible or t* <= 0.
std::optional<LineWitness> embed_line_ordered(const OrdinalSpace& s, const Permutation& ordering);

struct FourPointClass {
  bool embeddable = false;
  std::string tag;          // "d1".."d15", "mirror-d4".., or "not-embeddable"
  Permutation enumeration;  // the enumeration that was classified
};

/// Classifies a 4-point space by the case list for 4-point line embeddings.
/// Throws ValidationError unless n == 4.
FourPointClass classify_t10(const OrdinalSpace& s);

/// Gap relations realizing a tag, e.g. "a=b+c, b=c" (mirror tags swap a, c).
std::string t10_gap_relations(const std::string& tag);

struct ClassProfile {
  std::vector<int> sizes;  // |delta_1|, ..., |delta_k| with delta_1 the top class

  int classes() const { return static_cast<int>(sizes.size()); }
};

/// Throws ValidationError for n < 2.
ClassProfile class_profile(const OrdinalSpace& s);

struct ProfileCheck {
  bool holds = true;
  std::string violated;  // empty when holds
};

/// Necessary condition for a line embedding: |Delta| >= n-1, |delta_1| = 1,
/// |delta_i| <= i.
ProfileCheck check_p210(const OrdinalSpace& s);

struct ProfileEquivalence {
  bool minimal_classes = false;  // |Delta| = n-1
  bool bottom_is_path = false;   // |delta_k| = n-1
  bool staircase = false;        // |delta_i| = i for all i

  bool agree() const { return minimal_classes == bottom_is_path && bottom_is_path == staircase; }
};

/// Evaluates the three equivalent profile clauses for a line-embeddable
/// space. Throws ValidationError if the witness does not reproduce s.
ProfileEquivalence check_p68(const OrdinalSpace& s, const LineWitness& witness);

}  // namespace ordspace
