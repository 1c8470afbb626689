#include "ordspace/line.hpp"

#include "ordspace/simplex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ordspace {

namespace {

int position_rank(const OrdinalSpace& s, const Permutation& e, int i, int j) {
  return i == j ? 0 : s.rank(e[i], e[j]);
}

void check_sequence(const IndexSequence& a, int n) {
  if (a.size() < 2) throw ValidationError("index sequence needs at least two entries");
  for (std::size_t l = 0; l < a.size(); ++l) {
    if (a[l] < 0 || a[l] >= n) throw ValidationError("index sequence entry out of range");
    if (l > 0 && a[l] < a[l - 1]) throw ValidationError("index sequence is not nondecreasing");
  }
}

std::vector<int> sorted_interval_ranks(const OrdinalSpace& s, const Permutation& e, const IndexSequence& a) {
  std::vector<int> r;
  r.reserve(a.size() - 1);
  for (std::size_t l = 1; l < a.size(); ++l) r.push_back(position_rank(s, e, a[l - 1], a[l]));
  std::sort(r.begin(), r.end());
  return r;
}

// Compares ascending rank vectors, the shorter one implicitly padded with
// leading zeros.
SequenceOrder compare_sorted(const std::vector<int>& a, const std::vector<int>& b) {
  const std::size_t len = std::max(a.size(), b.size());
  const std::size_t pa = len - a.size();
  const std::size_t pb = len - b.size();
  bool equal = true;
  for (std::size_t i = 0; i < len; ++i) {
    const int x = i < pa ? 0 : a[i - pa];
    const int y = i < pb ? 0 : b[i - pb];
    if (x > y) return SequenceOrder::Neither;
    if (x != y) equal = false;
  }
  return equal ? SequenceOrder::Equiv : SequenceOrder::Prec;
}

struct PreparedSequence {
  IndexSequence indices;
  std::vector<int> ranks;  // sorted interval ranks
  int endpoint = 0;
};

std::vector<IndexSequence> increasing_sequences(int n, MajorizationMode mode) {
  std::vector<IndexSequence> out;
  for (int len = 2; len <= n; ++len) {
    if (mode == MajorizationMode::Consecutive) {
      for (int start = 0; start + len <= n; ++start) {
        IndexSequence a(len);
        std::iota(a.begin(), a.end(), start);
        out.push_back(std::move(a));
      }
      continue;
    }
    IndexSequence a(len);
    std::iota(a.begin(), a.end(), 0);
    while (true) {
      out.push_back(a);
      int i = len - 1;
      while (i >= 0 && a[i] == n - len + i) --i;
      if (i < 0) break;
      ++a[i];
      for (int j = i + 1; j < len; ++j) a[j] = a[j - 1] + 1;
    }
  }
  return out;
}

bool violates(const PreparedSequence& a, const PreparedSequence& b) {
  switch (compare_sorted(a.ranks, b.ranks)) {
    case SequenceOrder::Prec:
      return !(a.endpoint < b.endpoint);
    case SequenceOrder::Equiv:
      return a.endpoint != b.endpoint;
    case SequenceOrder::Neither:
      return false;
  }
  return false;
}

// Iterates orderings with ordering[0] < ordering[n-1] in lexicographic order.
template <typename Visit>
bool for_each_half_ordering(int n, Visit&& visit) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (n >= 2 && p.front() > p.back()) continue;
    if (visit(p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace

std::string name(SequenceOrder o) {
  switch (o) {
    case SequenceOrder::Prec:
      return "PREC";
    case SequenceOrder::Equiv:
      return "EQUIV";
    case SequenceOrder::Neither:
      return "NEITHER";
  }
  return "NEITHER";
}

SequenceOrder compare_sequences(const OrdinalSpace& s, const IndexSequence& a, const IndexSequence& b,
                                const Permutation& enumeration) {
  if (a.size() != b.size()) throw ValidationError("compare_sequences: length mismatch");
  check_sequence(a, s.size());
  check_sequence(b, s.size());
  return compare_sorted(sorted_interval_ranks(s, enumeration, a), sorted_interval_ranks(s, enumeration, b));
}

bool is_majorization_counterexample(const OrdinalSpace& s, const Permutation& enumeration,
                                    const IndexSequence& a, const IndexSequence& b) {
  check_sequence(a, s.size());
  check_sequence(b, s.size());
  PreparedSequence pa{a, sorted_interval_ranks(s, enumeration, a),
                      position_rank(s, enumeration, a.front(), a.back())};
  PreparedSequence pb{b, sorted_interval_ranks(s, enumeration, b),
                      position_rank(s, enumeration, b.front(), b.back())};
  return violates(pa, pb);
}

MajorizationResult check_majorization(const OrdinalSpace& s, const Permutation& enumeration,
                                      MajorizationMode mode) {
  const int n = s.size();
  if (static_cast<int>(enumeration.size()) != n) throw ValidationError("enumeration has wrong length");
  std::vector<PreparedSequence> seqs;
  for (auto& a : increasing_sequences(n, mode)) {
    PreparedSequence p;
    p.ranks = sorted_interval_ranks(s, enumeration, a);
    p.endpoint = position_rank(s, enumeration, a.front(), a.back());
    p.indices = std::move(a);
    seqs.push_back(std::move(p));
  }
  MajorizationResult out;
  for (const auto& a : seqs) {
    for (const auto& b : seqs) {
      if (violates(a, b)) {
        out.holds = false;
        out.counterexample = std::make_pair(a.indices, b.indices);
        return out;
      }
    }
  }
  return out;
}

bool nested_intervals_strict(const OrdinalSpace& s, const Permutation& e) {
  const int n = s.size();
  // Enough to compare each interval with the two maximal proper subintervals.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int outer = s.rank(e[i], e[j]);
      if (position_rank(s, e, i + 1, j) >= outer || position_rank(s, e, i, j - 1) >= outer) return false;
    }
  }
  return true;
}

MajorizationConsequences majorization_consequences(const OrdinalSpace& s, const Permutation& e) {
  const int n = s.size();
  auto r = [&](int i, int j) { return position_rank(s, e, i, j); };
  MajorizationConsequences c;

  c.nested_strict = true;
  for (int i = 0; i < n && c.nested_strict; ++i) {
    for (int k = i; k < n && c.nested_strict; ++k) {
      for (int l = k; l < n && c.nested_strict; ++l) {
        for (int j = l; j < n; ++j) {
          if (i == k && l == j) continue;
          if (!(r(k, l) < r(i, j))) {
            c.nested_strict = false;
            break;
          }
        }
      }
    }
  }

  c.unimodal_rows = true;
  for (int j = 2; j < n; ++j) c.unimodal_rows = c.unimodal_rows && r(0, j - 1) < r(0, j);
  for (int i = 1; i + 1 < n; ++i) c.unimodal_rows = c.unimodal_rows && r(i - 1, n - 1) > r(i, n - 1);

  int top = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) top += s.rank(i, j) == s.levels();
  }
  c.single_diametrical = n >= 2 && top == 1 && r(0, n - 1) == s.levels();

  c.crossing_equivalence = true;
  for (int i = 0; i < n; ++i) {
    for (int k = i + 1; k < n; ++k) {
      for (int j = k + 1; j < n; ++j) {
        for (int l = j + 1; l < n; ++l) {
          if (compare(r(i, j), r(k, l)) != compare(r(i, k), r(j, l))) c.crossing_equivalence = false;
        }
      }
    }
  }
  return c;
}

std::optional<Permutation> find_majorizing_enumeration(const OrdinalSpace& s, int limit) {
  if (s.size() > limit) throw SizeLimit("find_majorizing_enumeration", s.size(), limit);
  std::optional<Permutation> found;
  for_each_half_ordering(s.size(), [&](const Permutation& p) {
    if (!nested_intervals_strict(s, p)) return false;
    if (!check_majorization(s, p).holds) return false;
    found = p;
    return true;
  });
  return found;
}

std::vector<Rational> LineWitness::coordinates() const {
  std::vector<Rational> c(ordering.size());
  Rational x(0);
  for (std::size_t p = 0; p < ordering.size(); ++p) {
    if (p > 0) x += gaps[p - 1];
    c[ordering[p]] = x;
  }
  return c;
}

DistanceMatrix LineWitness::distances() const {
  const auto c = coordinates();
  const auto n = static_cast<Eigen::Index>(c.size());
  RationalMatrix d = RationalMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) d(i, j) = abs(c[i] - c[j]);
  }
  return DistanceMatrix(std::move(d));
}

std::optional<LineWitness> embed_line_ordered(const OrdinalSpace& s, const Permutation& ordering) {
  const int n = s.size();
  if (n <= 2) {
    LineWitness w{ordering, {}, Rational(1)};
    if (n == 2) w.gaps.push_back(Rational(1));
    return w;
  }
  const int gaps = n - 1;
  const int t = gaps;  // margin variable index
  using LP = LinearProgram<Rational>;
  LP lp(gaps + 1);

  // Distance of positions i < j as a gap-indicator row.
  auto span = [&](int i, int j) {
    RationalVector v = RationalVector::Zero(gaps + 1);
    for (int g = i; g < j; ++g) v(g) = Rational(1);
    return v;
  };

  std::vector<std::optional<std::pair<int, int>>> representative(s.levels() + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int r = s.rank(ordering[i], ordering[j]);
      if (!representative[r]) {
        representative[r] = std::make_pair(i, j);
      } else {
        auto [a, b] = *representative[r];
        lp.add_constraint(span(i, j) - span(a, b), LP::Sense::Equal, Rational(0));
      }
    }
  }
  for (int r = 1; r < s.levels(); ++r) {
    auto [a, b] = *representative[r];
    auto [c, d] = *representative[r + 1];
    RationalVector row = span(c, d) - span(a, b);
    row(t) = Rational(-1);
    lp.add_constraint(row, LP::Sense::GreaterEqual, Rational(0));
  }
  for (int g = 0; g < gaps; ++g) {
    RationalVector row = RationalVector::Zero(gaps + 1);
    row(g) = Rational(1);
    row(t) = Rational(-1);
    lp.add_constraint(row, LP::Sense::GreaterEqual, Rational(0));
  }
  RationalVector total = span(0, n - 1);
  lp.add_constraint(total, LP::Sense::Equal, Rational(1));
  RationalVector objective = RationalVector::Zero(gaps + 1);
  objective(t) = Rational(1);
  lp.set_objective(objective);

  const auto result = lp.maximize();
  if (result.status == LpStatus::Unbounded) throw SolverFailure("line LP unbounded");
  if (result.status != LpStatus::Optimal || result.objective <= 0) return std::nullopt;

  LineWitness w;
  w.ordering = ordering;
  w.margin = result.objective;
  for (int g = 0; g < gaps; ++g) w.gaps.push_back(result.x(g));
  return w;
}

std::optional<LineWitness> embed_line(const OrdinalSpace& s, int limit) {
  if (s.size() > limit) throw SizeLimit("embed_line", s.size(), limit);
  std::optional<LineWitness> found;
  for_each_half_ordering(s.size(), [&](const Permutation& p) {
    if (!nested_intervals_strict(s, p)) return false;
    found = embed_line_ordered(s, p);
    return found.has_value();
  });
  if (found && !(ordinal_type(found->distances()) == s)) {
    throw SolverFailure("line witness failed exact verification");
  }
  return found;
}

namespace {

struct CaseRow {
  const char* tag;
  int d12, d24, d23, d34;  // dense levels among these four distances
};

// delta_13 > delta_24; delta_14 and delta_13 are the two largest.
constexpr CaseRow kStrictCases[] = {
    {"d4", 4, 3, 2, 1},  {"d5", 3, 2, 1, 1},  {"d6", 4, 3, 1, 2},  {"d7", 3, 3, 2, 1},
    {"d8", 2, 2, 1, 1},  {"d9", 3, 3, 1, 2},  {"d10", 3, 4, 2, 1}, {"d11", 2, 3, 1, 1},
    {"d12", 3, 4, 1, 2}, {"d13", 2, 3, 2, 1}, {"d15", 2, 4, 3, 1},
};

std::vector<int> dense_levels(std::vector<int> v) {
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto& x : v) x = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin()) + 1;
  return v;
}

std::string strict_case(int d12, int d24, int d23, int d34) {
  const auto lv = dense_levels({d12, d24, d23, d34});
  for (const auto& row : kStrictCases) {
    if (row.d12 == lv[0] && row.d24 == lv[1] && row.d23 == lv[2] && row.d34 == lv[3]) return row.tag;
  }
  throw SolverFailure("4-point pattern outside the case list");
}

}  // namespace

FourPointClass classify_t10(const OrdinalSpace& s) {
  if (s.size() != 4) throw ValidationError("classify_t10 needs exactly 4 points");
  Permutation e(4);
  std::iota(e.begin(), e.end(), 0);
  do {
    auto d = [&](int i, int j) { return s.rank(e[i - 1], e[j - 1]); };
    const bool chain = d(1, 2) < d(1, 3) && d(1, 3) < d(1, 4) && d(1, 4) > d(2, 4) && d(2, 4) > d(3, 4) &&
                       d(2, 3) < d(1, 3) && d(2, 3) < d(2, 4);
    const bool balanced = ((d(1, 3) < d(2, 4)) == (d(1, 2) < d(3, 4))) &&
                          ((d(1, 3) == d(2, 4)) == (d(1, 2) == d(3, 4)));
    if (!chain || !balanced) continue;
    FourPointClass out{true, "", e};
    if (d(1, 3) == d(2, 4)) {
      out.tag = d(2, 3) > d(1, 2) ? "d1" : d(2, 3) == d(1, 2) ? "d2" : "d3";
    } else if (d(1, 3) > d(2, 4)) {
      out.tag = strict_case(d(1, 2), d(2, 4), d(2, 3), d(3, 4));
    } else {
      // Reversed enumeration x4, x3, x2, x1 swaps the roles of 13 and 24.
      out.tag = "mirror-" + strict_case(d(3, 4), d(1, 3), d(2, 3), d(1, 2));
    }
    return out;
  } while (std::next_permutation(e.begin(), e.end()));
  return {false, "not-embeddable", {}};
}

std::string t10_gap_relations(const std::string& tag) {
  static const std::map<std::string, std::string> table = {
      {"d1", "b>a=c"},           {"d2", "a=b=c"},          {"d3", "a=c>b"},
      {"d4", "a>b+c, b>c"},      {"d5", "a>b+c, b=c"},     {"d6", "a>b+c, b<c"},
      {"d7", "a=b+c, b>c"},      {"d8", "a=b+c, b=c"},     {"d9", "a=b+c, b<c"},
      {"d10", "a<b+c, a>b>c"},   {"d11", "a<b+c, a>b=c"},  {"d12", "a<b+c, b<c<a"},
      {"d13", "a=b>c"},          {"d15", "b>a>c"},
  };
  const std::string mirror = "mirror-";
  const bool mirrored = tag.rfind(mirror, 0) == 0;
  const auto it = table.find(mirrored ? tag.substr(mirror.size()) : tag);
  if (it == table.end()) throw ValidationError("unknown case tag '" + tag + "'");
  std::string rel = it->second;
  if (mirrored) {
    for (auto& ch : rel) {
      if (ch == 'a') {
        ch = 'c';
      } else if (ch == 'c') {
        ch = 'a';
      }
    }
  }
  return rel;
}

ClassProfile class_profile(const OrdinalSpace& s) {
  if (s.size() < 2) throw ValidationError("class_profile needs at least 2 points");
  ClassProfile p;
  p.sizes.assign(s.levels(), 0);
  for (int i = 0; i < s.size(); ++i) {
    for (int j = i + 1; j < s.size(); ++j) ++p.sizes[s.levels() - s.rank(i, j)];
  }
  return p;
}

ProfileCheck check_p210(const OrdinalSpace& s) {
  const auto p = class_profile(s);
  const int n = s.size();
  if (p.classes() < n - 1) {
    return {false, "|Delta| >= n-1 (" + std::to_string(p.classes()) + " < " + std::to_string(n - 1) + ")"};
  }
  if (p.sizes[0] != 1) return {false, "|delta_1| = 1 (" + std::to_string(p.sizes[0]) + ")"};
  for (int i = 1; i < p.classes(); ++i) {
    if (p.sizes[i] > i + 1) {
      return {false, "|delta_" + std::to_string(i + 1) + "| <= " + std::to_string(i + 1) + " (" +
                         std::to_string(p.sizes[i]) + ")"};
    }
  }
  return {true, ""};
}

ProfileEquivalence check_p68(const OrdinalSpace& s, const LineWitness& witness) {
  if (!(ordinal_type(witness.distances()) == s)) throw ValidationError("witness does not reproduce the space");
  const auto p = class_profile(s);
  const int n = s.size();
  ProfileEquivalence out;
  out.minimal_classes = p.classes() == n - 1;
  out.bottom_is_path = p.sizes.back() == n - 1;
  out.staircase = true;
  for (int i = 0; i < p.classes(); ++i) out.staircase = out.staircase && p.sizes[i] == i + 1;
  return out;
}

}  // namespace ordspace
