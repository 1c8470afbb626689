#include "ordspace/core.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace ordspace {

char symbol(Relation r) {
  switch (r) {
    case Relation::Less: return '<';
    case Relation::Equal: return '=';
    case Relation::Greater: return '>';
  }
  return '?';
}

std::string name(Relation r) {
  switch (r) {
    case Relation::Less: return "LT";
    case Relation::Equal: return "EQ";
    case Relation::Greater: return "GT";
  }
  return "??";
}

Relation negate(Relation r) {
  if (r == Relation::Less) return Relation::Greater;
  if (r == Relation::Greater) return Relation::Less;
  return Relation::Equal;
}

// ---------------------------------------------------------------------------
// OrdinalSpace

OrdinalSpace::OrdinalSpace(RankMatrix ranks) : ranks_(std::move(ranks)) {
  const auto n = ranks_.rows();
  if (n < 1 || ranks_.cols() != n) {
    throw ValidationError("rank matrix must be square and nonempty");
  }
  int k = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (ranks_(i, i) != 0) {
      throw ValidationError("rank matrix diagonal entry (" + std::to_string(i + 1) + "," +
                            std::to_string(i + 1) + ") must be 0");
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (ranks_(i, j) != ranks_(j, i)) {
        throw ValidationError("rank matrix not symmetric at (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ")");
      }
      if (ranks_(i, j) < 1) {
        throw ValidationError("rank of pair (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") must be >= 1");
      }
      k = std::max(k, ranks_(i, j));
    }
  }
  std::vector<bool> seen(k + 1, false);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) seen[ranks_(i, j)] = true;
  }
  for (int l = 1; l <= k; ++l) {
    if (!seen[l]) {
      throw ValidationError("level " + std::to_string(l) + " is not attained (levels must be 1.." +
                            std::to_string(k) + ")");
    }
  }
  levels_ = k;
}

OrdinalSpace OrdinalSpace::from_levels(const RankMatrix& levels) {
  const auto n = levels.rows();
  if (n < 1 || levels.cols() != n) throw ValidationError("level matrix must be square and nonempty");
  std::vector<int> values;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (levels(i, j) != levels(j, i)) {
        throw ValidationError("level matrix not symmetric at (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ")");
      }
      if (levels(i, j) <= 0) throw ValidationError("off-diagonal levels must be positive");
      values.push_back(levels(i, j));
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  RankMatrix ranks = RankMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const int r = static_cast<int>(std::lower_bound(values.begin(), values.end(), levels(i, j)) -
                                     values.begin()) + 1;
      ranks(i, j) = ranks(j, i) = r;
    }
  }
  return OrdinalSpace(std::move(ranks), static_cast<int>(values.size()));
}

OrdinalSpace OrdinalSpace::from_flat(int n, std::span<const int> flat) {
  if (static_cast<std::size_t>(n * (n - 1) / 2) != flat.size()) {
    throw ValidationError("flat rank vector has wrong length");
  }
  RankMatrix ranks = RankMatrix::Zero(n, n);
  std::size_t idx = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) ranks(i, j) = ranks(j, i) = flat[idx++];
  }
  return OrdinalSpace(std::move(ranks));
}

std::vector<int> OrdinalSpace::flat() const {
  const int n = size();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) out.push_back(ranks_(i, j));
  }
  return out;
}

// ---------------------------------------------------------------------------
// DistanceMatrix

DistanceMatrix::DistanceMatrix(RationalMatrix d) : d_(std::move(d)) {
  const auto n = d_.rows();
  if (n < 1 || d_.cols() != n) throw ValidationError("distance matrix must be square and nonempty");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (d_(i, i) != 0) {
      throw ValidationError("distance diagonal entry (" + std::to_string(i + 1) + "," +
                            std::to_string(i + 1) + ") must be 0, got " + to_string(d_(i, i)));
    }
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (d_(i, j) != d_(j, i)) {
        throw ValidationError("distance matrix not symmetric at (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + "): " + to_string(d_(i, j)) + " vs " +
                              to_string(d_(j, i)));
      }
      if (d_(i, j) <= 0) {
        throw ValidationError("distance (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                              ") must be positive, got " + to_string(d_(i, j)));
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Errors carrying domain payloads

namespace {

std::string describe(const Comparison& c) {
  std::ostringstream os;
  os << "d(" << c.x + 1 << "," << c.y + 1 << ") " << symbol(c.rel) << " d(" << c.z + 1 << ","
     << c.w + 1 << ")";
  return os.str();
}

}  // namespace

AxiomViolation::AxiomViolation(std::string axiom, std::vector<Comparison> witnesses,
                               const std::string& detail)
    : Error([&] {
        std::string msg = "axiom (" + axiom + ") violated: " + detail;
        for (const auto& c : witnesses) msg += "; " + describe(c);
        return msg;
      }()),
      axiom_(std::move(axiom)),
      witnesses_(std::move(witnesses)) {}

Underdetermined::Underdetermined(Pair first, Pair second)
    : Error("relations do not order pair {" + std::to_string(first.first + 1) + "," +
            std::to_string(first.second + 1) + "} against pair {" +
            std::to_string(second.first + 1) + "," + std::to_string(second.second + 1) + "}"),
      first_(first),
      second_(second) {}

// ---------------------------------------------------------------------------
// Construction

OrdinalSpace ordinal_type(const DistanceMatrix& d) {
  const int n = d.size();
  std::vector<Rational> values;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) values.push_back(d(i, j));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  RankMatrix ranks = RankMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int r =
          static_cast<int>(std::lower_bound(values.begin(), values.end(), d(i, j)) - values.begin()) + 1;
      ranks(i, j) = ranks(j, i) = r;
    }
  }
  return OrdinalSpace(std::move(ranks));
}

namespace {

class PairIndex {
 public:
  explicit PairIndex(int n) : n_(n) {}
  int count() const { return n_ * (n_ - 1) / 2; }
  int id(Point x, Point y) const {
    if (x > y) std::swap(x, y);
    return y * (y - 1) / 2 + x;
  }
  std::pair<Point, Point> pair(int id) const {
    int y = 1;
    while ((y + 1) * y / 2 <= id) ++y;
    return {id - y * (y - 1) / 2, y};
  }

 private:
  int n_;
};

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

OrdinalSpace from_comparisons(const ComparisonList& c) {
  const int n = c.n;
  if (n < 1) throw ValidationError("comparison list needs at least one point");
  for (const auto& e : c.entries) {
    for (Point p : {e.x, e.y, e.z, e.w}) {
      if (p < 0 || p >= n) {
        throw ValidationError("point index " + std::to_string(p + 1) + " out of range 1.." +
                              std::to_string(n));
      }
    }
  }

  const PairIndex pairs(n);
  const int m = pairs.count();
  UnionFind classes(std::max(m, 1));

  struct Strict {
    int lo, hi;  // pair ids with pair(lo) < pair(hi)
    std::size_t entry;
  };
  std::vector<Strict> strict;

  for (std::size_t idx = 0; idx < c.entries.size(); ++idx) {
    const auto& e = c.entries[idx];
    const bool left_zero = e.x == e.y;
    const bool right_zero = e.z == e.w;
    if (left_zero || right_zero) {
      Relation expected = left_zero && right_zero ? Relation::Equal
                          : left_zero            ? Relation::Less
                                                 : Relation::Greater;
      if (e.rel != expected) {
        throw AxiomViolation("vii", {e}, "a point is closer to itself than to any other point");
      }
      continue;
    }
    const int p = pairs.id(e.x, e.y);
    const int q = pairs.id(e.z, e.w);
    if (p == q) {
      if (e.rel != Relation::Equal) throw AxiomViolation("i", {e}, "a pair equals itself");
      continue;
    }
    switch (e.rel) {
      case Relation::Equal: classes.unite(p, q); break;
      case Relation::Less: strict.push_back({p, q, idx}); break;
      case Relation::Greater: strict.push_back({q, p, idx}); break;
    }
  }

  if (m == 0) return OrdinalSpace(RankMatrix::Zero(1, 1));

  // Compact class ids.
  std::vector<int> class_of(m);
  std::map<int, int> root_to_class;
  std::vector<int> representative;
  for (int p = 0; p < m; ++p) {
    const int root = classes.find(p);
    auto [it, inserted] = root_to_class.emplace(root, static_cast<int>(representative.size()));
    if (inserted) representative.push_back(p);
    class_of[p] = it->second;
  }
  const int num_classes = static_cast<int>(representative.size());

  // Strict edges between classes; an edge inside a class contradicts (v).
  std::vector<std::vector<std::pair<int, std::size_t>>> out(num_classes);
  for (const auto& s : strict) {
    const int a = class_of[s.lo];
    const int b = class_of[s.hi];
    if (a == b) {
      // Collect the equalities that tie the two pairs together.
      std::vector<Comparison> witness{c.entries[s.entry]};
      for (const auto& e : c.entries) {
        if (e.rel != Relation::Equal || e.x == e.y || e.z == e.w) continue;
        if (class_of[pairs.id(e.x, e.y)] == a) witness.push_back(e);
      }
      throw AxiomViolation("v", std::move(witness), "a strict relation inside an equality class");
    }
    out[a].emplace_back(b, s.entry);
  }

  // Cycle detection; report the entries along the cycle.
  std::vector<int> state(num_classes, 0);
  std::vector<std::pair<int, std::size_t>> stack;  // (class, entry that led here)
  std::vector<int> order;
  std::function<void(int)> visit = [&](int v) {
    state[v] = 1;
    for (const auto& [w, entry] : out[v]) {
      if (state[w] == 1) {
        // stack holds (class, entry into class); walk back to w.
        std::vector<Comparison> cycle;
        bool on_cycle = false;
        for (const auto& [cls, e] : stack) {
          if (cls == w) {
            on_cycle = true;
            continue;
          }
          if (on_cycle) cycle.push_back(c.entries[e]);
        }
        cycle.push_back(c.entries[entry]);
        const std::string axiom = cycle.size() == 2 ? "iii" : "v";
        throw AxiomViolation(axiom, std::move(cycle), "strict relations form a cycle");
      }
      if (state[w] == 0) {
        stack.emplace_back(w, entry);
        visit(w);
        stack.pop_back();
      }
    }
    state[v] = 2;
    order.push_back(v);
  };
  for (int v = 0; v < num_classes; ++v) {
    if (state[v] == 0) {
      stack.assign(1, {v, 0});
      visit(v);
    }
  }
  std::reverse(order.begin(), order.end());  // topological: smaller classes first

  // Transitive closure; the class order must be total.
  std::vector<std::vector<bool>> reach(num_classes,
                                       std::vector<bool>(num_classes, false));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto v = static_cast<std::size_t>(*it);
    for (const auto& [w, entry] : out[v]) {
      reach[v][w] = true;
      for (int u = 0; u < num_classes; ++u) {
        if (reach[w][u]) {
          reach[v][u] = true;
        }
      }
    }
  }
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const auto a = static_cast<std::size_t>(order[i]);
    const auto b = static_cast<std::size_t>(order[i + 1]);
    if (!reach[a][b]) {
      throw Underdetermined(pairs.pair(representative[a]), pairs.pair(representative[b]));
    }
  }

  std::vector<int> level(num_classes);
  for (std::size_t i = 0; i < order.size(); ++i) level[order[i]] = static_cast<int>(i) + 1;
  RankMatrix ranks = RankMatrix::Zero(n, n);
  for (int p = 0; p < m; ++p) {
    const auto [x, y] = pairs.pair(p);
    ranks(x, y) = ranks(y, x) = level[class_of[p]];
  }
  return OrdinalSpace(std::move(ranks));
}

ComparisonList to_comparisons(const OrdinalSpace& s) {
  ComparisonList out{s.size(), {}};
  const int n = s.size();
  std::vector<std::pair<Point, Point>> ps;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) ps.emplace_back(i, j);
  }
  for (std::size_t a = 0; a < ps.size(); ++a) {
    for (std::size_t b = a + 1; b < ps.size(); ++b) {
      const auto [x, y] = ps[a];
      const auto [z, w] = ps[b];
      out.entries.push_back({x, y, z, w, compare(s.rank(x, y), s.rank(z, w))});
    }
  }
  return out;
}

Relation relation(const OrdinalSpace& s, Point x, Point y, Point z, Point w) {
  const int n = s.size();
  for (Point p : {x, y, z, w}) {
    if (p < 0 || p >= n) {
      throw ValidationError("point index " + std::to_string(p) + " out of range");
    }
  }
  return compare(s.rank(x, y), s.rank(z, w));
}

OrdinalSpace relabel(const OrdinalSpace& s, const Permutation& f) {
  const int n = s.size();
  if (static_cast<int>(f.size()) != n) throw ValidationError("relabeling has wrong size");
  RankMatrix ranks = RankMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) ranks(f[i], f[j]) = s.rank(i, j);
  }
  return OrdinalSpace(std::move(ranks));
}

OrdinalSpace subspace(const OrdinalSpace& s, std::span<const Point> points) {
  const auto m = static_cast<Eigen::Index>(points.size());
  if (m < 1) throw ValidationError("subspace needs at least one point");
  RankMatrix levels = RankMatrix::Zero(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (i == j) continue;
      const Point x = points[i];
      const Point y = points[j];
      if (x == y) throw ValidationError("subspace points must be distinct");
      levels(i, j) = s.rank(x, y);
    }
  }
  return OrdinalSpace::from_levels(levels);
}

// ---------------------------------------------------------------------------
// Canonical form. Relabeling order `pi` maps new index -> old index, so the
// relabeled rank at (i,j) is s.rank(pi[i], pi[j]). Columns of the flat key
// depend only on pi[0..j], which lets prefixes be compared while pi is built.

namespace {

// Depth-first search over relabelings comparing the flat key column by
// column against `best`. With `improve` set, every strictly smaller leaf
// replaces `best`; otherwise the search stops at the first smaller prefix.
class RelabelingSearch {
 public:
  explicit RelabelingSearch(const OrdinalSpace& s)
      : s_(s),
        n_(s.size()),
        pi_(n_),
        used_(n_, false),
        current_(s.flat()),
        best_(current_) {}

  bool found_smaller() { return smaller(0); }

  std::optional<Permutation> minimize() {
    minimize(0, true);
    return best_pi_;
  }

 private:
  std::size_t column_start(int j) const { return static_cast<std::size_t>(j * (j - 1) / 2); }

  // Fills column j of current_; returns the comparison of the prefix up to
  // and including column j against best_, or of column j alone when `tight`.
  int fill_column(int j, bool tight) {
    const std::size_t start = column_start(j);
    for (int i = 0; i < j; ++i) {
      current_[start + i] =
          s_.rank(pi_[i], pi_[j]);
    }
    const std::size_t from = tight ? start : 0;
    const std::size_t to = start + j;
    for (std::size_t t = from; t < to; ++t) {
      if (current_[t] != best_[t]) return current_[t] < best_[t] ? -1 : 1;
    }
    return 0;
  }

  bool smaller(int depth) {
    if (depth == n_) return false;
    for (int p = 0; p < n_; ++p) {
      if (used_[p]) continue;
      pi_[depth] = p;
      const int cmp = fill_column(depth, true);
      if (cmp < 0) return true;
      if (cmp > 0) continue;
      used_[p] = true;
      const bool hit = smaller(depth + 1);
      used_[p] = false;
      if (hit) return true;
    }
    return false;
  }

  // `tight`: the prefix equals best_'s prefix. Untight prefixes were smaller
  // when entered but best_ may have improved since, so they are re-compared
  // in full.
  void minimize(int depth, bool tight) {
    if (depth == n_) {
      if (!tight && current_ < best_) {
        best_ = current_;
        best_pi_ = pi_;
      }
      return;
    }
    for (int p = 0; p < n_; ++p) {
      if (used_[p]) continue;
      pi_[depth] = p;
      const int cmp = fill_column(depth, tight);
      if (cmp > 0) continue;
      used_[p] = true;
      minimize(depth + 1, tight && cmp == 0);
      used_[p] = false;
    }
  }

  const OrdinalSpace& s_;
  int n_;
  Permutation pi_;
  std::vector<bool> used_;
  std::vector<int> current_;
  std::vector<int> best_;
  std::optional<Permutation> best_pi_;
};

}  // namespace

bool is_canonical(const OrdinalSpace& s) { return !RelabelingSearch(s).found_smaller(); }

OrdinalSpace canonical_form(const OrdinalSpace& s, int limit) {
  if (s.size() > limit) throw SizeLimit("canonical_form", s.size(), limit);
  const auto pi = RelabelingSearch(s).minimize();
  if (!pi) return s;
  // pi maps new -> old, so the isomorphism s -> canonical is its inverse.
  return relabel(s, inverse(*pi));
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

std::vector<std::vector<int>> row_signatures(const OrdinalSpace& s) {
  std::vector<std::vector<int>> sig(s.size());
  for (int i = 0; i < s.size(); ++i) {
    auto& row = sig[i];
    for (int j = 0; j < s.size(); ++j) row.push_back(s.rank(i, j));
    std::sort(row.begin(), row.end());
  }
  return sig;
}

}  // namespace

IsomorphismResult is_isomorphic(const OrdinalSpace& a, const OrdinalSpace& b) {
  if (a.size() != b.size() || a.levels() != b.levels()) return {};
  const int n = a.size();
  const auto sig_a = row_signatures(a);
  const auto sig_b = row_signatures(b);
  {
    auto sa = sig_a;
    auto sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return {};
  }

  Permutation f(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> extend = [&](int x) {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y] || sig_a[x] != sig_b[y]) continue;
      bool ok = true;
      for (int p = 0; p < x && ok; ++p) ok = a.rank(p, x) == b.rank(f[p], y);
      if (!ok) continue;
      f[x] = y;
      used[y] = true;
      if (extend(x + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!extend(0)) return {};
  return {true, f};
}

bool weakly_similar(const DistanceMatrix& d1, const DistanceMatrix& d2) {
  return is_isomorphic(ordinal_type(d1), ordinal_type(d2)).isomorphic;
}

// ---------------------------------------------------------------------------
// Realization

DistanceMatrix realize_scaled(const OrdinalSpace& s, const Rational& scale) {
  const int n = s.size();
  RationalMatrix d = RationalMatrix::Zero(n, n);
  if (n == 1) return DistanceMatrix(std::move(d));
  const Rational denom = 2 * s.levels();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      d(i, j) = d(j, i) = Rational(1) + scale * Rational(s.rank(i, j)) / denom;
    }
  }
  return DistanceMatrix(std::move(d));
}

DistanceMatrix realize(const OrdinalSpace& s) { return realize_scaled(s, Rational(1)); }

// ---------------------------------------------------------------------------
// Permutations

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Permutation inverse(const Permutation& f) {
  Permutation inv(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) inv[f[i]] = static_cast<Point>(i);
  return inv;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

}  // namespace ordspace
