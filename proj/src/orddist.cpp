#include "ordspace/orddist.hpp"

#include <limits>
#include <map>
#include <random>

namespace ordspace {

namespace {

std::vector<PointPair> pairs_of(int n) {
  std::vector<PointPair> out;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) out.emplace_back(i, j);
  }
  return out;
}

void check_sizes(const OrdinalSpace& a, const OrdinalSpace& b, int limit, const char* what) {
  if (a.size() != b.size()) throw ValidationError(std::string(what) + ": spaces differ in size");
  if (a.size() > limit) throw SizeLimit(what, a.size(), limit);
}

bool disagree(const OrdinalSpace& a, const OrdinalSpace& b, const Permutation& f, PointPair p, PointPair q) {
  return compare(a.rank(p.first, p.second), a.rank(q.first, q.second)) !=
         compare(b.rank(f[p.first], f[p.second]), b.rank(f[q.first], f[q.second]));
}

class BranchAndBound {
 public:
  BranchAndBound(const OrdinalSpace& a, const OrdinalSpace& b) : a_(a), b_(b), n_(a.size()) {
    f_.assign(n_, -1);
    used_.assign(n_, false);
  }

  void run() { extend(0, 0); }

  long long best() const { return best_; }
  const Permutation& witness() const { return witness_; }

 private:
  // Disagreements among pairs that become complete when point i is placed:
  // each new pair (j, i) against every earlier pair and the other new pairs.
  long long added(int i) const {
    long long count = 0;
    for (int j = 0; j < i; ++j) {
      const PointPair p{j, i};
      for (int l = 1; l < i; ++l) {
        for (int k = 0; k < l; ++k) count += disagree(a_, b_, f_, p, {k, l});
      }
      for (int k = 0; k < j; ++k) count += disagree(a_, b_, f_, p, {k, i});
    }
    return count;
  }

  void extend(int i, long long partial) {
    if (i == n_) {
      if (partial < best_) {
        best_ = partial;
        witness_ = f_;
      }
      return;
    }
    for (int v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      f_[i] = v;
      used_[v] = true;
      const long long next = partial + added(i);
      if (next < best_) extend(i + 1, next);
      used_[v] = false;
      f_[i] = -1;
    }
  }

  const OrdinalSpace& a_;
  const OrdinalSpace& b_;
  int n_;
  Permutation f_;
  std::vector<bool> used_;
  long long best_ = std::numeric_limits<long long>::max();
  Permutation witness_;
};

}  // namespace

long long disagreement_count(const OrdinalSpace& a, const OrdinalSpace& b, const Permutation& f) {
  if (a.size() != b.size() || static_cast<int>(f.size()) != a.size()) {
    throw ValidationError("disagreement_count: size mismatch");
  }
  const auto pairs = pairs_of(a.size());
  long long count = 0;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = p + 1; q < pairs.size(); ++q) count += disagree(a, b, f, pairs[p], pairs[q]);
  }
  return count;
}

OrdDistResult d_ord(const OrdinalSpace& a, const OrdinalSpace& b, int limit) {
  check_sizes(a, b, limit, "d_ord");
  BranchAndBound search(a, b);
  search.run();
  OrdDistResult out;
  out.value = search.best();
  out.witness = search.witness();
  const auto pairs = pairs_of(a.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    for (std::size_t q = p + 1; q < pairs.size(); ++q) {
      if (disagree(a, b, out.witness, pairs[p], pairs[q])) out.disagreements.emplace_back(pairs[p], pairs[q]);
    }
  }
  return out;
}

long long d_ord_ordered_quadruples(const OrdinalSpace& a, const OrdinalSpace& b, int limit) {
  check_sizes(a, b, limit, "d_ord_ordered_quadruples");
  const int n = a.size();
  long long best = std::numeric_limits<long long>::max();
  for (const auto& f : all_permutations(n)) {
    long long raw = 0;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          for (int w = 0; w < n; ++w) {
            raw += relation(a, x, y, z, w) != relation(b, f[x], f[y], f[z], f[w]);
          }
        }
      }
    }
    if (raw % 8 != 0) throw SolverFailure("ordered disagreement count not divisible by 8");
    best = std::min(best, raw / 8);
  }
  return best;
}

MetricProbeReport d_ord_metric_probe(const std::vector<OrdinalSpace>& sample,
                                     std::optional<long long> sampled_triples, std::uint64_t seed) {
  const int m = static_cast<int>(sample.size());
  MetricProbeReport report;
  std::map<std::pair<int, int>, long long> cache;
  auto dist = [&](int i, int j) {
    auto key = std::make_pair(i, j);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const long long v = d_ord(sample[i], sample[j]).value;
    cache.emplace(key, v);
    return v;
  };
  for (int i = 0; i < m; ++i) {
    for (int j = i; j < m; ++j) {
      ++report.pairs_checked;
      const long long dij = dist(i, j);
      if (dij != dist(j, i)) report.violations.push_back({"symmetry", {i, j}});
      if ((dij == 0) != is_isomorphic(sample[i], sample[j]).isomorphic) {
        report.violations.push_back({"identity", {i, j}});
      }
    }
  }
  auto triangle = [&](int i, int j, int k) {
    ++report.triples_checked;
    if (dist(i, k) > dist(i, j) + dist(j, k)) report.violations.push_back({"triangle", {i, j, k}});
  };
  if (sampled_triples) {
    if (m == 0) return report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, m - 1);
    for (long long t = 0; t < *sampled_triples; ++t) {
      const int i = pick(rng);
      const int j = pick(rng);
      const int k = pick(rng);
      triangle(i, j, k);
    }
  } else {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        for (int k = 0; k < m; ++k) triangle(i, j, k);
      }
    }
  }
  return report;
}

}  // namespace ordspace
