#include "ordspace/census.hpp"

#include "ordspace/line.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

namespace ordspace {

namespace {

// Restricted growth strings of length m: set partitions of the pair set.
std::vector<std::vector<int>> set_partitions(int m) {
  std::vector<std::vector<int>> out;
  if (m == 0) return {{}};
  std::vector<int> a(m, 0);
  std::vector<int> prefix_max(m, 0);
  while (true) {
    out.push_back(a);
    int i = m - 1;
    while (i > 0 && a[i] == prefix_max[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    for (int j = i; j < m; ++j) {
      if (j > i) a[j] = 0;
      prefix_max[j] = std::max(j > 0 ? prefix_max[j - 1] : 0, a[j]);
    }
  }
  return out;
}

// Calls visit(flat) for every level assignment derived from `blocks` by
// ordering its blocks in all possible ways.
template <typename Visit>
void for_each_block_order(const std::vector<int>& blocks, Visit&& visit) {
  const int k = blocks.empty() ? 0 : *std::max_element(blocks.begin(), blocks.end()) + 1;
  std::vector<int> level(k);
  std::iota(level.begin(), level.end(), 1);
  std::vector<int> flat(blocks.size());
  do {
    for (std::size_t p = 0; p < blocks.size(); ++p) flat[p] = level[blocks[p]];
    visit(flat);
  } while (std::next_permutation(level.begin(), level.end()));
}

// Runs work(i) for i in [0, count) on `jobs` threads with an atomic counter.
template <typename Work>
void parallel_for(std::size_t count, int jobs, Work&& work) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) work(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = next++; i < count; i = next++) work(i, t);
    });
  }
  for (auto& th : pool) th.join();
}

long long factorial(int m) {
  long long f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

}  // namespace

std::string name(CensusFilter f) { return f == CensusFilter::All ? "all" : "injective"; }

std::string name(Verdict v) {
  switch (v) {
    case Verdict::Match:
      return "MATCH";
    case Verdict::Mismatch:
      return "MISMATCH";
    case Verdict::Untested:
      return "UNTESTED";
  }
  return "UNTESTED";
}

int census_limit(CensusFilter f, bool huge) {
  if (f == CensusFilter::All) return huge ? 5 : 4;
  return 5;
}

long long census_candidates(int n, CensusFilter f) {
  const int m = n * (n - 1) / 2;
  if (f == CensusFilter::Injective) return factorial(m);
  // Fubini numbers by a(m) = sum_k C(m,k) a(m-k).
  std::vector<long long> a(m + 1, 0);
  a[0] = 1;
  for (int i = 1; i <= m; ++i) {
    long long binom = 1;
    for (int k = 1; k <= i; ++k) {
      binom = binom * (i - k + 1) / k;
      a[i] += binom * a[i - k];
    }
  }
  return a[m];
}

std::vector<OrdinalSpace> enumerate_spaces(int n, CensusFilter filter, const CensusOptions& options) {
  if (n < 1) throw ValidationError("census needs n >= 1");
  const int limit = census_limit(filter, options.huge);
  if (n > limit) throw SizeLimit("census (" + name(filter) + ")", n, limit);
  const int m = n * (n - 1) / 2;
  if (m == 0) return {OrdinalSpace(RankMatrix::Zero(1, 1))};

  std::vector<std::vector<int>> partitions;
  if (filter == CensusFilter::All) {
    partitions = set_partitions(m);
  } else {
    std::vector<int> discrete(m);
    std::iota(discrete.begin(), discrete.end(), 0);
    partitions.push_back(discrete);
  }

  const int jobs = std::max(1, options.jobs);
  std::vector<std::vector<std::vector<int>>> found(jobs);
  parallel_for(partitions.size(), jobs, [&](std::size_t i, int t) {
    for_each_block_order(partitions[i], [&](const std::vector<int>& flat) {
      if (is_canonical(OrdinalSpace::from_flat(n, flat))) found[t].push_back(flat);
    });
  });
  std::vector<std::vector<int>> keys;
  for (auto& part : found) keys.insert(keys.end(), part.begin(), part.end());
  std::sort(keys.begin(), keys.end());
  std::vector<OrdinalSpace> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(OrdinalSpace::from_flat(n, k));
  return out;
}

const std::vector<int>& max_ball_sequence() {
  static const std::vector<int> seq = {1, 3, 6, 12, 19, 29, 40};
  return seq;
}

CensusReport ball_extremes(int n, CensusFilter filter, const CensusOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CensusReport r;
  r.n = n;
  r.filter = filter;
  r.candidates = census_candidates(n, filter);
  const auto spaces = enumerate_spaces(n, filter, options);
  r.total_nonisomorphic = static_cast<long long>(spaces.size());
  const int m = n * (n - 1) / 2;

  for (const auto& s : spaces) {
    const int balls = count_balls(s);
    if (filter == CensusFilter::All && (!r.max_balls || balls > r.max_balls->value)) {
      r.max_balls = BallExtreme{balls, s};
    }
    const bool injective = s.levels() == m;
    if (injective && (!r.min_balls_distinct || balls < r.min_balls_distinct->value)) {
      r.min_balls_distinct = BallExtreme{balls, s};
      r.min_attainers = 0;
    }
    if (injective && r.min_balls_distinct && balls == r.min_balls_distinct->value) ++r.min_attainers;
  }

  // Re-count witnesses through the full ball construction.
  if (r.max_balls && ball_set(r.max_balls->witness).size() != r.max_balls->value) {
    throw SolverFailure("max-ball witness failed re-check");
  }
  if (r.min_balls_distinct && ball_set(r.min_balls_distinct->witness).size() != r.min_balls_distinct->value) {
    throw SolverFailure("min-ball witness failed re-check");
  }

  const auto& seq = max_ball_sequence();
  if (r.max_balls && n <= static_cast<int>(seq.size())) {
    r.max_verdict = r.max_balls->value == seq[n - 1] ? Verdict::Match : Verdict::Mismatch;
  }
  if (r.min_balls_distinct) {
    r.min_verdict = r.min_balls_distinct->value == n * (n + 1) / 2 ? Verdict::Match : Verdict::Mismatch;
  }
  if (n <= 6) {
    long long emb = 0;
    for (const auto& s : spaces) emb += embed_line(s).has_value();
    r.r1_embeddable = emb;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

LineCount count_r1_embeddable(int n, const CensusOptions& options) {
  LineCount c;
  for (const auto& s : enumerate_spaces(n, CensusFilter::All, options)) {
    ++c.total;
    const bool line = embed_line(s).has_value();
    c.embeddable += line;
    if (n == 4 && classify_t10(s).embeddable != line) ++c.classifier_disagreements;
  }
  return c;
}

HasseDiagram path_interval_hasse(int n) {
  std::vector<PointSet> sets;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      PointSet s;
      for (int p = i; p <= j; ++p) s.insert(p);
      sets.push_back(s);
    }
  }
  return hasse(sets);
}

HasseShapeReport minimal_hasse_shape_probe(int n, const HasseDiagram& reference) {
  if (n != 3 && n != 4) throw ValidationError("minimal_hasse_shape_probe needs n in {3, 4}");
  const auto spaces = enumerate_spaces(n, CensusFilter::Injective);
  std::vector<int> counts;
  for (const auto& s : spaces) counts.push_back(count_balls(s));
  HasseShapeReport r;
  r.n = n;
  r.min_balls = *std::min_element(counts.begin(), counts.end());
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    const bool matches = hasse_isomorphic(hasse(ball_set(spaces[i])), reference).isomorphic;
    if (counts[i] == r.min_balls) {
      ++r.attainers;
      r.attainers_matching += matches;
    } else {
      r.non_attainers_matching += matches;
    }
  }
  return r;
}

}  // namespace ordspace
