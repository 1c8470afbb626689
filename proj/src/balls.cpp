#include "ordspace/balls.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace ordspace {

std::vector<Point> PointSet::members() const {
  std::vector<Point> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

PointSet PointSet::mapped(const Permutation& f) const {
  PointSet out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
    out.insert(f[std::countr_zero(b)]);
  }
  return out;
}

bool operator<(PointSet a, PointSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint64_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return false;
  // The smallest point where the sets differ decides the sorted-list order.
  return (a.bits_ >> std::countr_zero(diff)) & 1U;
}

std::string format_point_set(PointSet s, const std::string& prefix) {
  std::string out = "{";
  bool first = true;
  for (Point p : s.members()) {
    if (!first) out += ",";
    out += prefix + std::to_string(p + 1);
    first = false;
  }
  return out + "}";
}

bool BallSet::contains(PointSet s) const { return index_of(s).has_value(); }

std::optional<int> BallSet::index_of(PointSet s) const {
  auto it = std::lower_bound(balls.begin(), balls.end(), s);
  if (it == balls.end() || *it != s) return std::nullopt;
  return static_cast<int>(it - balls.begin());
}

std::vector<int> spectrum(const OrdinalSpace& s, Point c) {
  if (c < 0 || c >= s.size()) throw ValidationError("center out of range");
  std::vector<int> out;
  for (Point x = 0; x < s.size(); ++x) out.push_back(s.rank(c, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Ball> balls_at(const OrdinalSpace& s, Point c) {
  std::vector<Ball> out;
  for (int threshold : spectrum(s, c)) {
    PointSet members;
    for (Point x = 0; x < s.size(); ++x) {
      if (s.rank(c, x) <= threshold) members.insert(x);
    }
    out.push_back({c, threshold, members});
  }
  return out;
}

BallSet ball_set(const OrdinalSpace& s) {
  if (s.size() > 64) throw SizeLimit("ball_set", s.size(), 64);
  std::map<PointSet, std::vector<std::pair<Point, int>>> acc;
  for (Point c = 0; c < s.size(); ++c) {
    for (const Ball& b : balls_at(s, c)) acc[b.members].emplace_back(b.center, b.threshold);
  }
  BallSet out;
  for (auto& [members, prov] : acc) {
    out.balls.push_back(members);
    out.provenance.push_back(std::move(prov));
  }
  return out;
}

std::vector<PointSet> metric_balls(const DistanceMatrix& d) {
  const int n = d.size();
  std::vector<PointSet> out;
  for (Point c = 0; c < n; ++c) {
    for (Point r = 0; r < n; ++r) {
      PointSet members;
      for (Point x = 0; x < n; ++x) {
        if (d(c, x) <= d(c, r)) members.insert(x);
      }
      out.push_back(members);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

int count_balls(const OrdinalSpace& s) {
  const int n = s.size();
  std::vector<std::uint64_t> masks;
  masks.reserve(static_cast<std::size_t>(n * n));
  std::vector<std::pair<int, Point>> row(n);
  for (Point c = 0; c < n; ++c) {
    for (Point x = 0; x < n; ++x) row[x] = {s.rank(c, x), x};
    std::sort(row.begin(), row.end());
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < row.size(); ++i) {
      mask |= std::uint64_t{1} << row[i].second;
      if (i + 1 == row.size() || row[i + 1].first != row[i].first) masks.push_back(mask);
    }
  }
  std::sort(masks.begin(), masks.end());
  return static_cast<int>(std::unique(masks.begin(), masks.end()) - masks.begin());
}

HasseDiagram hasse(const std::vector<PointSet>& sets) {
  HasseDiagram h;
  h.vertices = sets;
  std::sort(h.vertices.begin(), h.vertices.end());
  h.vertices.erase(std::unique(h.vertices.begin(), h.vertices.end()), h.vertices.end());
  const int m = h.size();
  for (int u = 0; u < m; ++u) {
    for (int v = 0; v < m; ++v) {
      if (!h.vertices[u].proper_subset_of(h.vertices[v])) continue;
      bool covering = true;
      for (int w = 0; w < m && covering; ++w) {
        const PointSet mid = h.vertices[w];
        covering = !(h.vertices[u].proper_subset_of(mid) &&
                     mid.proper_subset_of(h.vertices[v]));
      }
      if (covering) h.arcs.emplace_back(u, v);
    }
  }
  std::sort(h.arcs.begin(), h.arcs.end());
  return h;
}

HasseDiagram hasse(const BallSet& bs) { return hasse(bs.balls); }

// ---------------------------------------------------------------------------
// Digraph isomorphism: colour refinement seeded with (in-degree, out-degree,
// longest path from a source), then backtracking within colour classes.

namespace {

struct Digraph {
  int n = 0;
  std::vector<std::vector<bool>> arc;
  std::vector<std::vector<int>> out, in;

  explicit Digraph(const HasseDiagram& h)
      : n(h.size()),
        arc(n, std::vector<bool>(n, false)),
        out(n),
        in(n) {
    for (auto [u, v] : h.arcs) {
      arc[u][v] = true;
      out[u].push_back(v);
      in[v].push_back(u);
    }
  }

  // Longest path from a source; -1 marks a vertex on a cycle.
  std::vector<int> levels() const {
    std::vector<int> indeg(n);
    for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(in[v].size());
    std::vector<int> level(n, -1);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v) {
      if (indeg[v] == 0) {
        level[v] = 0;
        queue.push_back(v);
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int v : out[u]) {
        level[v] = std::max(level[v], level[u] + 1);
        if (--indeg[v] == 0) queue.push_back(v);
      }
    }
    return level;
  }
};

using Signature = std::vector<int>;

void refine(const Digraph& a, const Digraph& b, std::vector<int>& ca, std::vector<int>& cb) {
  auto initial = [](const Digraph& g) {
    std::vector<Signature> sig(g.n);
    const auto level = g.levels();
    for (int v = 0; v < g.n; ++v) {
      sig[v] = {static_cast<int>(g.in[v].size()),
                                          static_cast<int>(g.out[v].size()),
                                          level[v]};
    }
    return sig;
  };
  auto next = [](const Digraph& g, const std::vector<int>& colour) {
    std::vector<Signature> sig(g.n);
    for (int v = 0; v < g.n; ++v) {
      Signature s{colour[v], -1};
      std::vector<int> outs, ins;
      for (int w : g.out[v]) outs.push_back(colour[w]);
      for (int w : g.in[v]) ins.push_back(colour[w]);
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      s.insert(s.end(), outs.begin(), outs.end());
      s.push_back(-2);
      s.insert(s.end(), ins.begin(), ins.end());
      sig[v] = std::move(s);
    }
    return sig;
  };
  // Shared signature dictionary keeps colours comparable across graphs.
  auto assign = [](const std::vector<Signature>& sa, const std::vector<Signature>& sb,
                   std::vector<int>& ca, std::vector<int>& cb) {
    std::map<Signature, int> ids;
    for (const auto& s : sa) ids.emplace(s, 0);
    for (const auto& s : sb) ids.emplace(s, 0);
    int next_id = 0;
    for (auto& [s, id] : ids) id = next_id++;
    ca.resize(sa.size());
    cb.resize(sb.size());
    for (std::size_t i = 0; i < sa.size(); ++i) ca[i] = ids[sa[i]];
    for (std::size_t i = 0; i < sb.size(); ++i) cb[i] = ids[sb[i]];
    return next_id;
  };

  int classes = assign(initial(a), initial(b), ca, cb);
  while (true) {
    const int refined = assign(next(a, ca), next(b, cb), ca, cb);
    if (refined == classes) break;
    classes = refined;
  }
}

}  // namespace

HasseIsomorphism hasse_isomorphic(const HasseDiagram& a, const HasseDiagram& b, int vertex_limit) {
  if (a.size() > vertex_limit) throw SizeLimit("hasse_isomorphic", a.size(), vertex_limit);
  if (b.size() > vertex_limit) throw SizeLimit("hasse_isomorphic", b.size(), vertex_limit);
  if (a.size() != b.size() || a.arcs.size() != b.arcs.size()) return {};
  const Digraph ga(a), gb(b);
  std::vector<int> ca, cb;
  refine(ga, gb, ca, cb);
  {
    auto ha = ca, hb = cb;
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return {};
  }

  const int n = ga.n;
  // Visit vertices of a in BFS order over the underlying undirected graph,
  // so each new vertex is adjacent to an already-mapped one when possible.
  std::vector<int> order;
  {
    std::vector<bool> seen(n, false);
    std::vector<int> by_class(n);
    std::iota(by_class.begin(), by_class.end(), 0);
    std::map<int, int> class_size;
    for (int c : ca) ++class_size[c];
    std::stable_sort(by_class.begin(), by_class.end(), [&](int x, int y) {
      return class_size[ca[x]] < class_size[ca[y]];
    });
    for (int root : by_class) {
      if (seen[root]) continue;
      std::vector<int> queue{root};
      seen[root] = true;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        order.push_back(u);
        for (const auto* nbrs : {&ga.out[u], &ga.in[u]}) {
          for (int w : *nbrs) {
            if (!seen[w]) {
              seen[w] = true;
              queue.push_back(w);
            }
          }
        }
      }
    }
  }

  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t idx) {
    if (idx == order.size()) return true;
    const int u = order[idx];
    for (int v = 0; v < n; ++v) {
      if (used[v] || ca[u] != cb[v]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < idx && ok; ++j) {
        const int x = order[j];
        const int y = map[x];
        ok = ga.arc[u][x] == gb.arc[v][y] &&
             ga.arc[x][u] == gb.arc[y][v];
      }
      if (!ok) continue;
      map[u] = v;
      used[v] = true;
      if (extend(idx + 1)) return true;
      used[v] = false;
      map[u] = -1;
    }
    return false;
  };
  if (!extend(0)) return {};
  return {true, map};
}

std::optional<Permutation> ball_preserving_bijection(const OrdinalSpace& a, const OrdinalSpace& b,
                                                     int limit) {
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  if (n > limit) throw SizeLimit("ball_preserving_bijection", n, limit);
  const BallSet ba = ball_set(a);
  const BallSet bb = ball_set(b);
  if (ba.size() != bb.size()) return std::nullopt;

  // A ball of a can be checked once its highest point is mapped.
  std::vector<std::vector<PointSet>> due(n);
  for (PointSet z : ba.balls) {
    if (z.size() > 1) due[63 - std::countl_zero(z.bits())].push_back(z);
  }
  std::unordered_set<std::uint64_t> targets;
  for (PointSet w : bb.balls) targets.insert(w.bits());

  Permutation f(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> extend = [&](int x) {
    if (x == n) return true;
    for (Point y = 0; y < n; ++y) {
      if (used[y]) continue;
      f[x] = y;
      bool ok = true;
      for (PointSet z : due[x]) {
        if (!targets.contains(z.mapped(f).bits())) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      used[y] = true;
      if (extend(x + 1)) return true;
      used[y] = false;
    }
    f[x] = -1;
    return false;
  };
  // Images of distinct balls are distinct and |B_a| = |B_b|, so f mapping
  // every ball of a onto a ball of b makes f^-1 ball-preserving as well.
  if (!extend(0)) return std::nullopt;
  return f;
}

std::string to_dot(const HasseDiagram& h, const std::string& prefix) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box, style=rounded];\n";
  for (int v = 0; v < h.size(); ++v) {
    os << "  v" << v << " [label=\"" << format_point_set(h.vertices[v], prefix)
       << "\"];\n";
  }
  for (auto [u, v] : h.arcs) os << "  v" << u << " -> v" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace ordspace
