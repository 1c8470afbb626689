#include "ordspace/euclid.hpp"

#include "ordspace/line.hpp"
#include "ordspace/linalg.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <random>

namespace ordspace {

namespace {

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  const Integer p = numerator(r);
  const Integer q = denominator(r);
  const Integer sp = isqrt(p);
  const Integer sq = isqrt(q);
  if (sp * sp != p || sq * sq != q) return std::nullopt;
  return Rational(sp, sq);
}

RationalMatrix squared_matrix(const DistanceMatrix& d) {
  return d.matrix().unaryExpr([](const Rational& x) { return Rational(x * x); });
}

// Best rational approximation with denominator <= max_den (continued fractions).
Rational best_rational(double x, long long max_den) {
  const bool negative = x < 0;
  double v = std::abs(x);
  long long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    const double a_d = std::floor(frac);
    if (a_d > 1e15) break;
    const auto a = static_cast<long long>(a_d);
    const long long h2 = a * h1 + h0;
    const long long k2 = a * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double rest = frac - a_d;
    if (rest < 1e-15) break;
    frac = 1.0 / rest;
  }
  if (k1 == 0) return Rational(0);
  Rational r{Integer(h1), Integer(k1)};
  return negative ? Rational(-r) : r;
}

Rational dyadic(double x, int bits) {
  const double scaled = std::round(std::ldexp(x, bits));
  return Rational(Integer(static_cast<long long>(scaled)), Integer(1) << bits);
}

std::vector<std::function<Rational(double)>> rounding_schemes() {
  std::vector<std::function<Rational(double)>> out;
  for (long long den : {1LL, 2LL, 3LL, 4LL, 5LL, 6LL, 8LL, 10LL, 12LL, 16LL, 24LL, 32LL, 64LL, 100LL, 1000LL}) {
    out.push_back([den](double x) { return best_rational(x, den); });
  }
  for (int bits = 8; bits <= 40; bits += 4) {
    out.push_back([bits](double x) { return dyadic(x, bits); });
  }
  return out;
}

struct PairTerm {
  int i, j, rank;
};

// Loss and gradient of a configuration under the hinge formulation on
// squared distances, with a soft normalization of the mean square to 1.
double loss_and_gradient(const Eigen::MatrixXd& x, const std::vector<PairTerm>& pairs, double margin,
                         Eigen::MatrixXd* grad) {
  const std::size_t m = pairs.size();
  std::vector<double> q(m);
  double mean = 0.0;
  for (std::size_t p = 0; p < m; ++p) {
    q[p] = (x.row(pairs[p].i) - x.row(pairs[p].j)).squaredNorm();
    mean += q[p];
  }
  mean /= static_cast<double>(m);
  std::vector<double> dq(m, 0.0);
  double loss = 0.0;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (pairs[a].rank < pairs[b].rank) {
        const double h = margin + q[a] - q[b];
        if (h > 0) {
          loss += h * h;
          dq[a] += 2 * h;
          dq[b] -= 2 * h;
        }
      } else if (pairs[a].rank == pairs[b].rank && a < b) {
        const double e = q[a] - q[b];
        loss += e * e;
        dq[a] += 2 * e;
        dq[b] -= 2 * e;
      }
    }
  }
  const double norm = mean - 1.0;
  loss += norm * norm;
  for (std::size_t p = 0; p < m; ++p) dq[p] += 2 * norm / static_cast<double>(m);
  if (grad) {
    grad->setZero(x.rows(), x.cols());
    for (std::size_t p = 0; p < m; ++p) {
      const Eigen::RowVectorXd diff = x.row(pairs[p].i) - x.row(pairs[p].j);
      grad->row(pairs[p].i) += 2 * dq[p] * diff;
      grad->row(pairs[p].j) -= 2 * dq[p] * diff;
    }
  }
  return loss;
}

// Translate point 0 to the origin, rotate into a lower-triangular frame,
// scale so point 1 sits at distance 1.
Eigen::MatrixXd normalize_pose(const Eigen::MatrixXd& x) {
  const Eigen::Index n = x.rows();
  const Eigen::Index d = x.cols();
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(n, d);
  if (n < 2) return y;
  Eigen::MatrixXd rel = (x.rowwise() - x.row(0)).bottomRows(n - 1).transpose();  // d x (n-1)
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(rel);
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  y.bottomRows(n - 1) = r.transpose();
  // Make the first nonzero entry of every axis positive.
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index i = 1; i < n; ++i) {
      if (std::abs(y(i, c)) > 1e-12) {
        if (y(i, c) < 0) y.col(c) *= -1;
        break;
      }
    }
  }
  const double scale = y.row(1).norm();
  if (scale > 1e-12) y /= scale;
  return y;
}

EuclidWitness rational_witness(const RationalMatrix& coords, const std::string& method) {
  EuclidWitness w;
  w.dim = static_cast<int>(coords.cols());
  w.coeffs = coords;
  w.radicands = RationalVector::Constant(coords.cols(), Rational(1));
  w.approx = coords.unaryExpr([](const Rational& v) { return to_double(v); });
  w.method = method;
  return w;
}

std::optional<EuclidWitness> rationalize(const OrdinalSpace& s, const Eigen::MatrixXd& config, int dim) {
  const Eigen::MatrixXd y = normalize_pose(config);
  const int n = s.size();
  const auto schemes = rounding_schemes();

  // Route 1: snap coordinates to a grid.
  for (const auto& round : schemes) {
    RationalMatrix c(n, dim);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < dim; ++j) c(i, j) = round(y(i, j));
    }
    EuclidWitness w = rational_witness(c, "grid");
    if (verify_witness(s, w)) {
      w.verified = true;
      return w;
    }
  }

  // Route 2: snap class-averaged squared distances and rebuild exactly.
  std::vector<double> mean(s.levels() + 1, 0.0);
  std::vector<int> count(s.levels() + 1, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      mean[s.rank(i, j)] += (y.row(i) - y.row(j)).squaredNorm();
      ++count[s.rank(i, j)];
    }
  }
  const double top = mean[s.levels()] / count[s.levels()];
  if (!(top > 0)) return std::nullopt;
  for (const auto& round : schemes) {
    std::vector<Rational> level(s.levels() + 1, Rational(0));
    bool increasing = true;
    for (int r = 1; r <= s.levels(); ++r) {
      level[r] = round(mean[r] / count[r] / top);
      if (!(level[r] > level[r - 1])) increasing = false;
    }
    if (!increasing) continue;
    RationalMatrix sq(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) sq(i, j) = level[s.rank(i, j)];
    }
    auto w = gram_embedding(sq);
    if (!w || w->dim > dim) continue;
    if (w->dim < dim) {
      RationalMatrix c = RationalMatrix::Zero(n, dim);
      c.leftCols(w->dim) = w->coeffs;
      RationalVector r = RationalVector::Constant(dim, Rational(1));
      r.head(w->dim) = w->radicands;
      w->coeffs = c;
      w->radicands = r;
      Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, dim);
      a.leftCols(w->dim) = w->approx;
      w->approx = a;
      w->dim = dim;
    }
    if (verify_witness(s, *w)) {
      w->verified = true;
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

CMResult cayley_menger_squared(const RationalMatrix& squared, std::span<const Point> points) {
  const auto m = static_cast<Eigen::Index>(points.size());
  RationalMatrix b = RationalMatrix::Zero(m + 1, m + 1);
  for (Eigen::Index i = 1; i <= m; ++i) {
    b(0, i) = Rational(1);
    b(i, 0) = Rational(1);
    for (Eigen::Index j = 1; j <= m; ++j) b(i, j) = squared(points[i - 1], points[j - 1]);
  }
  CMResult out;
  out.k = static_cast<int>(m) - 1;
  out.value = bareiss_determinant(b);
  out.sign = out.value.sign();
  return out;
}

CMResult cayley_menger(const DistanceMatrix& d, std::span<const Point> points) {
  return cayley_menger_squared(squared_matrix(d), points);
}

CMResult cayley_menger(const DistanceMatrix& d) {
  std::vector<Point> all(d.size());
  std::iota(all.begin(), all.end(), 0);
  return cayley_menger(d, all);
}

BlumenthalResult blumenthal_check(const DistanceMatrix& d) {
  const RationalMatrix sq = squared_matrix(d);
  BlumenthalResult out;
  std::vector<Point> prefix{0};
  for (int k = 1; k < d.size(); ++k) {
    prefix.push_back(k);
    auto cm = cayley_menger_squared(sq, prefix);
    const int expected = (k + 1) % 2 == 0 ? 1 : -1;
    out.determinants.push_back(cm);
    if (cm.sign != expected) {
      out.holds = false;
      out.failing_k = k;
      return out;
    }
  }
  return out;
}

bool EuclidWitness::rational_coordinates() const {
  for (Eigen::Index j = 0; j < radicands.size(); ++j) {
    if (radicands(j) != 1) return false;
  }
  return true;
}

RationalMatrix EuclidWitness::squared_distances() const {
  const Eigen::Index n = coeffs.rows();
  RationalMatrix sq = RationalMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index k = i + 1; k < n; ++k) {
      Rational total(0);
      for (Eigen::Index j = 0; j < coeffs.cols(); ++j) {
        const Rational diff = coeffs(i, j) - coeffs(k, j);
        total += diff * diff * radicands(j);
      }
      sq(i, k) = total;
      sq(k, i) = total;
    }
  }
  return sq;
}

std::optional<EuclidWitness> gram_embedding(const RationalMatrix& squared) {
  const Eigen::Index n = squared.rows();
  EuclidWitness w;
  w.method = "gram";
  if (n <= 1) {
    w.coeffs = RationalMatrix::Zero(n, 0);
    w.radicands = RationalVector(0);
    w.approx = Eigen::MatrixXd::Zero(n, 0);
    return w;
  }
  RationalMatrix g(n - 1, n - 1);
  for (Eigen::Index i = 1; i < n; ++i) {
    for (Eigen::Index j = 1; j < n; ++j) {
      g(i - 1, j - 1) = (squared(0, i) + squared(0, j) - squared(i, j)) / 2;
    }
  }
  const auto f = ldlt_exact(g);
  if (!f.positive_semidefinite()) return std::nullopt;

  std::vector<Eigen::Index> axes;
  for (Eigen::Index j = 0; j < f.diagonal.size(); ++j) {
    if (f.diagonal(j) != 0) axes.push_back(j);
  }
  const auto dim = static_cast<Eigen::Index>(axes.size());
  w.dim = static_cast<int>(dim);
  w.coeffs = RationalMatrix::Zero(n, dim);
  w.radicands = RationalVector(dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    const Eigen::Index j = axes[a];
    Rational factor(1);
    if (auto root = exact_sqrt(f.diagonal(j))) {
      factor = *root;
      w.radicands(a) = Rational(1);
    } else {
      w.radicands(a) = f.diagonal(j);
    }
    for (Eigen::Index i = 1; i < n; ++i) w.coeffs(i, a) = f.lower(i - 1, j) * factor;
  }
  w.approx = Eigen::MatrixXd(n, dim);
  for (Eigen::Index a = 0; a < dim; ++a) {
    const double root = std::sqrt(to_double(w.radicands(a)));
    for (Eigen::Index i = 0; i < n; ++i) w.approx(i, a) = to_double(w.coeffs(i, a)) * root;
  }
  return w;
}

bool verify_witness(const OrdinalSpace& s, const EuclidWitness& w) {
  if (w.size() != s.size()) return false;
  const RationalMatrix sq = w.squared_distances();
  for (int i = 0; i < s.size(); ++i) {
    for (int j = i + 1; j < s.size(); ++j) {
      if (sq(i, j) <= 0) return false;
    }
  }
  return ordinal_type(DistanceMatrix(sq)) == s;
}

EuclidWitness realize_simplex(const OrdinalSpace& s, int max_retries) {
  Rational scale(1);
  int failing = 0;
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    const DistanceMatrix d = realize_scaled(s, scale);
    const auto check = blumenthal_check(d);
    if (check.holds) {
      auto w = gram_embedding(squared_matrix(d));
      if (!w || w->dim != s.size() - 1) throw SolverFailure("Gram factorization disagrees with Blumenthal signs");
      w->method = "simplex";
      w->verified = verify_witness(s, *w);
      if (!w->verified) throw SolverFailure("simplex witness failed exact verification");
      return *w;
    }
    failing = *check.failing_k;
    scale /= 2;
  }
  throw RetryExhausted("realize_simplex: Blumenthal condition still fails at k=" + std::to_string(failing),
                       failing);
}

std::vector<std::pair<Point, Point>> dp_pairs(const OrdinalSpace& s) {
  std::vector<std::pair<Point, Point>> out;
  for (int i = 0; i < s.size(); ++i) {
    for (int j = i + 1; j < s.size(); ++j) {
      if (s.rank(i, j) == s.levels()) out.emplace_back(i, j);
    }
  }
  return out;
}

long long smallest_class_bound(long long n) {
  // floor(3n - sqrt(12n - 3)) = 3n - ceil(sqrt(12n - 3))
  return 3 * n - static_cast<long long>(ceil_sqrt(Integer(12 * n - 3)));
}

bool R2Report::diametrical_ok() const {
  for (const auto& c : clauses) {
    if (c.name == "diametrical") return c.holds;
  }
  return true;
}

R2Report check_r2_necessary(const OrdinalSpace& s) {
  if (s.size() < 2) throw ValidationError("check_r2_necessary needs at least 2 points");
  const long long n = s.size();
  const auto profile = class_profile(s);
  const auto& sz = profile.sizes;
  const int k = profile.classes();
  R2Report r;
  auto add = [&](std::string name, std::string formula, long long value, long long bound, bool applies,
                 bool holds) {
    r.clauses.push_back({std::move(name), std::move(formula), value, bound, applies, !applies || holds});
    if (applies && !holds) r.passes = false;
  };
  const auto dp = static_cast<long long>(dp_pairs(s).size());
  add("diametrical", "|DP| <= n", dp, n, true, dp <= n);
  add("top", "|delta_1| <= n", sz[0], n, true, sz[0] <= n);
  add("second", "|delta_2| <= floor(3n/2)", k >= 2 ? sz[1] : 0, 3 * n / 2, k >= 2, k >= 2 && sz[1] <= 3 * n / 2);
  const long long second_smallest = k >= 2 ? sz[k - 2] : 0;
  add("second-smallest", "7|delta_(k-1)| < 24n", second_smallest, 24 * n, k >= 2,
      7 * second_smallest < 24 * n);
  add("smallest", "|delta_k| <= floor(3n - sqrt(12n-3))", sz[k - 1], smallest_class_bound(n), true,
      sz[k - 1] <= smallest_class_bound(n));
  r.notes.push_back("necessary conditions only: passing does not imply embeddability");
  r.notes.push_back("the distinct-distance lower bound is omitted: its constant is unspecified");
  r.notes.push_back("the diametrical-pair bound rests on a proof sketch that assumes open conjectures");
  return r;
}

HeuristicResult embed_heuristic(const OrdinalSpace& s, int dim, const HeuristicOptions& options) {
  if (dim < 1) throw ValidationError("embed_heuristic needs dim >= 1");
  const int n = s.size();
  HeuristicResult out;
  if (n <= 1) {
    EuclidWitness w = rational_witness(RationalMatrix::Zero(n, dim), "grid");
    w.verified = true;
    out.witness = w;
    out.best_config = Eigen::MatrixXd::Zero(n, dim);
    return out;
  }
  std::vector<PairTerm> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.push_back({i, j, s.rank(i, j)});
  }
  const double margin = 1.0 / (2.0 * s.levels() * n);
  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  out.best_loss = std::numeric_limits<double>::infinity();

  for (int restart = 0; restart < options.restarts; ++restart) {
    out.restarts_used = restart + 1;
    Eigen::MatrixXd x(n, dim);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < dim; ++j) x(i, j) = normal(rng);
    }
    // Adam on the configuration.
    Eigen::MatrixXd m1 = Eigen::MatrixXd::Zero(n, dim);
    Eigen::MatrixXd m2 = Eigen::MatrixXd::Zero(n, dim);
    Eigen::MatrixXd grad;
    const double lr = 0.01, beta1 = 0.9, beta2 = 0.999, eps = 1e-12;
    double loss = 0.0;
    for (int it = 1; it <= options.iterations; ++it) {
      loss = loss_and_gradient(x, pairs, margin, &grad);
      if (loss < 1e-14) break;
      m1 = beta1 * m1 + (1 - beta1) * grad;
      m2 = beta2 * m2 + (1 - beta2) * grad.cwiseProduct(grad);
      const double c1 = 1 - std::pow(beta1, it);
      const double c2 = 1 - std::pow(beta2, it);
      x -= lr * ((m1 / c1).array() / ((m2 / c2).array().sqrt() + eps)).matrix();
    }
    loss = loss_and_gradient(x, pairs, margin, nullptr);
    if (loss < out.best_loss) {
      out.best_loss = loss;
      out.best_config = x;
    }
    if (auto w = rationalize(s, x, dim)) {
      out.witness = std::move(w);
      return out;
    }
  }
  return out;
}

std::string name(EmbedStatus s) {
  switch (s) {
    case EmbedStatus::Embeddable:
      return "embeddable";
    case EmbedStatus::NotEmbeddable:
      return "not-embeddable";
    case EmbedStatus::Inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

namespace {

EmbedStatus decide(const OrdinalSpace& s, int dim, const HeuristicOptions& options, int limit) {
  if (dim == 1) return embed_line(s, limit) ? EmbedStatus::Embeddable : EmbedStatus::NotEmbeddable;
  if (s.size() <= dim + 1) return EmbedStatus::Embeddable;
  if (dim == 2 && !check_r2_necessary(s).passes) return EmbedStatus::NotEmbeddable;
  return embed_heuristic(s, dim, options).witness ? EmbedStatus::Embeddable : EmbedStatus::Inconclusive;
}

}  // namespace

MengerProbe menger_probe(const OrdinalSpace& s, int dim, const HeuristicOptions& options, int limit) {
  if (dim < 1) throw ValidationError("menger_probe needs dim >= 1");
  const int n = s.size();
  if (n > limit) throw SizeLimit("menger_probe", n, limit);
  MengerProbe out;
  out.dim = dim;
  out.whole = decide(s, dim, options, limit);
  for (int size = 3; size <= std::min(n, dim + 3); ++size) {
    std::vector<Point> subset(size);
    std::iota(subset.begin(), subset.end(), 0);
    while (true) {
      ++out.subsets_checked;
      switch (decide(subspace(s, subset), dim, options, limit)) {
        case EmbedStatus::NotEmbeddable:
          out.refuted.push_back(subset);
          break;
        case EmbedStatus::Inconclusive:
          ++out.inconclusive;
          break;
        case EmbedStatus::Embeddable:
          break;
      }
      int i = size - 1;
      while (i >= 0 && subset[i] == n - size + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  out.conjecture_counterexample =
      out.whole == EmbedStatus::NotEmbeddable && out.refuted.empty() && out.inconclusive == 0;
  return out;
}

}  // namespace ordspace
