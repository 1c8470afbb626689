#pragma once

// Independent reference computations used by the tests. None of these call
// into the library code they are checked against.

#include "ordspace/core.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace oracle {

inline long long factorial(int m) {
  long long f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// Ordered set partitions of an m-set, by inclusion-exclusion over surjections.
inline long long fubini(int m) {
  long long total = 0;
  for (int k = 0; k <= m; ++k) {
    // k! S(m, k) = sum_j (-1)^j C(k, j) (k - j)^m
    long long surj = 0;
    long long binom = 1;
    for (int j = 0; j <= k; ++j) {
      long long p = 1;
      for (int t = 0; t < m; ++t) p *= (k - j);
      surj += (j % 2 ? -1 : 1) * binom * p;
      binom = binom * (k - j) / (j + 1);
    }
    total += surj;
  }
  return total;
}

// Number of cycles of the permutation sigma induces on unordered pairs.
inline int pair_cycles(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (seen[i][j]) continue;
      ++cycles;
      int a = i, b = j;
      while (!seen[std::min(a, b)][std::max(a, b)]) {
        seen[std::min(a, b)][std::max(a, b)] = true;
        a = sigma[a];
        b = sigma[b];
      }
    }
  }
  return cycles;
}

// Burnside: an automorphism of a finite total preorder fixes every level,
// so sigma fixes exactly the preorders constant on its pair cycles.
inline long long burnside_all(int n) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  long long sum = 0;
  do {
    sum += fubini(pair_cycles(sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum / factorial(n);
}

// With all pair ranks distinct only the identity fixes a labelling (n >= 3).
inline long long burnside_injective(int n) {
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  const int m = n * (n - 1) / 2;
  long long sum = 0;
  do {
    if (pair_cycles(sigma) == m) sum += factorial(m);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum / factorial(n);
}

inline ordspace::Rational power(const ordspace::Rational& a, int e) {
  ordspace::Rational out = 1;
  for (int i = 0; i < e; ++i) out *= a;
  return out;
}

inline int cmp(int a, int b) { return (a > b) - (a < b); }

// Minimum over bijections of the number of ordered quadruples whose
// comparison changes, divided by 8, straight from the definition.
inline long long quadruple_distance(const ordspace::OrdinalSpace& a, const ordspace::OrdinalSpace& b) {
  const int n = a.size();
  std::vector<int> f(n);
  std::iota(f.begin(), f.end(), 0);
  long long best = -1;
  do {
    long long raw = 0;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          for (int w = 0; w < n; ++w)
            raw += cmp(a.rank(x, y), a.rank(z, w)) != cmp(b.rank(f[x], f[y]), b.rank(f[z], f[w]));
    if (best < 0 || raw < best) best = raw;
  } while (std::next_permutation(f.begin(), f.end()));
  return best / 8;
}

// Squared area of a triangle with squared sides p, q, r (Heron, expanded).
inline double heron16(double p, double q, double r) { return 2 * (p * q + q * r + r * p) - (p * p + q * q + r * r); }

// Floating Gram test: a squared-distance matrix is Euclidean iff the Gram
// matrix anchored at point 0 is positive semidefinite.
inline bool gram_psd(const Eigen::MatrixXd& sq, double tol = 1e-9) {
  const Eigen::Index n = sq.rows();
  if (n <= 1) return true;
  Eigen::MatrixXd g(n - 1, n - 1);
  for (Eigen::Index i = 1; i < n; ++i)
    for (Eigen::Index j = 1; j < n; ++j) g(i - 1, j - 1) = 0.5 * (sq(0, i) + sq(0, j) - sq(i, j));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  return es.eigenvalues().minCoeff() >= -tol * std::max(1.0, g.norm());
}

}  // namespace oracle
