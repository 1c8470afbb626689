#pragma once

#include "ordspace/rational.hpp"

#include <Eigen/Core>

#include <utility>

namespace ordspace {

/// Determinant by fraction-free (Bareiss) elimination. Every division is
/// exact for integer-valued input; over rationals it is exact anyway.
template <typename Scalar>
Scalar bareiss_determinant(Matrix<Scalar> m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar sign(1);
  Scalar previous(1);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k) == Scalar(0)) ++swap;
      if (swap == n) return Scalar(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// G = L * diag(D) * L^T with L unit lower triangular, no pivoting. A zero
/// pivot is accepted only if the rest of its column is zero too, so the
/// factorization exists exactly for positive semidefinite input (and some
/// indefinite input, which shows up as a negative entry of D).
template <typename Scalar>
struct LdltResult {
  Matrix<Scalar> lower;
  Vector<Scalar> diagonal;
  bool exists = false;

  bool positive_semidefinite() const {
    if (!exists) return false;
    for (Eigen::Index i = 0; i < diagonal.size(); ++i) {
      if (diagonal(i) < Scalar(0)) return false;
    }
    return true;
  }

  Eigen::Index rank() const {
    Eigen::Index r = 0;
    for (Eigen::Index i = 0; i < diagonal.size(); ++i) r += diagonal(i) != Scalar(0);
    return r;
  }
};

template <typename Scalar>
LdltResult<Scalar> ldlt_exact(const Matrix<Scalar>& g) {
  const Eigen::Index n = g.rows();
  LdltResult<Scalar> out;
  out.lower = Matrix<Scalar>::Identity(n, n);
  out.diagonal = Vector<Scalar>::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    Scalar dj = g(j, j);
    for (Eigen::Index k = 0; k < j; ++k) dj -= out.lower(j, k) * out.lower(j, k) * out.diagonal(k);
    out.diagonal(j) = dj;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      Scalar v = g(i, j);
      for (Eigen::Index k = 0; k < j; ++k) v -= out.lower(i, k) * out.lower(j, k) * out.diagonal(k);
      if (dj == Scalar(0)) {
        if (v != Scalar(0)) return out;
        out.lower(i, j) = Scalar(0);
      } else {
        out.lower(i, j) = v / dj;
      }
    }
  }
  out.exists = true;
  return out;
}

}  // namespace ordspace
