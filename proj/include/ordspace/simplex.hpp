#pragma once

#include "ordspace/errors.hpp"
#include "ordspace/rational.hpp"

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <vector>

namespace ordspace {

/// Comparison policy for the simplex kernel: exact for rationals, a small
/// absolute tolerance for floating point.
template <typename Scalar>
struct PivotTolerance {
  static bool positive(const Scalar& x) { return x > Scalar(0); }
  static bool negative(const Scalar& x) { return x < Scalar(0); }
  static bool zero(const Scalar& x) { return x == Scalar(0); }
};

template <>
struct PivotTolerance<double> {
  static constexpr double eps = 1e-10;
  static bool positive(double x) { return x > eps; }
  static bool negative(double x) { return x < -eps; }
  static bool zero(double x) { return std::abs(x) <= eps; }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

template <typename Scalar>
struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Scalar objective{};
  Vector<Scalar> x;
};

/// maximize c.x subject to rows (<=, >=, =) and x >= 0.
///
/// Dense two-phase tableau simplex with Bland's rule, so it terminates on
/// degenerate problems. Intended for the tiny exact programs in this
/// library (tens of rows and columns), not as a general-purpose solver.
template <typename Scalar>
class LinearProgram {
 public:
  enum class Sense { LessEqual, GreaterEqual, Equal };

  explicit LinearProgram(int num_vars) : num_vars_(num_vars), objective_(Vector<Scalar>::Zero(num_vars)) {}

  int num_vars() const { return num_vars_; }
  int num_constraints() const { return static_cast<int>(rows_.size()); }

  void add_constraint(const Vector<Scalar>& coeffs, Sense sense, const Scalar& rhs) {
    if (coeffs.size() != num_vars_) throw ValidationError("constraint has wrong width");
    rows_.push_back({coeffs, sense, rhs});
  }

  void set_objective(const Vector<Scalar>& c) {
    if (c.size() != num_vars_) throw ValidationError("objective has wrong width");
    objective_ = c;
  }

  LpResult<Scalar> maximize() const;

 private:
  struct Row {
    Vector<Scalar> coeffs;
    Sense sense;
    Scalar rhs;
  };

  int num_vars_;
  Vector<Scalar> objective_;
  std::vector<Row> rows_;
};

namespace detail {

template <typename Scalar>
class Tableau {
 public:
  using Tol = PivotTolerance<Scalar>;

  Tableau(Matrix<Scalar> t, std::vector<int> basis) : t_(std::move(t)), basis_(std::move(basis)) {}

  Matrix<Scalar>& table() { return t_; }
  std::vector<int>& basis() { return basis_; }

  void pivot(Eigen::Index r, Eigen::Index c) {
    const Scalar p = t_(r, c);
    t_.row(r) /= p;
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == r || Tol::zero(t_(i, c))) continue;
      const Scalar factor = t_(i, c);
      t_.row(i) -= factor * t_.row(r);
    }
    basis_[static_cast<std::size_t>(r)] = static_cast<int>(c);
  }

  // Objective row is the last row, holding reduced costs for maximization
  // (entering candidates have negative entries). Columns with `allowed`
  // false never enter. Returns false if unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    const Eigen::Index m = t_.rows() - 1;
    const Eigen::Index rhs = t_.cols() - 1;
    while (true) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < rhs; ++j) {
        if (allowed[static_cast<std::size_t>(j)] && Tol::negative(t_(m, j))) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Scalar best{};
      for (Eigen::Index i = 0; i < m; ++i) {
        if (!Tol::positive(t_(i, enter))) continue;
        const Scalar ratio = t_(i, rhs) / t_(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

 private:
  Matrix<Scalar> t_;
  std::vector<int> basis_;
};

}  // namespace detail

template <typename Scalar>
LpResult<Scalar> LinearProgram<Scalar>::maximize() const {
  using Tol = PivotTolerance<Scalar>;
  const int m = num_constraints();
  const int n = num_vars_;

  // Column layout: [original | slack/surplus | artificial | rhs].
  int num_slack = 0;
  int num_art = 0;
  std::vector<Row> rows = rows_;
  for (auto& row : rows) {
    if (Tol::negative(row.rhs)) {
      row.coeffs = -row.coeffs;
      row.rhs = -row.rhs;
      if (row.sense == Sense::LessEqual) {
        row.sense = Sense::GreaterEqual;
      } else if (row.sense == Sense::GreaterEqual) {
        row.sense = Sense::LessEqual;
      }
    }
    if (row.sense != Sense::Equal) ++num_slack;
    if (row.sense != Sense::LessEqual) ++num_art;
  }
  const int cols = n + num_slack + num_art;
  Matrix<Scalar> t = Matrix<Scalar>::Zero(m + 1, cols + 1);
  std::vector<int> basis(static_cast<std::size_t>(m));
  int slack = n;
  int art = n + num_slack;
  for (int i = 0; i < m; ++i) {
    const Row& row = rows[static_cast<std::size_t>(i)];
    t.row(i).head(n) = row.coeffs.transpose();
    t(i, cols) = row.rhs;
    if (row.sense == Sense::LessEqual) {
      t(i, slack) = Scalar(1);
      basis[static_cast<std::size_t>(i)] = slack++;
    } else {
      if (row.sense == Sense::GreaterEqual) t(i, slack++) = Scalar(-1);
      t(i, art) = Scalar(1);
      basis[static_cast<std::size_t>(i)] = art++;
    }
  }

  detail::Tableau<Scalar> tab(std::move(t), std::move(basis));
  auto& tt = tab.table();
  std::vector<bool> allowed(static_cast<std::size_t>(cols), true);

  // Phase 1: maximize -(sum of artificials).
  if (num_art > 0) {
    tt.row(m).setZero();
    for (int j = n + num_slack; j < cols; ++j) tt(m, j) = Scalar(1);
    for (int i = 0; i < m; ++i) {
      if (tab.basis()[static_cast<std::size_t>(i)] >= n + num_slack) tt.row(m) -= tt.row(i);
    }
    if (!tab.optimize(allowed)) throw SolverFailure("phase 1 reported unbounded");
    if (Tol::negative(tt(m, cols)) || Tol::positive(tt(m, cols))) {
      return {LpStatus::Infeasible, Scalar(0), Vector<Scalar>()};
    }
    // Drive artificials out of the basis where possible.
    for (int i = 0; i < m; ++i) {
      if (tab.basis()[static_cast<std::size_t>(i)] < n + num_slack) continue;
      for (int j = 0; j < n + num_slack; ++j) {
        if (!Tol::zero(tt(i, j))) {
          tab.pivot(i, j);
          break;
        }
      }
    }
    for (int j = n + num_slack; j < cols; ++j) allowed[static_cast<std::size_t>(j)] = false;
  }

  // Phase 2.
  tt.row(m).setZero();
  tt.row(m).head(n) = -objective_.transpose();
  for (int i = 0; i < m; ++i) {
    const int b = tab.basis()[static_cast<std::size_t>(i)];
    if (!Tol::zero(tt(m, b))) {
      const Scalar factor = tt(m, b);
      tt.row(m) -= factor * tt.row(i);
    }
  }
  if (!tab.optimize(allowed)) return {LpStatus::Unbounded, Scalar(0), Vector<Scalar>()};

  LpResult<Scalar> out;
  out.status = LpStatus::Optimal;
  out.objective = tt(m, cols);
  out.x = Vector<Scalar>::Zero(n);
  for (int i = 0; i < m; ++i) {
    const int b = tab.basis()[static_cast<std::size_t>(i)];
    if (b < n) out.x(b) = tt(i, cols);
  }
  return out;
}

}  // namespace ordspace
