// SPDX-License-Identifier: Apache-2.0
#include "lp.hpp"

#include <limits>
#include <vector>

namespace polycal::detail {
namespace {

struct Tableau {
  Eigen::MatrixXd t;       // rows = constraints, last column = rhs
  std::vector<int> basis;  // basic variable per row
  int num_vars;            // structural + artificial

  double rhs(int i) const { return t(i, num_vars); }

  void pivot(int row, int col) {
    t.row(row) /= t(row, col);
    for (int i = 0; i < t.rows(); ++i) {
      if (i == row) continue;
      const double f = t(i, col);
      if (f != 0.0) t.row(i) -= f * t.row(row);
    }
    basis[row] = col;
  }

  // Returns false when unbounded.
  bool optimize(const Eigen::VectorXd& cost, int allowed_cols, double eps) {
    const int m = static_cast<int>(t.rows());
    for (int guard = 0; guard < 100000; ++guard) {
      int enter = -1;
      for (int j = 0; j < allowed_cols; ++j) {
        double reduced = cost(j);
        for (int i = 0; i < m; ++i) reduced -= cost(basis[i]) * t(i, j);
        if (reduced > eps) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        if (t(i, enter) <= eps) continue;
        const double ratio = rhs(i) / t(i, enter);
        if (ratio < best - eps || (ratio <= best + eps && leave >= 0 && basis[i] < basis[leave])) {
          best = ratio;
          leave = i;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
    return true;
  }

  double objective(const Eigen::VectorXd& cost) const {
    double v = 0.0;
    for (int i = 0; i < t.rows(); ++i) v += cost(basis[i]) * rhs(i);
    return v;
  }
};

}  // namespace

LpResult maximize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                  double eps) {
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  Tableau tab;
  tab.num_vars = n + m;
  tab.t = Eigen::MatrixXd::Zero(m, n + m + 1);
  tab.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    const double s = b(i) < 0 ? -1.0 : 1.0;
    tab.t.row(i).head(n) = s * A.row(i);
    tab.t(i, n + i) = 1.0;
    tab.t(i, n + m) = s * b(i);
    tab.basis[i] = n + i;
  }

  LpResult result;
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m);
  phase1.tail(m).setConstant(-1.0);
  tab.optimize(phase1, n + m, eps);
  if (tab.objective(phase1) < -1e-9) return result;

  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < n) continue;
    for (int j = 0; j < n; ++j) {
      if (std::abs(tab.t(i, j)) > 1e-9) {
        tab.pivot(i, j);
        break;
      }
    }
  }

  Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(n + m);
  phase2.head(n) = c;
  if (!tab.optimize(phase2, n, eps)) {
    result.status = LpResult::Status::unbounded;
    return result;
  }
  result.status = LpResult::Status::optimal;
  result.x = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] < n) result.x(tab.basis[i]) = tab.rhs(i);
  result.value = c.dot(result.x);
  return result;
}

}  // namespace polycal::detail
