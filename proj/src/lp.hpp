// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

namespace polycal::detail {

struct LpResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::infeasible;
  double value = 0.0;
  Eigen::VectorXd x;
};

/// Dense two-phase simplex with Bland's rule: maximize c^T x subject to
/// A x = b, x >= 0. Meant for the tiny programs of the geometry validator.
LpResult maximize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                  double eps = 1e-12);

}  // namespace polycal::detail
