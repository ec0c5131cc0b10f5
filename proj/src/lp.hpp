#pragma once

#include <Eigen/Dense>

namespace concavlab::detail {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status;
    Eigen::VectorXd x;
    double value = 0.0;
};

/// maximize c.x subject to A x <= b, x >= 0. Dense two-phase simplex with
/// Bland-style tie breaking; sized for the handful of variables used here.
LpResult solve_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                  double eps = 1e-11);

} // namespace concavlab::detail
