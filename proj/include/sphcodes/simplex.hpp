#pragma once

#include <Eigen/Dense>

namespace sphcodes {

enum class LpStatus { optimal, unbounded, iteration_limit };

struct LpSolution {
  LpStatus status = LpStatus::iteration_limit;
  Eigen::VectorXd x;     // primal optimum
  Eigen::VectorXd dual;  // shadow prices of the <= rows (>= 0)
  double objective = 0.0;
  int iterations = 0;
};

/// Revised simplex for
///   maximize c^T x  subject to  A x <= b,  x >= 0,  with b >= 0,
/// started from the slack basis and pivoted with Bland's rule (smallest
/// improving index enters, smallest basic index leaves on ratio ties), so it
/// terminates without cycling and is fully deterministic.
LpSolution simplex_maximize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                            double eps = 1e-11, int max_iterations = 100000);

}  // namespace sphcodes
