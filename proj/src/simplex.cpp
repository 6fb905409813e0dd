#include "sphcodes/simplex.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "sphcodes/errors.hpp"

namespace sphcodes {

// Revised simplex over [A | I]. The basis has only `rows` columns, so it is
// refactored from scratch every iteration instead of updating a tableau; this
// keeps round-off from accumulating over long degenerate pivot sequences.
LpSolution simplex_maximize(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c, double eps,
                            int max_iterations) {
  const Eigen::Index rows = A.rows();
  const Eigen::Index vars = A.cols();
  if (b.size() != rows || c.size() != vars) throw ShapeError("simplex: inconsistent LP dimensions");
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!(b(i) >= 0.0)) throw DomainError("simplex: right-hand side must be nonnegative");
  }
  const Eigen::Index cols = vars + rows;
  auto column = [&](Eigen::Index j) -> Eigen::VectorXd {
    if (j < vars) return A.col(j);
    return Eigen::VectorXd::Unit(rows, j - vars);
  };
  auto cost = [&](Eigen::Index j) { return j < vars ? c(j) : 0.0; };

  std::vector<Eigen::Index> basis(static_cast<std::size_t>(rows));
  for (Eigen::Index i = 0; i < rows; ++i) basis[static_cast<std::size_t>(i)] = vars + i;
  std::vector<bool> in_basis(static_cast<std::size_t>(cols), false);
  for (auto j : basis) in_basis[static_cast<std::size_t>(j)] = true;

  LpSolution sol;
  Eigen::MatrixXd B(rows, rows);
  Eigen::VectorXd cb(rows), xb(rows), pi(rows);
  for (sol.iterations = 0; sol.iterations < max_iterations; ++sol.iterations) {
    for (Eigen::Index i = 0; i < rows; ++i) {
      B.col(i) = column(basis[static_cast<std::size_t>(i)]);
      cb(i) = cost(basis[static_cast<std::size_t>(i)]);
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
    xb = lu.solve(b);
    pi = lu.transpose().solve(cb);

    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < cols; ++j) {
      if (in_basis[static_cast<std::size_t>(j)]) continue;
      const double reduced = j < vars ? c(j) - pi.dot(A.col(j)) : -pi(j - vars);
      if (reduced > eps) {
        enter = j;
        break;
      }
    }
    if (enter < 0) {
      sol.status = LpStatus::optimal;
      break;
    }
    const Eigen::VectorXd dir = lu.solve(column(enter));
    double best_ratio = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (dir(i) > eps) best_ratio = std::min(best_ratio, std::max(0.0, xb(i)) / dir(i));
    }
    Eigen::Index leave = -1;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (dir(i) <= eps) continue;
      if (std::max(0.0, xb(i)) / dir(i) > best_ratio + eps * (1.0 + best_ratio)) continue;
      if (leave < 0 || basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)]) leave = i;
    }
    if (leave < 0) {
      sol.status = LpStatus::unbounded;
      return sol;
    }
    in_basis[static_cast<std::size_t>(basis[static_cast<std::size_t>(leave)])] = false;
    in_basis[static_cast<std::size_t>(enter)] = true;
    basis[static_cast<std::size_t>(leave)] = enter;
  }
  if (sol.status != LpStatus::optimal) return sol;

  sol.x = Eigen::VectorXd::Zero(vars);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Eigen::Index v = basis[static_cast<std::size_t>(i)];
    if (v < vars) sol.x(v) = std::max(0.0, xb(i));
  }
  sol.dual = pi.cwiseMax(0.0);
  sol.objective = c.dot(sol.x);
  return sol;
}

}  // namespace sphcodes
