#pragma once

#include <functional>
#include <vector>

namespace sphcodes {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int order);

/// Integral of f over [a, b] with a fixed-order Gauss-Legendre rule.
double integrate(const GaussLegendreRule& rule, const std::function<double(double)>& f, double a, double b);

struct AdaptiveQuadratureResult {
  double value = 0.0;
  double previous = 0.0;  // estimate at half the final order
  int order = 0;
  bool converged = false;
};

/// Doubles the order from `start_order` until successive estimates agree to
/// `tol * max(1, |value|)` or `max_order` is reached.
AdaptiveQuadratureResult integrate_doubling(const std::function<double(double)>& f, double a, double b,
                                            double tol = 1e-12, int start_order = 16, int max_order = 4096);

}  // namespace sphcodes
