#include "sphcodes/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "sphcodes/errors.hpp"

namespace sphcodes {

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1) throw DomainError("Gauss-Legendre order must be positive");
  GaussLegendreRule rule;
  rule.nodes.assign(static_cast<std::size_t>(order), 0.0);
  rule.weights.assign(static_cast<std::size_t>(order), 0.0);
  if (order == 1) {
    rule.weights[0] = 2.0;
    return rule;
  }
  // P_order(x) and its derivative by the three-term recurrence.
  auto legendre = [order](double x, double& derivative) {
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    derivative = order * (x * p1 - p0) / (x * x - 1.0);
    return p1;
  };
  const int half = order / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double dx = legendre(x, dp) / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    legendre(x, dp);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(order - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(order - 1 - i)] = w;
  }
  if (order % 2 == 1) {
    double dp = 0.0;
    legendre(0.0, dp);
    rule.weights[static_cast<std::size_t>(half)] = 2.0 / (dp * dp);
  }
  return rule;
}

double integrate(const GaussLegendreRule& rule, const std::function<double(double)>& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double center = 0.5 * (b + a);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(center + half * rule.nodes[i]);
  return half * sum;
}

AdaptiveQuadratureResult integrate_doubling(const std::function<double(double)>& f, double a, double b, double tol,
                                            int start_order, int max_order) {
  AdaptiveQuadratureResult result;
  result.order = start_order;
  result.value = integrate(gauss_legendre(start_order), f, a, b);
  while (result.order < max_order) {
    result.previous = result.value;
    result.order *= 2;
    result.value = integrate(gauss_legendre(result.order), f, a, b);
    if (std::fabs(result.value - result.previous) < tol * std::max(1.0, std::fabs(result.value))) {
      result.converged = true;
      return result;
    }
  }
  return result;
}

}  // namespace sphcodes
