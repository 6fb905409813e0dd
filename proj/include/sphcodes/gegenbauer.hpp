#pragma once

#include <vector>

#include "sphcodes/codes.hpp"
#include "sphcodes/polynomial.hpp"

namespace sphcodes {

/// G_k^{(n)} with exact rational coefficients, normalized so G_k(1) = 1:
///   G_0 = 1, G_1 = r,
///   G_k = ((2k + n - 4) r G_{k-1} - (k - 1) G_{k-2}) / (k + n - 3).
/// Requires n >= 2 whenever the recursion is needed (k >= 2); G_0 and G_1
/// exist for every n >= 1. Results are memoized process-wide (thread safe).
Polynomial gegenbauer(int n, int k);

/// G_0(r), ..., G_kmax(r) in floating point, by the same recursion.
std::vector<double> gegenbauer_values(int n, int kmax, double r);

/// Coordinates of a polynomial in the basis {G_k^{(n)}}.
struct GegenbauerExpansion {
  int n = 2;
  std::vector<Rational> a;

  /// sum_k a_k G_k^{(n)}
  Polynomial to_polynomial() const;
  /// sum_k a_k G_k(r) evaluated by the floating recursion.
  double evaluate(double r) const;
};

/// Unique expansion by back-substitution against the triangular basis change.
GegenbauerExpansion expand(const Polynomial& p, int n);

/// int_{-1}^{1} G_j G_k (1 - r^2)^((n-3)/2) dr, computed as
/// int_0^pi G_j(cos t) G_k(cos t) sin^(n-2)(t) dt with order-doubling
/// Gauss-Legendre. Exactly 0 when j + k is odd. Throws NumericalError if the
/// estimates have not settled to 1e-12 by order 4096.
double orthogonality_integral(int n, int j, int k);

/// sum_{i,j} G_k^{(d)}(<x_i, x_j>) over the code's Gram matrix, n = code.d.
double kernel_sum(const ClassicalCode& code, int k);

}  // namespace sphcodes
