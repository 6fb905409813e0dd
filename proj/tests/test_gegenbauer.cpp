#include <doctest.h>

#include <cmath>
#include <numbers>

#include "sphcodes/catalog.hpp"
#include "sphcodes/errors.hpp"
#include "sphcodes/gegenbauer.hpp"
#include "support/generators.hpp"

using namespace sphcodes;
using namespace sphcodes::testing;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

// Independent oracle: classical C_k^lambda by its own three-term recurrence,
// lambda = (n - 2) / 2, divided by C_k^lambda(1).
double classical_gegenbauer(int n, int k, double r) {
  const double lambda = (n - 2) / 2.0;
  auto c = [&](double x) {
    double prev = 1.0, cur = 2 * lambda * x;
    if (k == 0) return prev;
    for (int j = 2; j <= k; ++j) {
      const double next = (2 * x * (j + lambda - 1) * cur - (j + 2 * lambda - 2) * prev) / j;
      prev = cur;
      cur = next;
    }
    return cur;
  };
  return c(r) / c(1.0);
}

}  // namespace

TEST_CASE("low-degree examples") {
  CHECK(gegenbauer(3, 2) == Polynomial({q(-1, 2), 0, q(3, 2)}));
  CHECK(gegenbauer(2, 2) == Polynomial({-1, 0, 2}));
  CHECK(gegenbauer(4, 2) == Polynomial({q(-1, 3), 0, q(4, 3)}));
  CHECK(gegenbauer(8, 0) == Polynomial::constant(1));
  CHECK(gegenbauer(8, 1) == Polynomial({0, 1}));
  CHECK(gegenbauer(1, 1) == Polynomial({0, 1}));
  CHECK_THROWS_AS(gegenbauer(1, 2), DomainError);
  CHECK_THROWS_AS(gegenbauer(0, 0), DomainError);
  CHECK_THROWS_AS(gegenbauer(3, -1), DomainError);
}

TEST_CASE("Chebyshev and Legendre special cases") {
  for (int k = 0; k <= 15; ++k) {
    for (double r : {-1.0, -0.7, -0.2, 0.0, 0.3, 0.55, 0.9, 1.0}) {
      CHECK(gegenbauer(2, k)(r) == doctest::Approx(std::cos(k * std::acos(r))).epsilon(1e-12).scale(1.0));
      CHECK(gegenbauer(3, k)(r) == doctest::Approx(std::legendre(static_cast<unsigned>(k), r)).epsilon(1e-12).scale(1.0));
    }
  }
}

TEST_CASE("property: agreement with the classical normalization") {
  Rng rng(51);
  for (int n = 3; n <= 16; ++n) {
    for (int k = 0; k <= 20; ++k) {
      const Polynomial g = gegenbauer(n, k);
      CHECK(g(Rational(1)) == 1);
      CHECK(g.degree() == k);
      for (int i = 0; i <= k; ++i) {
        if ((i + k) % 2 == 1) CHECK(g.coefficient(i) == 0);  // parity
      }
      for (int t = 0; t < 5; ++t) {
        const double r = uniform(rng, -1, 1);
        const double expect = classical_gegenbauer(n, k, r);
        CHECK(g(r) == doctest::Approx(expect).epsilon(1e-10).scale(1.0));
        const auto vals = gegenbauer_values(n, k, r);
        CHECK(vals.back() == doctest::Approx(expect).epsilon(1e-10).scale(1.0));
        CHECK(std::fabs(g(r)) <= 1.0 + 1e-12);
      }
    }
  }
}

TEST_CASE("orthogonality") {
  CHECK(orthogonality_integral(2, 1, 1) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-12));
  CHECK(orthogonality_integral(5, 2, 3) == 0.0);
  for (int k = 0; k <= 10; ++k) {
    CHECK(orthogonality_integral(3, k, k) == doctest::Approx(2.0 / (2 * k + 1)).epsilon(1e-11));
  }
  for (int n : {2, 3, 4, 8}) {
    for (int j = 0; j <= 8; ++j) {
      for (int k = 0; k <= 8; ++k) {
        const double v = orthogonality_integral(n, j, k);
        if (j == k) CHECK(v > 0.0);
        else CHECK(std::fabs(v) <= 1e-11);
      }
    }
  }
}

TEST_CASE("expansion round trip") {
  const GegenbauerExpansion e = expand(Polynomial({0, 0, 1}), 3);  // r^2 = 1/3 G_0 + 2/3 G_2
  CHECK(e.a == std::vector<Rational>{q(1, 3), 0, q(2, 3)});
  CHECK(e.to_polynomial() == Polynomial({0, 0, 1}));
  CHECK(expand(Polynomial(), 4).a.empty());

  Rng rng(52);
  for (int t = 0; t < 100; ++t) {
    const int n = uniform_int(rng, 2, 12);
    const Polynomial p = random_polynomial(rng, 10);
    const GegenbauerExpansion ex = expand(p, n);
    CHECK(ex.n == n);
    CHECK(ex.to_polynomial() == p);
    const double r = uniform(rng, -1, 1);
    CHECK(ex.evaluate(r) == doctest::Approx(p(r)).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("kernel sums on catalog codes") {
  // The kissing configuration in R^8 is a spherical 7-design, so sum G_k = 0 for 1 <= k <= 7.
  const ClassicalCode e8 = gen_kissing(8);
  CHECK(kernel_sum(e8, 0) == doctest::Approx(240.0 * 240.0));
  for (int k = 1; k <= 7; ++k) CHECK(std::fabs(kernel_sum(e8, k)) <= 1e-7);
  CHECK(kernel_sum(gen_simplex(3), 1) == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("property: kernel sums are nonnegative") {
  Rng rng(53);
  for (int t = 0; t < 500; ++t) {
    const int d = uniform_int(rng, 2, 8), n = uniform_int(rng, 1, 20), k = uniform_int(rng, 0, 12);
    const ClassicalCode code = random_classical_code(rng, d, n, Angle::from_pi_fraction(q(1, 2)));
    const double s = kernel_sum(code, k);
    CHECK(s >= -1e-9 * n * n);
    if (k == 1) CHECK(s == doctest::Approx(code.points.colwise().sum().squaredNorm()).epsilon(1e-10).scale(1.0));
  }
}
