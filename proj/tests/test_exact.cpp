#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sphcodes/errors.hpp"
#include "sphcodes/polynomial.hpp"
#include "sphcodes/quadrature.hpp"
#include "sphcodes/rational.hpp"
#include "sphcodes/simplex.hpp"
#include "sphcodes/sturm.hpp"
#include "support/generators.hpp"

using namespace sphcodes;
using namespace sphcodes::testing;

namespace {

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

Polynomial linear_root(const Rational& root) { return Polynomial({-root, Rational(1)}); }

Polynomial from_roots(const std::vector<Rational>& roots) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& r : roots) p = p * linear_root(r);
  return p;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == q(1, 2));
  CHECK(parse_rational("-7") == -7);
  CHECK(parse_rational(" 0.125 ") == q(1, 8));
  CHECK(parse_rational("1e-3") == q(1, 1000));
  CHECK(parse_rational("-2.5E+2") == -250);
  CHECK(parse_rational("-4/8") == q(-1, 2));
  CHECK_THROWS_AS(parse_rational("4/-8"), DomainError);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
  CHECK(parse_rational_list("0, 1/2,-3") == std::vector<Rational>{0, q(1, 2), -3});
  CHECK(to_string(q(-6, 4)) == "-3/2");
}

TEST_CASE("exact conversions") {
  CHECK(exact_rational(0.1) != q(1, 10));
  CHECK(exact_rational(0.1).get_d() == 0.1);
  CHECK(exact_rational(-0.75) == q(-3, 4));
  CHECK(floor(q(-1, 2)) == -1);
  CHECK(floor(q(7, 2)) == 3);
  CHECK(floor(Rational(240)) == 240);
  CHECK(best_rational_within(0.3333333333333, 1e-9) == q(1, 3));
  CHECK(best_rational_within(66.5, 1e-12) == q(133, 2));
  Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const double x = uniform(rng, -100, 100);
    const Rational r = best_rational_within(x, 1e-7);
    CHECK(std::fabs(r.get_d() - x) <= 1e-7 * 1.0000001);
  }
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial x = Polynomial::monomial(1);
  const Polynomial one = Polynomial::constant(1);
  CHECK((x + one) * (x - one) == Polynomial({-1, 0, 1}));
  CHECK(Polynomial({1, 2, 0, 0}).degree() == 1);
  CHECK(Polynomial().degree() == -1);
  CHECK(Polynomial({0, 0}).is_zero());
  CHECK(Polynomial({1, 3, 2})(q(1, 2)) == 3);
  CHECK(Polynomial({1, 3, 2})(0.5) == doctest::Approx(3.0));
  CHECK(Polynomial({1, 3, 2}).derivative() == Polynomial({3, 4}));
  CHECK(Polynomial({4, 0, 2}).monic() == Polynomial({2, 0, 1}));
  CHECK(Polynomial({q(-3, 2), 0, q(5, 2)}).to_string() == "5/2*r^2 - 3/2");
  CHECK_THROWS_AS(divmod(x, Polynomial()), DomainError);
}

TEST_CASE("property: Euclidean division and gcd") {
  Rng rng(42);
  for (int t = 0; t < 200; ++t) {
    const Polynomial a = random_polynomial(rng, 8);
    Polynomial b = random_polynomial(rng, 5);
    if (b.is_zero()) b = Polynomial::constant(1);
    const auto [quot, rem] = divmod(a, b);
    CHECK(quot * b + rem == a);
    CHECK(rem.degree() < b.degree());

    const Polynomial common = random_polynomial(rng, 3);
    if (common.degree() < 1) continue;
    const Polynomial g = gcd(a * common, b * common);
    CHECK(g.leading() == 1);
    CHECK(divmod(g, common.monic()).second.is_zero());
  }
}

TEST_CASE("square-free and odd-multiplicity parts") {
  const Polynomial p = from_roots({1, 1, -2, -2, -2, 3});
  CHECK(square_free_part(p) == from_roots({1, -2, 3}));
  CHECK(odd_multiplicity_part(p) == from_roots({-2, 3}));
  CHECK(odd_multiplicity_part(from_roots({q(1, 2), q(1, 2)})) == Polynomial::constant(1));
  CHECK(odd_multiplicity_part(Rational(-3) * from_roots({5, 5, 5})) == from_roots({5}));
}

TEST_CASE("Sturm root counting: half-open intervals") {
  const SturmSequence s(from_roots({-1, 0, q(1, 2)}));
  CHECK(s.count_roots(-2, 2) == 3);
  CHECK(s.count_roots(-1, 0) == 1);  // (-1, 0] holds 0 only
  CHECK(s.count_roots(q(-3, 2), -1) == 1);
  CHECK(s.count_roots(0, q(1, 2)) == 1);
  CHECK(s.count_roots(q(1, 2), 10) == 0);
  CHECK(s.count_roots_above(-1) == 2);
  CHECK(s.variations_at_minus_infinity() - s.variations_at_plus_infinity() == 3);
  const SturmSequence none(Polynomial({1, 0, 1}));  // r^2 + 1
  CHECK(none.count_roots(-100, 100) == 0);
}

TEST_CASE("property: Sturm counts against known roots") {
  Rng rng(43);
  for (int t = 0; t < 150; ++t) {
    std::vector<Rational> roots;
    const int nr = uniform_int(rng, 1, 7);
    while (static_cast<int>(roots.size()) < nr) {
      const Rational r = random_rational(rng, 20, 6);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
    Polynomial p = from_roots(roots);
    if (uniform_int(rng, 0, 1)) {
      const Rational s = random_rational(rng, 10, 3);
      p = p * Polynomial({s * s + 1, 0, 1});  // no real roots
    }
    const SturmSequence s(p);
    for (int k = 0; k < 10; ++k) {
      Rational a = random_rational(rng, 30, 6), b = random_rational(rng, 30, 6);
      if (k % 3 == 0) a = roots[static_cast<std::size_t>(uniform_int(rng, 0, nr - 1))];
      if (a > b) std::swap(a, b);
      const long expect = std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return r > a && r <= b; });
      CHECK(s.count_roots(a, b) == expect);
    }
    const auto iv = isolate_roots(p, -100, 100, q(1, 1000));
    CHECK(iv.size() == roots.size());
    for (const auto& i : iv) {
      CHECK(i.hi - i.lo <= q(1, 1000));
      const long inside = std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return r > i.lo && r <= i.hi; });
      CHECK(inside == 1);
    }
  }
}

TEST_CASE("sign certification on intervals") {
  const Polynomial touch = Rational(-1) * from_roots({q(1, 2), q(1, 2)});  // -(r - 1/2)^2
  CHECK(certify_nonpositive(touch, 0, 1).holds);
  const Polynomial bump = touch + Polynomial::constant(q(1, 1000000));
  const SignCertificate c = certify_nonpositive(bump, 0, 1);
  CHECK_FALSE(c.holds);
  REQUIRE(c.witness);
  CHECK(bump(*c.witness) > 0);
  CHECK(*c.witness >= 0);
  CHECK(*c.witness <= 1);
  // Positive only at an endpoint.
  const SignCertificate e = certify_nonpositive(Polynomial({0, 1}), -1, q(1, 3));
  CHECK_FALSE(e.holds);
  CHECK(*e.witness == q(1, 3));
  CHECK(certify_nonpositive(Polynomial({0, 1}), -1, 0).holds);
  CHECK(certify_nonpositive(Polynomial(), -1, 1).holds);
  CHECK(certify_nonpositive(Polynomial({-1}), 2, 2).holds);
}

TEST_CASE("property: certification agrees with dense sampling") {
  Rng rng(44);
  int held = 0, failed = 0;
  for (int t = 0; t < 300; ++t) {
    const Polynomial p = random_polynomial(rng, 7);
    Rational lo = random_rational(rng, 10, 4), hi = random_rational(rng, 10, 4);
    if (lo > hi) std::swap(lo, hi);
    const SignCertificate c = certify_nonpositive(p, lo, hi);
    if (c.holds) {
      ++held;
      const double a = lo.get_d(), b = hi.get_d();
      double scale = 0.0;
      for (const auto& coef : p.coefficients()) scale = std::max(scale, std::fabs(coef.get_d()));
      for (int i = 0; i <= 2000; ++i) CHECK(p(a + (b - a) * i / 2000.0) <= 1e-9 * scale * std::pow(1 + std::max(std::fabs(a), std::fabs(b)), 7));
    } else {
      ++failed;
      REQUIRE(c.witness);
      CHECK(p(*c.witness) > 0);
      CHECK(*c.witness >= lo);
      CHECK(*c.witness <= hi);
    }
  }
  CHECK(held > 20);
  CHECK(failed > 20);
}

TEST_CASE("sign certification on half-lines") {
  CHECK(certify_nonpositive_above(Polynomial({-1, 0, -1}), 0).holds);
  const SignCertificate cubic = certify_nonpositive_above(Polynomial({0, 0, 0, 1}), -5);
  CHECK_FALSE(cubic.holds);
  CHECK(Polynomial({0, 0, 0, 1})(*cubic.witness) > 0);
  const Polynomial dip = Rational(-1) * from_roots({5, 5});
  CHECK(certify_nonpositive_above(dip, 0).holds);
  const Polynomial poke = dip + Polynomial::constant(q(1, 1000));
  const SignCertificate w = certify_nonpositive_above(poke, 0);
  CHECK_FALSE(w.holds);
  CHECK(poke(*w.witness) > 0);
  CHECK(*w.witness >= 0);
  // Roots only below the half-line.
  CHECK(certify_nonpositive_above(Rational(-1) * from_roots({-3, -2, -1}), 0).holds);
}

TEST_CASE("Gauss-Legendre rules") {
  CHECK_THROWS(gauss_legendre(0));
  for (int n : {1, 2, 3, 7, 16, 64}) {
    const auto rule = gauss_legendre(n);
    double sum = 0.0;
    for (double w : rule.weights) sum += w;
    CHECK(sum == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::is_sorted(rule.nodes.begin(), rule.nodes.end()));
  }
  // Exact for degree <= 2n - 1: compare with exact rational integrals.
  Rng rng(45);
  for (int t = 0; t < 100; ++t) {
    const int n = uniform_int(rng, 1, 12);
    std::vector<Rational> c(static_cast<std::size_t>(2 * n));
    for (auto& x : c) x = random_rational(rng, 9, 5);
    const Polynomial p(c);
    Rational exact = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k % 2 == 0) exact += 2 * c[k] / Rational(static_cast<long>(k) + 1);
    }
    const double approx = integrate(gauss_legendre(n), [&](double r) { return p(r); }, -1.0, 1.0);
    CHECK(approx == doctest::Approx(exact.get_d()).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("order-doubling quadrature") {
  const auto r = integrate_doubling([](double t) { return std::sin(t); }, 0.0, std::numbers::pi);
  CHECK(r.converged);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
  const auto bad = integrate_doubling([](double t) { return 1.0 / std::sqrt(std::fabs(t - 0.3)); }, 0.0, 1.0, 1e-14, 16, 64);
  CHECK_FALSE(bad.converged);
}

namespace {

// Brute-force LP oracle: best basic feasible solution of max c x, A x <= b, x >= 0.
double brute_force_lp(const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const Eigen::VectorXd& c) {
  const int m = static_cast<int>(A.rows()), n = static_cast<int>(A.cols());
  Eigen::MatrixXd full(m, n + m);
  full << A, Eigen::MatrixXd::Identity(m, m);
  double best = -1e300;
  std::vector<int> pick(static_cast<std::size_t>(n + m), 0);
  std::fill(pick.begin(), pick.begin() + m, 1);
  std::sort(pick.begin(), pick.end());
  do {
    std::vector<int> cols;
    for (int j = 0; j < n + m; ++j) {
      if (pick[static_cast<std::size_t>(j)]) cols.push_back(j);
    }
    Eigen::MatrixXd B(m, m);
    for (int i = 0; i < m; ++i) B.col(i) = full.col(cols[static_cast<std::size_t>(i)]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(B);
    if (!lu.isInvertible()) continue;
    const Eigen::VectorXd xb = lu.solve(b);
    if (xb.minCoeff() < -1e-9) continue;
    double value = 0.0;
    for (int i = 0; i < m; ++i) {
      if (cols[static_cast<std::size_t>(i)] < n) value += c(cols[static_cast<std::size_t>(i)]) * xb(i);
    }
    best = std::max(best, value);
  } while (std::next_permutation(pick.begin(), pick.end()));
  return best;
}

}  // namespace

TEST_CASE("simplex against vertex enumeration") {
  Rng rng(46);
  for (int t = 0; t < 150; ++t) {
    const int m = uniform_int(rng, 1, 4), n = uniform_int(rng, 1, 4);
    Eigen::MatrixXd A(m, n);
    Eigen::VectorXd b(m), c(n);
    for (int i = 0; i < m; ++i) {
      b(i) = uniform(rng, 0.0, 5.0);
      for (int j = 0; j < n; ++j) A(i, j) = uniform(rng, 0.05, 3.0);  // positive rows keep the LP bounded
    }
    for (int j = 0; j < n; ++j) c(j) = uniform(rng, -1.0, 2.0);
    const LpSolution sol = simplex_maximize(A, b, c);
    REQUIRE(sol.status == LpStatus::optimal);
    CHECK(sol.objective == doctest::Approx(brute_force_lp(A, b, c)).epsilon(1e-9));
    // Strong duality and dual feasibility.
    CHECK(b.dot(sol.dual) == doctest::Approx(sol.objective).epsilon(1e-9).scale(1.0));
    CHECK(((A.transpose() * sol.dual - c).array() >= -1e-9).all());
    CHECK(((A * sol.x - b).array() <= 1e-9).all());
  }
}

TEST_CASE("simplex detects unboundedness and rejects bad input") {
  Eigen::MatrixXd A(1, 2);
  A << 1.0, -1.0;
  const LpSolution sol = simplex_maximize(A, Eigen::VectorXd::Ones(1), Eigen::VectorXd::Ones(2));
  CHECK(sol.status == LpStatus::unbounded);
  CHECK_THROWS_AS(simplex_maximize(A, -Eigen::VectorXd::Ones(1), Eigen::VectorXd::Ones(2)), DomainError);
  CHECK_THROWS_AS(simplex_maximize(A, Eigen::VectorXd::Ones(2), Eigen::VectorXd::Ones(2)), ShapeError);
}
