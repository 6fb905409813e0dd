#include <doctest.h>

#include "sphcodes/catalog.hpp"
#include "sphcodes/codes.hpp"
#include "sphcodes/errors.hpp"
#include "sphcodes/hilbert_module.hpp"
#include "support/generators.hpp"

using namespace sphcodes;
using namespace sphcodes::testing;

namespace {

double dist(const AlgebraElement& a, const AlgebraElement& b) { return operator_norm(a - b); }

}  // namespace

TEST_CASE("inner product of basis vectors") {
  const auto m2 = AlgebraDescriptor::matrix(2);
  const ModuleVector e1 = ModuleVector::basis(m2, 2, 0), e2 = ModuleVector::basis(m2, 2, 1);
  CHECK(dist(inner_product(e1, e1), AlgebraElement::identity(m2)) == 0.0);
  CHECK(operator_norm(inner_product(e1, e2)) == 0.0);

  const double s = 1.0 / std::sqrt(2.0);
  const ModuleVector x = Complex(s) * (e1 + e2);
  CHECK(dist(inner_product(x, x), AlgebraElement::identity(m2)) <= 1e-15);
}

TEST_CASE("inner product is linear in the first slot") {
  const auto m2 = AlgebraDescriptor::matrix(2);
  Rng rng(21);
  const ModuleVector x = random_module_vector(rng, m2, 3), y = random_module_vector(rng, m2, 3);
  const Complex s(0.0, 2.0);
  CHECK(dist(inner_product(s * x, y), s * inner_product(x, y)) <= 1e-12);
  CHECK(dist(inner_product(x, s * y), std::conj(s) * inner_product(x, y)) <= 1e-12);
}

TEST_CASE("mismatched operands") {
  const ModuleVector a = ModuleVector::basis(AlgebraDescriptor::matrix(2), 2, 0);
  const ModuleVector b = ModuleVector::basis(AlgebraDescriptor::matrix(2), 3, 0);
  const ModuleVector c = ModuleVector::basis(AlgebraDescriptor::diagonal(2), 2, 0);
  CHECK_THROWS_AS(inner_product(a, b), ShapeError);
  CHECK_THROWS_AS(inner_product(a, c), ShapeError);
  CHECK_THROWS_AS(ModuleVector(AlgebraDescriptor::scalar(), {}), DomainError);
}

TEST_CASE("module norm") {
  const auto m2 = AlgebraDescriptor::matrix(2);
  CHECK(module_norm(ModuleVector::basis(m2, 3, 1)) == doctest::Approx(1.0));
  CHECK(module_norm(ModuleVector::zero(m2, 3)) == 0.0);
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 2.0;
  d(1, 1) = 1.0;
  const ModuleVector x(m2, {AlgebraElement(m2, d), AlgebraElement::zero(m2)});  // <x, x> = diag(4, 1)
  CHECK(module_norm(x) == doctest::Approx(2.0));
}

TEST_CASE("gram of the orthonormal basis") {
  const auto code = gen_orthonormal_modular(AlgebraDescriptor::matrix(2), 3, Angle::from_pi_fraction(Rational(1, 3)));
  const GramData g = gram(code.vectors);
  const AlgebraElement one = AlgebraElement::identity(code.algebra);
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = 0; k < 3; ++k) {
      if (j == k) {
        CHECK(dist(g.inner_at(j, k), one) == 0.0);
        CHECK(operator_norm(g.diff_at(j, k)) == 0.0);
      } else {
        CHECK(operator_norm(g.inner_at(j, k)) == 0.0);
        CHECK(dist(g.diff_at(j, k), Complex(2.0) * one) == 0.0);
      }
    }
  }
}

TEST_CASE("gram of a single vector") {
  const std::vector<ModuleVector> one{ModuleVector::basis(AlgebraDescriptor::scalar(), 1, 0)};
  const GramData g = gram(one);
  CHECK(g.n == 1);
  CHECK(operator_norm(g.diff_at(0, 0)) == 0.0);
  CHECK_THROWS_AS(gram(std::vector<ModuleVector>{}), DomainError);
}

TEST_CASE("embedded hexagon gram entries") {
  const ModularCode hex = embed_classical(gen_kissing(2));
  const GramData g = gram(hex.vectors);
  for (const auto& e : g.inner) {
    const double v = e.entries()(0, 0).real();
    const bool allowed = std::fabs(v - 1) < 1e-12 || std::fabs(std::fabs(v) - 0.5) < 1e-12 || std::fabs(v + 1) < 1e-12;
    CHECK(allowed);
    CHECK(std::fabs(e.entries()(0, 0).imag()) == 0.0);
  }
}

TEST_CASE("property: Gram invariants for random unit vectors") {
  Rng rng(22);
  for (const auto& desc : {AlgebraDescriptor::matrix(2), AlgebraDescriptor::matrix(3), AlgebraDescriptor::diagonal(3)}) {
    for (int t = 0; t < 20; ++t) {
      const int d = uniform_int(rng, 1, 4);
      std::vector<ModuleVector> vs;
      for (int i = 0; i < 5; ++i) vs.push_back(random_unit_module_vector(rng, desc, d));
      const GramData g = gram(vs, 3);
      const AlgebraElement one = AlgebraElement::identity(desc);
      for (std::size_t j = 0; j < g.n; ++j) {
        CHECK(dist(g.inner_at(j, j), one) <= 1e-12);
        for (std::size_t k = 0; k < g.n; ++k) {
          CHECK(dist(g.inner_at(j, k), adjoint(g.inner_at(k, j))) <= 1e-12);
          CHECK(is_hermitian(g.diff_at(j, k)));
          CHECK(is_positive(g.diff_at(j, k)));
          const AlgebraElement identity_form = Complex(2.0) * one - g.inner_at(j, k) - g.inner_at(k, j);
          CHECK(dist(g.diff_at(j, k), identity_form) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("property: Cauchy-Schwarz and positivity of <x, x>") {
  Rng rng(23);
  for (const auto& desc : {AlgebraDescriptor::matrix(2), AlgebraDescriptor::matrix(4), AlgebraDescriptor::diagonal(2)}) {
    for (int t = 0; t < 100; ++t) {
      const int d = uniform_int(rng, 1, 4);
      const ModuleVector x = random_module_vector(rng, desc, d), y = random_module_vector(rng, desc, d);
      CHECK(operator_norm(inner_product(x, y)) <= module_norm(x) * module_norm(y) + 1e-9);
      CHECK(is_positive(inner_product(x, x)));
    }
  }
}

TEST_CASE("property: scalar module is the complex dot product") {
  Rng rng(24);
  for (int t = 0; t < 50; ++t) {
    const int d = uniform_int(rng, 1, 6);
    const ModuleVector x = random_module_vector(rng, AlgebraDescriptor::scalar(), d);
    const ModuleVector y = random_module_vector(rng, AlgebraDescriptor::scalar(), d);
    Complex expect = 0.0;
    for (int j = 0; j < d; ++j) expect += x[j].entries()(0, 0) * std::conj(y[j].entries()(0, 0));
    CHECK(std::abs(inner_product(x, y).entries()(0, 0) - expect) <= 1e-12);
  }
}

TEST_CASE("gram output does not depend on the thread count") {
  Rng rng(25);
  std::vector<ModuleVector> vs;
  for (int i = 0; i < 12; ++i) vs.push_back(random_unit_module_vector(rng, AlgebraDescriptor::matrix(2), 3));
  const GramData a = gram(vs, 1), b = gram(vs, 4);
  for (std::size_t i = 0; i < a.diff.size(); ++i) {
    CHECK(a.diff[i].entries() == b.diff[i].entries());
    CHECK(a.inner[i].entries() == b.inner[i].entries());
  }
}
