#include "sphcodes/hilbert_module.hpp"

#include <cmath>

#include "sphcodes/errors.hpp"
#include "sphcodes/parallel.hpp"

namespace sphcodes {

namespace {

constexpr double kUnitTol = 1e-9;
constexpr double kIdentityDriftTol = 1e-9;

void require_compatible(const ModuleVector& x, const ModuleVector& y, const char* op) {
  if (!(x.descriptor() == y.descriptor())) {
    throw ShapeError(std::string(op) + ": algebra descriptor mismatch");
  }
  if (x.d() != y.d()) {
    throw ShapeError(std::string(op) + ": module rank mismatch (" + std::to_string(x.d()) + " vs " +
                     std::to_string(y.d()) + ")");
  }
}

}  // namespace

ModuleVector::ModuleVector(AlgebraDescriptor descriptor, std::vector<AlgebraElement> components)
    : descriptor_(descriptor), components_(std::move(components)) {
  if (components_.empty()) throw DomainError("module vector needs d >= 1 components");
  for (const auto& c : components_) {
    if (!(c.descriptor() == descriptor_)) throw ShapeError("module vector component has a different descriptor");
  }
}

ModuleVector ModuleVector::basis(AlgebraDescriptor descriptor, int d, int index) {
  if (index < 0 || index >= d) throw DomainError("basis index out of range");
  std::vector<AlgebraElement> comps(static_cast<std::size_t>(d), AlgebraElement::zero(descriptor));
  comps[static_cast<std::size_t>(index)] = AlgebraElement::identity(descriptor);
  return {descriptor, std::move(comps)};
}

ModuleVector ModuleVector::zero(AlgebraDescriptor descriptor, int d) {
  if (d < 1) throw DomainError("module vector needs d >= 1 components");
  return {descriptor, std::vector<AlgebraElement>(static_cast<std::size_t>(d), AlgebraElement::zero(descriptor))};
}

ModuleVector operator+(const ModuleVector& x, const ModuleVector& y) {
  require_compatible(x, y, "add");
  std::vector<AlgebraElement> out;
  out.reserve(x.components_.size());
  for (std::size_t j = 0; j < x.components_.size(); ++j) out.push_back(x.components_[j] + y.components_[j]);
  return {x.descriptor_, std::move(out)};
}

ModuleVector operator-(const ModuleVector& x, const ModuleVector& y) {
  require_compatible(x, y, "subtract");
  std::vector<AlgebraElement> out;
  out.reserve(x.components_.size());
  for (std::size_t j = 0; j < x.components_.size(); ++j) out.push_back(x.components_[j] - y.components_[j]);
  return {x.descriptor_, std::move(out)};
}

ModuleVector operator*(Complex s, const ModuleVector& x) {
  std::vector<AlgebraElement> out;
  out.reserve(x.components_.size());
  for (const auto& c : x.components_) out.push_back(s * c);
  return {x.descriptor_, std::move(out)};
}

AlgebraElement inner_product(const ModuleVector& x, const ModuleVector& y) {
  require_compatible(x, y, "inner_product");
  AlgebraElement acc = AlgebraElement::zero(x.descriptor());
  for (int j = 0; j < x.d(); ++j) acc = acc + multiply(x[j], adjoint(y[j]));
  return acc;
}

double module_norm(const ModuleVector& x) { return std::sqrt(operator_norm(inner_product(x, x))); }

GramData gram(std::span<const ModuleVector> vectors, unsigned threads) {
  if (vectors.empty()) throw DomainError("gram: empty vector list");
  const std::size_t n = vectors.size();
  for (const auto& v : vectors) require_compatible(vectors.front(), v, "gram");

  const AlgebraDescriptor desc = vectors.front().descriptor();
  GramData g;
  g.n = n;
  g.inner.assign(n * n, AlgebraElement::zero(desc));
  g.diff.assign(n * n, AlgebraElement::zero(desc));

  parallel_for(n * n, threads, [&](std::size_t idx) {
    const std::size_t j = idx / n, k = idx % n;
    g.inner[idx] = inner_product(vectors[j], vectors[k]);
    if (j < k) {
      const ModuleVector delta = vectors[j] - vectors[k];
      g.diff[idx] = inner_product(delta, delta);
    }
  });
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < j; ++k) g.diff[j * n + k] = g.diff[k * n + j];
  }

  bool unit_diagonal = true;
  const AlgebraElement one = AlgebraElement::identity(desc);
  for (std::size_t j = 0; j < n && unit_diagonal; ++j) {
    unit_diagonal = operator_norm(g.inner_at(j, j) - one) <= kUnitTol;
  }
  if (unit_diagonal) {
    const AlgebraElement two = AlgebraElement::multiple_of_identity(desc, 2.0);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const AlgebraElement via_identity = two - g.inner_at(j, k) - g.inner_at(k, j);
        const double drift = operator_norm(g.diff_at(j, k) - via_identity);
        if (drift > kIdentityDriftTol * std::max(1.0, operator_norm(g.diff_at(j, k)))) {
          throw NumericalError("gram: direct Gram difference disagrees with 2 - <x,y> - <y,x> for pair (" +
                               std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
  return g;
}

}  // namespace sphcodes
