#pragma once

#include <span>
#include <vector>

#include "sphcodes/algebra.hpp"

namespace sphcodes {

/// Element (a_1, ..., a_d) of the standard left Hilbert C*-module A^d.
class ModuleVector {
 public:
  ModuleVector(AlgebraDescriptor descriptor, std::vector<AlgebraElement> components);

  /// e_index: identity in slot `index`, zero elsewhere.
  static ModuleVector basis(AlgebraDescriptor descriptor, int d, int index);
  static ModuleVector zero(AlgebraDescriptor descriptor, int d);

  const AlgebraDescriptor& descriptor() const { return descriptor_; }
  int d() const { return static_cast<int>(components_.size()); }
  const std::vector<AlgebraElement>& components() const { return components_; }
  const AlgebraElement& operator[](int j) const { return components_[static_cast<std::size_t>(j)]; }

  friend ModuleVector operator+(const ModuleVector& x, const ModuleVector& y);
  friend ModuleVector operator-(const ModuleVector& x, const ModuleVector& y);
  friend ModuleVector operator*(Complex s, const ModuleVector& x);

 private:
  AlgebraDescriptor descriptor_;
  std::vector<AlgebraElement> components_;
};

/// <x, y> = sum_j x_j y_j^*  (linear in the first slot).
AlgebraElement inner_product(const ModuleVector& x, const ModuleVector& y);

/// ||x|| = ||<x, x>||^(1/2).
double module_norm(const ModuleVector& x);

/// Pairwise inner products and Gram differences <x_j - x_k, x_j - x_k>.
struct GramData {
  std::size_t n = 0;
  std::vector<AlgebraElement> inner;  // row-major n x n
  std::vector<AlgebraElement> diff;   // row-major n x n

  const AlgebraElement& inner_at(std::size_t j, std::size_t k) const { return inner[j * n + k]; }
  const AlgebraElement& diff_at(std::size_t j, std::size_t k) const { return diff[j * n + k]; }
};

/// Computes the Gram data. `diff` is formed directly from x_j - x_k; when every
/// <x_j, x_j> is the unit (within 1e-9) it is cross-checked against
/// 2*1 - <x_j,x_k> - <x_k,x_j>, and a drift beyond 1e-9 raises NumericalError.
/// Pairs may be evaluated on `threads` workers; the output does not depend on it.
GramData gram(std::span<const ModuleVector> vectors, unsigned threads = 1);

}  // namespace sphcodes
