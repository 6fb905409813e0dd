#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <string>
#include <vector>

namespace sphcodes {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

enum class AlgebraKind { scalar, diagonal, matrix };

std::string to_string(AlgebraKind kind);
AlgebraKind parse_algebra_kind(const std::string& name);

/// Which concrete finite-dimensional C*-algebra an element lives in:
/// C (scalar), the diagonal m x m matrices, or the full matrix algebra M_m(C).
struct AlgebraDescriptor {
  AlgebraKind kind = AlgebraKind::scalar;
  int m = 1;

  static AlgebraDescriptor scalar() { return {AlgebraKind::scalar, 1}; }
  static AlgebraDescriptor diagonal(int m);
  static AlgebraDescriptor matrix(int m);

  friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

std::string to_string(const AlgebraDescriptor& descriptor);

/// Element of a matrix C*-algebra. Immutable value type; construction checks
/// that the entries conform to the descriptor (square, m x m, zero
/// off-diagonal for the diagonal kind).
class AlgebraElement {
 public:
  AlgebraElement(AlgebraDescriptor descriptor, ComplexMatrix entries);

  static AlgebraElement identity(AlgebraDescriptor descriptor);
  static AlgebraElement zero(AlgebraDescriptor descriptor);
  static AlgebraElement scalar(Complex value);
  static AlgebraElement diagonal(std::span<const Complex> values);
  /// value * identity
  static AlgebraElement multiple_of_identity(AlgebraDescriptor descriptor, double value);

  const AlgebraDescriptor& descriptor() const { return descriptor_; }
  const ComplexMatrix& entries() const { return entries_; }
  int m() const { return descriptor_.m; }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator-(const AlgebraElement& a);
  friend AlgebraElement operator*(Complex s, const AlgebraElement& a);

 private:
  AlgebraDescriptor descriptor_;
  ComplexMatrix entries_;
};

inline constexpr double kDefaultPositivityTol = 1e-10;

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement adjoint(const AlgebraElement& a);

/// Largest entry magnitude, or 0 for the zero element.
double max_abs_entry(const AlgebraElement& a);

/// Hermitian within 1e-10 * max(1, largest entry magnitude).
bool is_hermitian(const AlgebraElement& a);

/// Ascending eigenvalues. Throws DomainError for non-Hermitian input.
std::vector<double> hermitian_eigenvalues(const AlgebraElement& a);
double min_eigenvalue(const AlgebraElement& a);

/// min eigenvalue >= -tol * max(1, ||a||).
bool is_positive(const AlgebraElement& a, double tol = kDefaultPositivityTol);

/// Exact positivity for the diagonal and scalar kinds: real, nonnegative
/// diagonal with no tolerance. Throws DomainError for the matrix kind.
bool is_positive_strict(const AlgebraElement& a);

/// a >= b in the operator order, i.e. a - b positive.
bool order_geq(const AlgebraElement& a, const AlgebraElement& b, double tol = kDefaultPositivityTol);

/// Largest singular value (C*-norm of M_m(C)).
double operator_norm(const AlgebraElement& a);

double real_trace(const AlgebraElement& a);

}  // namespace sphcodes
