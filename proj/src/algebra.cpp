#include "sphcodes/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "sphcodes/errors.hpp"

namespace sphcodes {

namespace {

constexpr double kHermitianTol = 1e-10;

void require_same(const AlgebraElement& a, const AlgebraElement& b, const char* op) {
  if (!(a.descriptor() == b.descriptor())) {
    throw ShapeError(std::string(op) + ": descriptor mismatch (" + to_string(a.descriptor()) + " vs " +
                     to_string(b.descriptor()) + ")");
  }
}

}  // namespace

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::scalar: return "scalar";
    case AlgebraKind::diagonal: return "diagonal";
    case AlgebraKind::matrix: return "matrix";
  }
  return "unknown";
}

AlgebraKind parse_algebra_kind(const std::string& name) {
  if (name == "scalar") return AlgebraKind::scalar;
  if (name == "diagonal") return AlgebraKind::diagonal;
  if (name == "matrix") return AlgebraKind::matrix;
  throw DomainError("unknown algebra kind '" + name + "'");
}

AlgebraDescriptor AlgebraDescriptor::diagonal(int m) {
  if (m < 1) throw DomainError("diagonal algebra needs m >= 1");
  return {AlgebraKind::diagonal, m};
}

AlgebraDescriptor AlgebraDescriptor::matrix(int m) {
  if (m < 1) throw DomainError("matrix algebra needs m >= 1");
  return {AlgebraKind::matrix, m};
}

std::string to_string(const AlgebraDescriptor& descriptor) {
  return to_string(descriptor.kind) + "(m=" + std::to_string(descriptor.m) + ")";
}

AlgebraElement::AlgebraElement(AlgebraDescriptor descriptor, ComplexMatrix entries)
    : descriptor_(descriptor), entries_(std::move(entries)) {
  if (descriptor_.m < 1) throw DomainError("algebra size m must be positive");
  if (descriptor_.kind == AlgebraKind::scalar && descriptor_.m != 1) {
    throw DomainError("scalar algebra must have m = 1");
  }
  if (entries_.rows() != descriptor_.m || entries_.cols() != descriptor_.m) {
    throw ShapeError("algebra element entries must be " + std::to_string(descriptor_.m) + "x" +
                     std::to_string(descriptor_.m));
  }
  if (descriptor_.kind == AlgebraKind::diagonal) {
    for (int i = 0; i < descriptor_.m; ++i) {
      for (int j = 0; j < descriptor_.m; ++j) {
        if (i != j && entries_(i, j) != Complex(0.0, 0.0)) {
          throw DomainError("diagonal algebra element has a nonzero off-diagonal entry");
        }
      }
    }
  }
}

AlgebraElement AlgebraElement::identity(AlgebraDescriptor descriptor) {
  return {descriptor, ComplexMatrix::Identity(descriptor.m, descriptor.m)};
}

AlgebraElement AlgebraElement::zero(AlgebraDescriptor descriptor) {
  return {descriptor, ComplexMatrix::Zero(descriptor.m, descriptor.m)};
}

AlgebraElement AlgebraElement::scalar(Complex value) {
  ComplexMatrix e(1, 1);
  e(0, 0) = value;
  return {AlgebraDescriptor::scalar(), std::move(e)};
}

AlgebraElement AlgebraElement::diagonal(std::span<const Complex> values) {
  const int m = static_cast<int>(values.size());
  ComplexMatrix e = ComplexMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) e(i, i) = values[static_cast<std::size_t>(i)];
  return {AlgebraDescriptor::diagonal(m), std::move(e)};
}

AlgebraElement AlgebraElement::multiple_of_identity(AlgebraDescriptor descriptor, double value) {
  return {descriptor, ComplexMatrix::Identity(descriptor.m, descriptor.m) * Complex(value, 0.0)};
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b, "add");
  return {a.descriptor_, a.entries_ + b.entries_};
}

AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b, "subtract");
  return {a.descriptor_, a.entries_ - b.entries_};
}

AlgebraElement operator-(const AlgebraElement& a) { return {a.descriptor_, -a.entries_}; }

AlgebraElement operator*(Complex s, const AlgebraElement& a) { return {a.descriptor_, s * a.entries_}; }

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) {
  require_same(a, b, "multiply");
  if (a.descriptor().kind == AlgebraKind::diagonal) {
    // Entrywise, so off-diagonal zeros stay exact.
    ComplexMatrix e = ComplexMatrix::Zero(a.m(), a.m());
    for (int i = 0; i < a.m(); ++i) e(i, i) = a.entries()(i, i) * b.entries()(i, i);
    return {a.descriptor(), std::move(e)};
  }
  return {a.descriptor(), a.entries() * b.entries()};
}

AlgebraElement adjoint(const AlgebraElement& a) { return {a.descriptor(), a.entries().adjoint()}; }

double max_abs_entry(const AlgebraElement& a) { return a.entries().cwiseAbs().maxCoeff(); }

bool is_hermitian(const AlgebraElement& a) {
  const double scale = std::max(1.0, max_abs_entry(a));
  const double asym = (a.entries() - a.entries().adjoint()).cwiseAbs().maxCoeff();
  return asym <= kHermitianTol * scale;
}

std::vector<double> hermitian_eigenvalues(const AlgebraElement& a) {
  if (!is_hermitian(a)) throw DomainError("hermitian_eigenvalues: element is not Hermitian");
  if (a.descriptor().kind != AlgebraKind::matrix) {
    std::vector<double> out(static_cast<std::size_t>(a.m()));
    for (int i = 0; i < a.m(); ++i) out[static_cast<std::size_t>(i)] = a.entries()(i, i).real();
    std::sort(out.begin(), out.end());
    return out;
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(a.entries(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericalError("Hermitian eigensolver failed to converge");
  const auto& values = solver.eigenvalues();
  std::vector<double> out(values.data(), values.data() + values.size());
  std::sort(out.begin(), out.end());
  return out;
}

double min_eigenvalue(const AlgebraElement& a) { return hermitian_eigenvalues(a).front(); }

bool is_positive(const AlgebraElement& a, double tol) {
  const auto eig = hermitian_eigenvalues(a);
  const double norm = std::max(std::fabs(eig.front()), std::fabs(eig.back()));
  return eig.front() >= -tol * std::max(1.0, norm);
}

bool is_positive_strict(const AlgebraElement& a) {
  if (a.descriptor().kind == AlgebraKind::matrix) {
    throw DomainError("strict positivity is only decidable for scalar and diagonal elements");
  }
  for (int i = 0; i < a.m(); ++i) {
    const Complex z = a.entries()(i, i);
    if (z.imag() != 0.0 || z.real() < 0.0) return false;
  }
  return true;
}

bool order_geq(const AlgebraElement& a, const AlgebraElement& b, double tol) { return is_positive(a - b, tol); }

double operator_norm(const AlgebraElement& a) {
  if (a.descriptor().kind != AlgebraKind::matrix) return a.entries().diagonal().cwiseAbs().maxCoeff();
  if (is_hermitian(a)) {
    const auto eig = hermitian_eigenvalues(a);
    return std::max(std::fabs(eig.front()), std::fabs(eig.back()));
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(a.entries());
  return svd.singularValues()(0);
}

double real_trace(const AlgebraElement& a) { return a.entries().trace().real(); }

}  // namespace sphcodes
