#pragma once

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sphcodes/angle.hpp"
#include "sphcodes/hilbert_module.hpp"

namespace sphcodes {

inline constexpr double kDefaultVerifyTol = 1e-9;
inline constexpr double kUnitNormTol = 1e-9;

/// n unit vectors in R^d (rows of `points`) and a separation angle.
struct ClassicalCode {
  int d = 0;
  Angle theta;
  Eigen::MatrixXd points;  // n x d

  std::size_t size() const { return static_cast<std::size_t>(points.rows()); }
};

/// Checks shape and unit rows; throws DomainError / ShapeError.
ClassicalCode make_classical_code(int d, Angle theta, Eigen::MatrixXd points);

/// n vectors of the Hilbert module A^d and a separation angle.
struct ModularCode {
  AlgebraDescriptor algebra;
  int d = 0;
  Angle theta;
  std::vector<ModuleVector> vectors;

  std::size_t size() const { return vectors.size(); }
};

/// Checks that every vector has the code's descriptor and rank.
ModularCode make_modular_code(AlgebraDescriptor algebra, int d, Angle theta, std::vector<ModuleVector> vectors);

enum class VerifyMode { classical, modular_order, modular_norm };
std::string to_string(VerifyMode mode);

/// Outcome of a code check. `margin` is the signed slack of the binding
/// inequality: for the classical and modular-order modes it is in inner-product
/// units (cos(theta) minus the worst effective inner product), for the
/// norm-only mode it is min ||x_j - x_k|| - sqrt(2(1 - cos theta)).
/// valid <=> unit condition holds and margin >= -tol.
struct VerificationReport {
  bool valid = false;
  VerifyMode mode = VerifyMode::classical;
  std::size_t n = 0;
  std::pair<std::size_t, std::size_t> worst_pair{0, 0};
  double margin = 0.0;
  bool unit_ok = true;
  double unit_defect = 0.0;      // max ||<x_j,x_j> - 1|| (0 for classical)
  double min_distance = 0.0;     // min ||x_j - x_k|| over pairs (0 when n < 2)
  double required_distance = 0.0;
  double min_admissible_cos = -1.0;  // smallest cos(theta) (widest angle) the code satisfies
  double tol = kDefaultVerifyTol;
};

/// <x_j, x_k> <= cos(theta) for all j != k, cross-checked against the
/// distance form ||x_j - x_k|| >= sqrt(2(1 - cos theta)).
VerificationReport verify_classical(const ClassicalCode& code, double tol = kDefaultVerifyTol, unsigned threads = 1);

/// Unit condition <x_j, x_j> = 1 and <x_j - x_k, x_j - x_k> >= 2(1 - cos theta) 1
/// in the operator order.
VerificationReport verify_modular(const ModularCode& code, double tol = kDefaultVerifyTol, unsigned threads = 1);

/// Unit condition and the weaker norm inequality ||x_j - x_k|| >= sqrt(2(1 - cos theta)).
VerificationReport verify_modular_norm_only(const ModularCode& code, double tol = kDefaultVerifyTol,
                                            unsigned threads = 1);

/// Smallest cos(theta), i.e. widest angle, for which the order inequality holds:
/// 1 - min_{j != k} lambda_min(<x_j - x_k, x_j - x_k>) / 2, and -1 when n < 2.
double min_admissible_cos(const ModularCode& code, unsigned threads = 1);

/// The code over the scalar algebra C with identical verification outcome.
ModularCode embed_classical(const ClassicalCode& code);

/// Component s of the result is code s, over the diagonal algebra of size m.
ModularCode diagonal_product(std::span<const ClassicalCode> codes);

}  // namespace sphcodes
