#include "sphcodes/codes.hpp"

#include <cmath>
#include <limits>

#include "sphcodes/errors.hpp"
#include "sphcodes/parallel.hpp"

namespace sphcodes {

namespace {

constexpr double kDistanceFormTol = 1e-9;

void check_classical(const ClassicalCode& code) {
  if (code.d < 1) throw DomainError("classical code needs d >= 1");
  if (code.points.cols() != code.d) {
    throw ShapeError("classical code points have " + std::to_string(code.points.cols()) + " columns, expected d = " +
                     std::to_string(code.d));
  }
  for (Eigen::Index j = 0; j < code.points.rows(); ++j) {
    const double norm = code.points.row(j).norm();
    if (!std::isfinite(norm) || std::fabs(norm - 1.0) > kUnitNormTol) {
      throw DomainError("classical code point " + std::to_string(j) + " is not a unit vector (norm " +
                        std::to_string(norm) + ")");
    }
  }
}

void check_modular(const ModularCode& code) {
  if (code.d < 1) throw DomainError("modular code needs d >= 1");
  for (const auto& v : code.vectors) {
    if (!(v.descriptor() == code.algebra)) throw ShapeError("modular code vector has a different algebra");
    if (v.d() != code.d) throw ShapeError("modular code vector has rank " + std::to_string(v.d()));
  }
}

double required_distance(double cos_theta) { return std::sqrt(std::max(0.0, 2.0 * (1.0 - cos_theta))); }

// Pairs (j, k), j < k, in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> upper_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n > 0 ? n - 1 : 0) / 2);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) pairs.emplace_back(j, k);
  }
  return pairs;
}

struct PairSpectra {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<double> min_eig;  // lambda_min(diff) per pair
  std::vector<double> norm;     // ||diff|| per pair
  double unit_defect = 0.0;
};

PairSpectra modular_spectra(const ModularCode& code, unsigned threads) {
  check_modular(code);
  PairSpectra out;
  if (code.vectors.empty()) return out;
  const GramData g = gram(code.vectors, threads);
  const AlgebraElement one = AlgebraElement::identity(code.algebra);
  for (std::size_t j = 0; j < g.n; ++j) {
    out.unit_defect = std::max(out.unit_defect, operator_norm(g.inner_at(j, j) - one));
  }
  out.pairs = upper_pairs(g.n);
  out.min_eig.assign(out.pairs.size(), 0.0);
  out.norm.assign(out.pairs.size(), 0.0);
  parallel_for(out.pairs.size(), threads, [&](std::size_t p) {
    const auto [j, k] = out.pairs[p];
    const AlgebraElement& diff = g.diff_at(j, k);
    if (!is_hermitian(diff)) {
      throw NumericalError("Gram difference (" + std::to_string(j) + "," + std::to_string(k) + ") is not Hermitian");
    }
    const auto eig = hermitian_eigenvalues(diff);
    out.min_eig[p] = eig.front();
    out.norm[p] = std::max(std::fabs(eig.front()), std::fabs(eig.back()));
  });
  return out;
}

}  // namespace

std::string to_string(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::classical: return "classical";
    case VerifyMode::modular_order: return "modular-order";
    case VerifyMode::modular_norm: return "modular-norm";
  }
  return "unknown";
}

ClassicalCode make_classical_code(int d, Angle theta, Eigen::MatrixXd points) {
  ClassicalCode code{d, theta, std::move(points)};
  check_classical(code);
  return code;
}

ModularCode make_modular_code(AlgebraDescriptor algebra, int d, Angle theta, std::vector<ModuleVector> vectors) {
  ModularCode code{algebra, d, theta, std::move(vectors)};
  check_modular(code);
  return code;
}

VerificationReport verify_classical(const ClassicalCode& code, double tol, unsigned threads) {
  check_classical(code);
  const double cos_theta = code.theta.cos();
  VerificationReport report;
  report.mode = VerifyMode::classical;
  report.n = code.size();
  report.tol = tol;
  report.required_distance = required_distance(cos_theta);

  const auto pairs = upper_pairs(report.n);
  std::vector<double> inner(pairs.size()), dist(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t p) {
    const auto [j, k] = pairs[p];
    inner[p] = code.points.row(static_cast<Eigen::Index>(j)).dot(code.points.row(static_cast<Eigen::Index>(k)));
    dist[p] = (code.points.row(static_cast<Eigen::Index>(j)) - code.points.row(static_cast<Eigen::Index>(k))).norm();
  });

  double worst = -std::numeric_limits<double>::infinity();
  double min_dist = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    // <x, y> = (2 - ||x - y||^2) / 2 for unit vectors.
    if (std::fabs((2.0 - dist[p] * dist[p]) / 2.0 - inner[p]) > kDistanceFormTol) {
      throw NumericalError("inner-product and distance forms disagree for pair (" + std::to_string(pairs[p].first) +
                           "," + std::to_string(pairs[p].second) + ")");
    }
    if (inner[p] > worst) {
      worst = inner[p];
      report.worst_pair = pairs[p];
    }
    min_dist = std::min(min_dist, dist[p]);
  }
  if (pairs.empty()) {
    report.margin = cos_theta + 1.0;
    report.min_admissible_cos = -1.0;
  } else {
    report.margin = cos_theta - worst;
    report.min_admissible_cos = worst;
    report.min_distance = min_dist;
  }
  report.valid = report.margin >= -tol;
  return report;
}

VerificationReport verify_modular(const ModularCode& code, double tol, unsigned threads) {
  const PairSpectra spectra = modular_spectra(code, threads);
  const double cos_theta = code.theta.cos();
  const double threshold = 2.0 * (1.0 - cos_theta);
  VerificationReport report;
  report.mode = VerifyMode::modular_order;
  report.n = code.size();
  report.tol = tol;
  report.unit_defect = spectra.unit_defect;
  report.unit_ok = spectra.unit_defect <= tol;
  report.required_distance = required_distance(cos_theta);

  double lowest = std::numeric_limits<double>::infinity();
  double min_norm = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < spectra.pairs.size(); ++p) {
    if (spectra.min_eig[p] < lowest) {
      lowest = spectra.min_eig[p];
      report.worst_pair = spectra.pairs[p];
    }
    min_norm = std::min(min_norm, spectra.norm[p]);
  }
  if (spectra.pairs.empty()) {
    report.margin = cos_theta + 1.0;
    report.min_admissible_cos = -1.0;
  } else {
    // Half the eigenvalue slack of diff - 2(1 - cos theta) 1: inner-product units.
    report.margin = (lowest - threshold) / 2.0;
    report.min_admissible_cos = 1.0 - lowest / 2.0;
    report.min_distance = std::sqrt(std::max(0.0, min_norm));
  }
  report.valid = report.unit_ok && report.margin >= -tol;
  return report;
}

VerificationReport verify_modular_norm_only(const ModularCode& code, double tol, unsigned threads) {
  const PairSpectra spectra = modular_spectra(code, threads);
  const double cos_theta = code.theta.cos();
  VerificationReport report;
  report.mode = VerifyMode::modular_norm;
  report.n = code.size();
  report.tol = tol;
  report.unit_defect = spectra.unit_defect;
  report.unit_ok = spectra.unit_defect <= tol;
  report.required_distance = required_distance(cos_theta);

  double min_dist = std::numeric_limits<double>::infinity();
  double lowest = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < spectra.pairs.size(); ++p) {
    const double dist = std::sqrt(std::max(0.0, spectra.norm[p]));
    if (dist < min_dist) {
      min_dist = dist;
      report.worst_pair = spectra.pairs[p];
    }
    lowest = std::min(lowest, spectra.min_eig[p]);
  }
  if (spectra.pairs.empty()) {
    report.margin = report.required_distance;
    report.min_admissible_cos = -1.0;
  } else {
    report.min_distance = min_dist;
    report.margin = min_dist - report.required_distance;
    report.min_admissible_cos = 1.0 - lowest / 2.0;
  }
  report.valid = report.unit_ok && report.margin >= -tol;
  return report;
}

double min_admissible_cos(const ModularCode& code, unsigned threads) {
  const PairSpectra spectra = modular_spectra(code, threads);
  if (spectra.pairs.empty()) return -1.0;
  double lowest = std::numeric_limits<double>::infinity();
  for (double v : spectra.min_eig) lowest = std::min(lowest, v);
  return 1.0 - lowest / 2.0;
}

ModularCode embed_classical(const ClassicalCode& code) {
  check_classical(code);
  const AlgebraDescriptor scalar = AlgebraDescriptor::scalar();
  std::vector<ModuleVector> vectors;
  vectors.reserve(code.size());
  for (Eigen::Index j = 0; j < code.points.rows(); ++j) {
    std::vector<AlgebraElement> comps;
    comps.reserve(static_cast<std::size_t>(code.d));
    for (int i = 0; i < code.d; ++i) comps.push_back(AlgebraElement::scalar(Complex(code.points(j, i), 0.0)));
    vectors.emplace_back(scalar, std::move(comps));
  }
  return {scalar, code.d, code.theta, std::move(vectors)};
}

ModularCode diagonal_product(std::span<const ClassicalCode> codes) {
  if (codes.empty()) throw DomainError("diagonal_product needs at least one code");
  const ClassicalCode& first = codes.front();
  for (const auto& c : codes) {
    if (c.d != first.d || c.size() != first.size()) {
      throw ShapeError("diagonal_product: all codes must share d and n");
    }
    if (std::fabs(c.theta.radians() - first.theta.radians()) > 1e-12) {
      throw ShapeError("diagonal_product: all codes must share theta");
    }
    if (!verify_classical(c).valid) throw DomainError("diagonal_product: a component code fails verification");
  }
  const int m = static_cast<int>(codes.size());
  const AlgebraDescriptor desc = AlgebraDescriptor::diagonal(m);
  std::vector<ModuleVector> vectors;
  vectors.reserve(first.size());
  for (Eigen::Index j = 0; j < first.points.rows(); ++j) {
    std::vector<AlgebraElement> comps;
    comps.reserve(static_cast<std::size_t>(first.d));
    for (int i = 0; i < first.d; ++i) {
      std::vector<Complex> diag(static_cast<std::size_t>(m));
      for (int s = 0; s < m; ++s) diag[static_cast<std::size_t>(s)] = Complex(codes[static_cast<std::size_t>(s)].points(j, i), 0.0);
      comps.push_back(AlgebraElement::diagonal(diag));
    }
    vectors.emplace_back(desc, std::move(comps));
  }
  return {desc, first.d, first.theta, std::move(vectors)};
}

}  // namespace sphcodes
