#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sphcodes/angle.hpp"
#include "sphcodes/codes.hpp"
#include "sphcodes/gegenbauer.hpp"
#include "sphcodes/polynomial.hpp"

namespace sphcodes {

struct BoundCondition {
  std::string name;
  bool satisfied = false;
  double slack = 0.0;
};

/// Outcome of a bound check. `bound` is set only when every condition holds.
struct BoundResult {
  bool applicable = false;
  std::optional<Rational> bound;
  std::optional<Integer> bound_floor;
  std::vector<BoundCondition> conditions;

  /// Point r* with P(r*) > 0 when a sign condition fails.
  std::optional<Rational> witness;
  /// First negative Gegenbauer coefficient when a coefficient condition fails.
  std::optional<std::size_t> offending_index;
  /// Gram-difference pairs (j, k) violating the noncommutative sign condition.
  std::vector<std::pair<std::size_t, std::size_t>> witness_pairs;

  /// phi(1) + c <= 1 (phi(0) + c <= 1 in the module setting) gives n <= 1/c.
  bool reciprocal_refinement = false;
  std::optional<Rational> reciprocal_bound;

  /// bound - n, when the check ran against a concrete code.
  std::optional<double> code_slack;
  /// Spectral phi only: the sign condition also holds on every a >= 2(1 - cos theta) 1.
  std::optional<bool> full_domain_certified;

  const BoundCondition* condition(const std::string& name) const;
};

/// Right end of the interval [-1, h] on which the sign conditions are certified:
/// cos(theta) exactly when known, otherwise an outward rounded enclosure. In
/// R^1 distinct code points have inner product -1, so for d = 1 and
/// cos(theta) < 1 the interval collapses to {-1}.
Rational sign_interval_upper(int d, const Angle& theta);

// ---------------------------------------------------------------------------
// Delsarte linear programming bound.

struct DelsarteCertificate {
  int d = 2;
  Angle theta;
  GegenbauerExpansion a;  // a.n == d
  Rational bound;         // P(1) / a_0
};

/// Checks a_0 > 0, a_k >= 0 exactly and certifies P = sum a_k G_k^{(d)} <= 0 on
/// [-1, cos theta] with Sturm sequences; returns n <= P(1) / a_0 exactly.
BoundResult verify_delsarte(const GegenbauerExpansion& a, int d, const Angle& theta);

struct DelsarteOptions {
  int grid_size = 0;  // 0 selects 8 * degree
  int max_rounds = 50;
};

struct DelsarteOptimization {
  DelsarteCertificate certificate;
  BoundResult verification;
  int certificate_degree = 0;  // degree whose run produced the certificate
  double lp_value = 0.0;       // optimum of the final grid LP at `degree` (a lower estimate)
  int rounds = 0;              // cutting-plane rounds at `degree`
  std::size_t grid_points = 0;
  bool converged = false;      // certified bound within 1e-9 (relative) of lp_value
};

/// Minimizes P(1) / a_0 over degree-`degree` polynomials with a_0 = 1, a_k >= 0,
/// and P <= 0 on a Chebyshev grid of [-1, cos theta], refining the grid with
/// certified violation points until an exact rational certificate verifies.
/// Every degree 1..degree is solved and the smallest certified bound kept, so
/// the result never increases with the degree. Throws InfeasibleError when the
/// LP has no feasible point and NumericalError when no certificate verifies
/// within max_rounds.
DelsarteOptimization optimize_delsarte(int d, const Angle& theta, int degree, const DelsarteOptions& options = {});

// ---------------------------------------------------------------------------
// Pfender-type bounds.

struct PfenderCertificate {
  Polynomial phi;
  Rational c;
  Angle theta;
};

/// n <= (phi(1) + c) / c for every (d, n, theta) code. The kernel condition
/// sum phi(<x_j, x_k>) >= 0 is accepted through the sufficient criterion that
/// phi has nonnegative Gegenbauer coefficients in dimension d; phi + c <= 0 on
/// [-1, cos theta] is certified exactly.
BoundResult pfender_bound(const PfenderCertificate& cert, int d);

/// Both conditions evaluated for one concrete code (kernel sum over its Gram
/// matrix, sign condition on [-1, cos theta] of the code's own angle).
BoundResult pfender_check_on_code(const ClassicalCode& code, const Polynomial& phi, const Rational& c);

// ---------------------------------------------------------------------------
// Module (noncommutative) Pfender bound on the finite Gram-difference set.

/// phi given by value on the Gram-difference element of listed pairs.
struct NcPhiTableEntry {
  std::size_t j = 0;
  std::size_t k = 0;
  Rational value;
};

enum class SpectralReduce { min_eig, mean_trace };
std::string to_string(SpectralReduce reduce);

/// phi(a) = g(lambda_min(a)) or g(trace(a) / m).
struct NcSpectralPhi {
  SpectralReduce reduce = SpectralReduce::min_eig;
  Polynomial g;
};

struct NcPhiSpec {
  Rational c;
  std::variant<std::vector<NcPhiTableEntry>, NcSpectralPhi> form;
};

/// Checks sum_{j,k} phi(<x_j - x_k, x_j - x_k>) >= 0 and phi(diff_jk) + c <= 0
/// for j != k; when both hold returns n <= (phi(0) + c) / c.
BoundResult nc_pfender_check(const ModularCode& code, const NcPhiSpec& spec, double tol = kDefaultVerifyTol,
                             unsigned threads = 1);

}  // namespace sphcodes
