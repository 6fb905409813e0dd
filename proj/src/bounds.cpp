#include "sphcodes/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "sphcodes/errors.hpp"
#include "sphcodes/parallel.hpp"
#include "sphcodes/simplex.hpp"
#include "sphcodes/sturm.hpp"

namespace sphcodes {

namespace {

constexpr int kScanSamples = 4000;
constexpr double kGapTol = 1e-9;

struct LocalMax {
  double r;
  double value;
};

// Local maxima of f on [lo, hi] from a uniform scan, refined by golden section.
std::vector<LocalMax> local_maxima(const std::function<double(double)>& f, double lo, double hi,
                                   int samples = kScanSamples) {
  if (hi <= lo) return {{lo, f(lo)}};
  std::vector<double> xs(static_cast<std::size_t>(samples) + 1), vs(xs.size());
  for (int i = 0; i <= samples; ++i) {
    xs[static_cast<std::size_t>(i)] = i == samples ? hi : lo + (hi - lo) * i / samples;
    vs[static_cast<std::size_t>(i)] = f(xs[static_cast<std::size_t>(i)]);
  }
  std::vector<LocalMax> out;
  const std::size_t last = xs.size() - 1;
  for (std::size_t i = 0; i <= last; ++i) {
    const bool left_ok = i == 0 || vs[i] >= vs[i - 1];
    const bool right_ok = i == last || vs[i] >= vs[i + 1];
    if (!left_ok || !right_ok) continue;
    if (i == 0 || i == last) {
      out.push_back({xs[i], vs[i]});
      continue;
    }
    double a = xs[i - 1], b = xs[i + 1];
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - g * (b - a), x2 = a + g * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 80 && b - a > 1e-16; ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + g * (b - a);
        f2 = f(x2);
      } else {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - g * (b - a);
        f1 = f(x1);
      }
    }
    LocalMax best{xs[i], vs[i]};
    if (f1 > best.value) best = {x1, f1};
    if (f2 > best.value) best = {x2, f2};
    out.push_back(best);
  }
  return out;
}

double approximate_max(const std::function<double(double)>& f, double lo, double hi) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& m : local_maxima(f, lo, hi)) best = std::max(best, m.value);
  return best;
}

void finish(BoundResult& result) {
  result.applicable = std::all_of(result.conditions.begin(), result.conditions.end(),
                                  [](const BoundCondition& c) { return c.satisfied; });
  if (!result.applicable) {
    result.bound.reset();
    result.bound_floor.reset();
    result.reciprocal_refinement = false;
    result.reciprocal_bound.reset();
  } else if (result.bound) {
    result.bound_floor = floor(*result.bound);
  }
}

void require_positive_c(const Rational& c) {
  if (c <= 0) throw DomainError("c must be positive, got " + to_string(c));
}

// Chebyshev-Lobatto points of [lo, hi], endpoints included exactly.
std::vector<double> chebyshev_grid(double lo, double hi, int count) {
  if (hi <= lo) return {lo};
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double t = std::cos(std::numbers::pi * i / (count - 1));
    grid[static_cast<std::size_t>(i)] = 0.5 * (lo + hi) - 0.5 * (hi - lo) * t;
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

struct Candidate {
  GegenbauerExpansion a;
  BoundResult verification;
};

bool better(const Candidate& x, const std::optional<Candidate>& best) {
  return !best || *x.verification.bound < *best->verification.bound;
}

struct SingleDegreeRun {
  std::optional<Candidate> best;
  bool infeasible = false;
  double lp_value = 0.0;
  int rounds = 0;
  std::size_t grid_points = 0;
  bool converged = false;
};

// Cutting-plane LP at one fixed degree.
SingleDegreeRun optimize_single_degree(int d, const Angle& theta, int degree, int grid_size, int max_rounds) {
  const Rational hi_exact = sign_interval_upper(d, theta);
  const double lo = -1.0, hi = hi_exact.get_d();
  std::vector<double> grid = chebyshev_grid(lo, hi, grid_size);

  SingleDegreeRun out;
  std::optional<Candidate>& best = out.best;

  auto consider = [&](std::vector<Rational> coeffs) {
    Candidate cand{GegenbauerExpansion{d, std::move(coeffs)}, {}};
    cand.verification = verify_delsarte(cand.a, d, theta);
    if (cand.verification.applicable && better(cand, best)) best = std::move(cand);
  };

  for (int round = 1; round <= max_rounds; ++round) {
    out.rounds = round;
    const Eigen::Index npts = static_cast<Eigen::Index>(grid.size());
    // Dual of: min 1 + sum a_k  s.t.  sum_k a_k G_k(r_i) <= -1, a >= 0.
    Eigen::MatrixXd A(degree, npts);
    for (Eigen::Index i = 0; i < npts; ++i) {
      const auto g = gegenbauer_values(d, degree, grid[static_cast<std::size_t>(i)]);
      for (int k = 1; k <= degree; ++k) A(k - 1, i) = -g[static_cast<std::size_t>(k)];
    }
    const LpSolution sol = simplex_maximize(A, Eigen::VectorXd::Ones(degree), Eigen::VectorXd::Ones(npts));
    if (sol.status == LpStatus::unbounded) {
      out.infeasible = true;
      return out;
    }
    if (sol.status != LpStatus::optimal) throw NumericalError("simplex iteration limit reached");

    std::vector<double> a(static_cast<std::size_t>(degree) + 1, 0.0);
    a[0] = 1.0;
    for (int k = 1; k <= degree; ++k) a[static_cast<std::size_t>(k)] = std::max(0.0, sol.dual(k - 1));
    double lp_value = 0.0;
    for (double v : a) lp_value += v;
    out.lp_value = lp_value;
    out.grid_points = grid.size();

    auto p_lp = [&](double r) {
      const auto g = gegenbauer_values(d, degree, r);
      double s = 0.0;
      for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * g[k];
      return s;
    };

    // Candidate 1: continued-fraction snapping of the LP coefficients.
    for (double tol : {1e-4, 1e-6, 1e-8, 1e-10, 1e-12}) {
      std::vector<Rational> coeffs(a.size());
      coeffs[0] = 1;
      for (std::size_t k = 1; k < a.size(); ++k) coeffs[k] = best_rational_within(a[k], tol * std::max(1.0, a[k]));
      consider(std::move(coeffs));
    }

    // Candidate 2: the exact LP coefficients lowered by a constant that covers
    // the largest violation.
    std::vector<Rational> exact(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) exact[k] = exact_rational(a[k]);
    const auto maxima = local_maxima(p_lp, lo, hi);
    double violation = 0.0;
    for (const auto& m : maxima) violation = std::max(violation, m.value);
    Rational shift = exact_rational(2.0 * violation + 1e-14 * lp_value);
    std::optional<Rational> exact_witness;
    for (int attempt = 0; attempt < 40; ++attempt) {
      std::vector<Rational> coeffs = exact;
      coeffs[0] = 1 - shift;
      if (coeffs[0] <= 0) break;
      GegenbauerExpansion e{d, coeffs};
      BoundResult check = verify_delsarte(e, d, theta);
      if (check.applicable) {
        Candidate cand{std::move(e), std::move(check)};
        if (better(cand, best)) best = std::move(cand);
        break;
      }
      if (!check.witness) break;
      if (!exact_witness) exact_witness = check.witness;
      const Rational excess = e.to_polynomial()(*check.witness);
      shift = 2 * shift + 2 * excess;
    }

    if (best) {
      const double gap = best->verification.bound->get_d() - lp_value;
      if (gap <= kGapTol * std::max(1.0, lp_value)) {
        out.converged = true;
        break;
      }
    }

    // Cutting planes: positive local maxima of the LP polynomial and the exact witness.
    std::vector<double> cuts;
    for (const auto& m : maxima) {
      if (m.value > 0.0) cuts.push_back(m.r);
    }
    if (exact_witness) cuts.push_back(std::clamp(exact_witness->get_d(), lo, hi));
    std::size_t added = 0;
    for (double x : cuts) {
      const bool known = std::any_of(grid.begin(), grid.end(), [&](double g) { return std::fabs(g - x) <= 1e-15; });
      if (!known) {
        grid.push_back(x);
        ++added;
      }
    }
    if (added == 0) {
      out.converged = best.has_value();
      break;
    }
    std::sort(grid.begin(), grid.end());
  }

  return out;
}

}  // namespace

const BoundCondition* BoundResult::condition(const std::string& name) const {
  for (const auto& c : conditions) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

Rational sign_interval_upper(int d, const Angle& theta) {
  Rational hi = theta.cos_upper();
  if (d == 1 && hi < 1) return Rational(-1);
  return hi;
}

BoundResult verify_delsarte(const GegenbauerExpansion& a, int d, const Angle& theta) {
  if (a.n != d) {
    throw ShapeError("Gegenbauer expansion uses n = " + std::to_string(a.n) + " but the code dimension is " +
                     std::to_string(d));
  }
  if (a.a.empty()) throw DomainError("verify_delsarte: empty coefficient list");
  BoundResult result;

  const Rational& a0 = a.a.front();
  result.conditions.push_back({"a0_positive", a0 > 0, a0.get_d()});
  double min_higher = 0.0;
  for (std::size_t k = 1; k < a.a.size(); ++k) {
    min_higher = std::min(min_higher, a.a[k].get_d());
    if (a.a[k] < 0 && !result.offending_index) result.offending_index = k;
  }
  result.conditions.push_back({"coefficients_nonnegative", !result.offending_index.has_value(), min_higher});

  const Polynomial p = a.to_polynomial();
  const Rational hi = sign_interval_upper(d, theta);
  const SignCertificate sign = certify_nonpositive(p, Rational(-1), hi);
  const double peak = approximate_max([&](double r) { return a.evaluate(r); }, -1.0, hi.get_d());
  result.conditions.push_back({"sign_nonpositive", sign.holds, 0.0 - peak});
  result.witness = sign.witness;

  if (a0 > 0) result.bound = p(Rational(1)) / a0;
  finish(result);
  return result;
}

DelsarteOptimization optimize_delsarte(int d, const Angle& theta, int degree, const DelsarteOptions& options) {
  if (d < 1) throw DomainError("optimize_delsarte: d must be positive");
  if (degree < 0) throw DomainError("optimize_delsarte: degree must be nonnegative");
  if (degree == 0) {
    throw InfeasibleError("LP infeasible at degree 0: P = a_0 > 0 cannot be nonpositive on [-1, cos theta]");
  }
  gegenbauer(d, degree);  // rejects n = 1 with degree >= 2
  if (options.grid_size > 0 && options.grid_size < degree + 2) {
    throw DomainError("optimize_delsarte: grid_size must be at least degree + 2");
  }

  // A degree-k certificate is admissible at every degree above k, so the
  // result is the best certificate over degrees 1..degree. Independent
  // rationalizations at each degree would otherwise let the certified value
  // drift upward by rounding noise when the LP optimum stalls.
  DelsarteOptimization out;
  std::optional<Candidate> best;
  std::string failures;
  for (int k = 1; k <= degree; ++k) {
    const int grid_size = options.grid_size > 0 ? std::max(options.grid_size, k + 2) : 8 * k;
    SingleDegreeRun run = optimize_single_degree(d, theta, k, grid_size, options.max_rounds);
    if (run.infeasible) continue;
    if (!run.best) {
      failures += " " + std::to_string(k);
    } else if (better(*run.best, best)) {
      best = std::move(run.best);
      out.certificate_degree = k;
    }
    if (k == degree) {
      out.lp_value = run.lp_value;
      out.rounds = run.rounds;
      out.grid_points = run.grid_points;
    }
  }
  if (!best) {
    if (failures.empty()) {
      throw InfeasibleError("LP infeasible at degree " + std::to_string(degree) +
                            ": no polynomial with nonnegative Gegenbauer coefficients is nonpositive on the grid");
    }
    throw NumericalError("optimize_delsarte: no certificate verified within " + std::to_string(options.max_rounds) +
                         " rounds at degree(s)" + failures);
  }
  out.certificate = DelsarteCertificate{d, theta, best->a, *best->verification.bound};
  out.verification = best->verification;
  const double gap = best->verification.bound->get_d() - out.lp_value;
  out.converged = out.rounds > 0 && gap <= kGapTol * std::max(1.0, out.lp_value);
  return out;
}

BoundResult pfender_bound(const PfenderCertificate& cert, int d) {
  require_positive_c(cert.c);
  BoundResult result;

  const GegenbauerExpansion e = expand(cert.phi, d);
  double min_coeff = 0.0;
  for (std::size_t k = 0; k < e.a.size(); ++k) {
    min_coeff = std::min(min_coeff, e.a[k].get_d());
    if (e.a[k] < 0 && !result.offending_index) result.offending_index = k;
  }
  result.conditions.push_back({"kernel_nonnegative", !result.offending_index.has_value(), min_coeff});

  const Polynomial shifted = cert.phi + Polynomial::constant(cert.c);
  const Rational hi = sign_interval_upper(d, cert.theta);
  const SignCertificate sign = certify_nonpositive(shifted, Rational(-1), hi);
  const double peak = approximate_max([&](double r) { return shifted(r); }, -1.0, hi.get_d());
  result.conditions.push_back({"sign_nonpositive", sign.holds, 0.0 - peak});
  result.witness = sign.witness;

  const Rational top = cert.phi(Rational(1)) + cert.c;
  result.bound = top / cert.c;
  if (top <= 1) {
    result.reciprocal_refinement = true;
    result.reciprocal_bound = 1 / cert.c;
  }
  finish(result);
  return result;
}

BoundResult pfender_check_on_code(const ClassicalCode& code, const Polynomial& phi, const Rational& c) {
  require_positive_c(c);
  if (!verify_classical(code).valid) throw DomainError("pfender_check_on_code: the code fails verification");
  BoundResult result;

  const Eigen::MatrixXd gram = code.points * code.points.transpose();
  double sum = 0.0, scale = 1.0;
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    for (Eigen::Index j = 0; j < gram.cols(); ++j) {
      const double v = phi(gram(i, j));
      sum += v;
      scale += std::fabs(v);
    }
  }
  result.conditions.push_back({"kernel_nonnegative", sum >= -1e-12 * scale, sum});

  const Polynomial shifted = phi + Polynomial::constant(c);
  const Rational hi = sign_interval_upper(code.d, code.theta);
  const SignCertificate sign = certify_nonpositive(shifted, Rational(-1), hi);
  const double peak = approximate_max([&](double r) { return shifted(r); }, -1.0, hi.get_d());
  result.conditions.push_back({"sign_nonpositive", sign.holds, 0.0 - peak});
  result.witness = sign.witness;

  const Rational top = phi(Rational(1)) + c;
  result.bound = top / c;
  if (top <= 1) {
    result.reciprocal_refinement = true;
    result.reciprocal_bound = 1 / c;
  }
  finish(result);
  if (result.applicable) {
    const double n = static_cast<double>(code.size());
    const double bound = result.bound->get_d();
    result.code_slack = bound - n;
    // Slack for the floating kernel sum: n <= bound + |sum deficit| / (c n).
    if (n > bound + 1e-6 * std::max(1.0, bound)) {
      throw InternalError("Pfender bound violated: n = " + std::to_string(code.size()) + " > " + to_string(*result.bound));
    }
  }
  return result;
}

std::string to_string(SpectralReduce reduce) {
  return reduce == SpectralReduce::min_eig ? "min_eig" : "mean_trace";
}

BoundResult nc_pfender_check(const ModularCode& code, const NcPhiSpec& spec, double tol, unsigned threads) {
  require_positive_c(spec.c);
  if (code.vectors.empty()) throw DomainError("nc_pfender_check: empty code");
  const GramData g = gram(code.vectors, threads);
  const std::size_t n = g.n;
  const AlgebraElement one = AlgebraElement::identity(code.algebra);
  for (std::size_t j = 0; j < n; ++j) {
    if (operator_norm(g.inner_at(j, j) - one) > tol) {
      throw DomainError("nc_pfender_check: vector " + std::to_string(j) + " violates <x, x> = 1");
    }
  }

  BoundResult result;
  const double c_d = spec.c.get_d();
  bool kernel_ok = false, sign_ok = true;
  double kernel_slack = 0.0, sign_peak = -std::numeric_limits<double>::infinity();
  Rational phi_zero;

  if (const auto* table = std::get_if<std::vector<NcPhiTableEntry>>(&spec.form)) {
    const auto same = [](const AlgebraElement& x, const AlgebraElement& y) {
      return operator_norm(x - y) <= 1e-9 * std::max({1.0, operator_norm(x), operator_norm(y)});
    };
    for (const auto& entry : *table) {
      if (entry.j >= n || entry.k >= n) {
        throw DomainError("phi table pair (" + std::to_string(entry.j) + "," + std::to_string(entry.k) +
                          ") is out of range for n = " + std::to_string(n));
      }
    }
    for (std::size_t s = 0; s < table->size(); ++s) {
      for (std::size_t t = s + 1; t < table->size(); ++t) {
        const auto& x = (*table)[s];
        const auto& y = (*table)[t];
        if (x.value != y.value && same(g.diff_at(x.j, x.k), g.diff_at(y.j, y.k))) {
          throw DomainError("phi table assigns two values to the same Gram-difference element (pairs (" +
                            std::to_string(x.j) + "," + std::to_string(x.k) + ") and (" + std::to_string(y.j) + "," +
                            std::to_string(y.k) + "))");
        }
      }
    }
    std::vector<Rational> values(n * n);
    std::vector<std::pair<std::size_t, std::size_t>> missing;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        auto it = std::find_if(table->begin(), table->end(),
                               [&](const NcPhiTableEntry& e) { return same(g.diff_at(e.j, e.k), g.diff_at(j, k)); });
        if (it == table->end()) missing.emplace_back(j, k);
        else values[j * n + k] = it->value;
      }
    }
    if (!missing.empty()) {
      std::ostringstream msg;
      msg << "phi table has no value for the Gram-difference element of " << missing.size() << " pair(s):";
      for (std::size_t i = 0; i < std::min<std::size_t>(missing.size(), 20); ++i) {
        msg << " (" << missing[i].first << "," << missing[i].second << ")";
      }
      if (missing.size() > 20) msg << " ...";
      throw DomainError(msg.str());
    }
    Rational sum = 0;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& v = values[j * n + k];
        sum += v;
        if (j == k) continue;
        const Rational excess = v + spec.c;
        sign_peak = std::max(sign_peak, excess.get_d());
        if (excess > 0) {
          sign_ok = false;
          if (result.witness_pairs.size() < 16) result.witness_pairs.emplace_back(j, k);
        }
      }
    }
    kernel_ok = sum >= 0;
    kernel_slack = sum.get_d();
    phi_zero = values[0];
  } else {
    const auto& spectral = std::get<NcSpectralPhi>(spec.form);
    std::vector<double> values(n * n);
    parallel_for(n * n, threads, [&](std::size_t idx) {
      const AlgebraElement& a = g.diff[idx];
      const double t =
          spectral.reduce == SpectralReduce::min_eig ? min_eigenvalue(a) : real_trace(a) / static_cast<double>(a.m());
      values[idx] = spectral.g(t);
    });
    double sum = 0.0, scale = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const double v = values[j * n + k];
        sum += v;
        scale += std::fabs(v);
        if (j == k) continue;
        sign_peak = std::max(sign_peak, v + c_d);
        if (v + c_d > tol * std::max(1.0, std::fabs(v))) {
          sign_ok = false;
          if (result.witness_pairs.size() < 16) result.witness_pairs.emplace_back(j, k);
        }
      }
    }
    kernel_ok = sum >= -tol * scale;
    kernel_slack = sum;
    phi_zero = spectral.g(Rational(0));

    // Every a >= s 1 has reduce(a) >= s, and t 1 attains each t >= s, so the
    // full condition is exactly g + c <= 0 on [s, inf), s = 2(1 - cos theta).
    const Rational s_lower = 2 * (1 - code.theta.cos_upper());
    const Polynomial shifted = spectral.g + Polynomial::constant(spec.c);
    result.full_domain_certified = certify_nonpositive_above(shifted, s_lower).holds;
  }

  result.conditions.push_back({"kernel_nonnegative", kernel_ok, kernel_slack});
  result.conditions.push_back({"sign_nonpositive", sign_ok, n > 1 ? -sign_peak : 0.0});

  const Rational top = phi_zero + spec.c;
  result.bound = top / spec.c;
  if (top <= 1) {
    result.reciprocal_refinement = true;
    result.reciprocal_bound = 1 / spec.c;
  }
  finish(result);
  if (result.applicable) {
    const double bound = result.bound->get_d();
    result.code_slack = bound - static_cast<double>(n);
    if (static_cast<double>(n) > bound + 1e-6 * std::max(1.0, bound)) {
      throw InternalError("module Pfender bound violated: n = " + std::to_string(n) + " > " + to_string(*result.bound));
    }
  }
  return result;
}

}  // namespace sphcodes
