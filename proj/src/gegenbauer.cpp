#include "sphcodes/gegenbauer.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <shared_mutex>
#include <sstream>

#include "sphcodes/errors.hpp"
#include "sphcodes/quadrature.hpp"

namespace sphcodes {

namespace {

void check_parameters(int n, int k) {
  if (k < 0) throw DomainError("Gegenbauer degree must be nonnegative");
  if (n < 1 || (n < 2 && k >= 2)) {
    throw DomainError("Gegenbauer dimension parameter n = " + std::to_string(n) +
                      " is invalid for degree " + std::to_string(k) + " (the recursion needs n >= 2)");
  }
}

// Memo of G_0..G_k per n; readers share, insertion is exclusive.
class GegenbauerCache {
 public:
  Polynomial get(int n, int k) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(n);
      if (it != table_.end() && static_cast<int>(it->second.size()) > k) return it->second[static_cast<std::size_t>(k)];
    }
    std::unique_lock lock(mutex_);
    auto& row = table_[n];
    if (row.empty()) row.push_back(Polynomial::constant(1));
    if (row.size() == 1) row.push_back(Polynomial::monomial(1));
    const Polynomial r = Polynomial::monomial(1);
    while (static_cast<int>(row.size()) <= k) {
      const int j = static_cast<int>(row.size());
      Polynomial next = Rational(2 * j + n - 4) * (r * row[static_cast<std::size_t>(j - 1)]) -
                        Rational(j - 1) * row[static_cast<std::size_t>(j - 2)];
      row.push_back(Rational(1, j + n - 3) * next);
    }
    return row[static_cast<std::size_t>(k)];
  }

 private:
  std::shared_mutex mutex_;
  std::map<int, std::vector<Polynomial>> table_;
};

GegenbauerCache& cache() {
  static GegenbauerCache instance;
  return instance;
}

}  // namespace

Polynomial gegenbauer(int n, int k) {
  check_parameters(n, k);
  if (k == 0) return Polynomial::constant(1);
  if (k == 1) return Polynomial::monomial(1);
  return cache().get(n, k);
}

std::vector<double> gegenbauer_values(int n, int kmax, double r) {
  check_parameters(n, kmax);
  std::vector<double> g(static_cast<std::size_t>(kmax) + 1);
  g[0] = 1.0;
  if (kmax >= 1) g[1] = r;
  for (int k = 2; k <= kmax; ++k) {
    g[static_cast<std::size_t>(k)] =
        ((2.0 * k + n - 4.0) * r * g[static_cast<std::size_t>(k - 1)] - (k - 1.0) * g[static_cast<std::size_t>(k - 2)]) /
        (k + n - 3.0);
  }
  return g;
}

Polynomial GegenbauerExpansion::to_polynomial() const {
  Polynomial out;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0) out = out + a[k] * gegenbauer(n, static_cast<int>(k));
  }
  return out;
}

double GegenbauerExpansion::evaluate(double r) const {
  if (a.empty()) return 0.0;
  const auto g = gegenbauer_values(n, static_cast<int>(a.size()) - 1, r);
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) sum += a[k].get_d() * g[k];
  return sum;
}

GegenbauerExpansion expand(const Polynomial& p, int n) {
  if (n < 2 && p.degree() >= 2) check_parameters(n, p.degree());
  if (n < 1) check_parameters(n, 0);
  GegenbauerExpansion out;
  out.n = n;
  if (p.is_zero()) return out;
  out.a.assign(static_cast<std::size_t>(p.degree()) + 1, Rational(0));
  Polynomial rest = p;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational c = rest.coefficient(k);
    if (c == 0) continue;
    const Polynomial g = gegenbauer(n, k);
    const Rational ak = c / g.leading();
    out.a[static_cast<std::size_t>(k)] = ak;
    rest = rest - ak * g;
  }
  if (!rest.is_zero()) throw InternalError("Gegenbauer back-substitution left a remainder");
  return out;
}

double orthogonality_integral(int n, int j, int k) {
  check_parameters(n, std::max(j, k));
  if ((j + k) % 2 == 1) return 0.0;
  const int kmax = std::max(j, k);
  auto integrand = [&](double t) {
    const auto g = gegenbauer_values(n, kmax, std::cos(t));
    return g[static_cast<std::size_t>(j)] * g[static_cast<std::size_t>(k)] * std::pow(std::sin(t), n - 2);
  };
  const auto result = integrate_doubling(integrand, 0.0, std::numbers::pi, 1e-12, 16, 4096);
  if (!result.converged) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "orthogonality_integral(n=" << n << ", j=" << j << ", k=" << k << ") did not converge: order "
        << result.order << " gave " << result.value << ", previous " << result.previous;
    throw NumericalError(msg.str());
  }
  return result.value;
}

double kernel_sum(const ClassicalCode& code, int k) {
  const Eigen::MatrixXd gram = code.points * code.points.transpose();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < gram.rows(); ++i) {
    for (Eigen::Index j = 0; j < gram.cols(); ++j) {
      sum += gegenbauer_values(code.d, k, gram(i, j))[static_cast<std::size_t>(k)];
    }
  }
  return sum;
}

}  // namespace sphcodes
