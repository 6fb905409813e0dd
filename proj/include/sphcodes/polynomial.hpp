#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sphcodes/rational.hpp"

namespace sphcodes {

/// Univariate polynomial with exact rational coefficients in the monomial basis.
/// coefficients()[i] multiplies r^i; the trailing coefficient is nonzero unless
/// the polynomial is zero (empty coefficient list).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(int degree, const Rational& c = Rational(1));

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int i) const;
  const Rational& leading() const;

  Rational operator()(const Rational& r) const;
  double operator()(double r) const;

  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend Polynomial operator-(const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Throws DomainError for b = 0.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor (zero if both are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Product of the distinct irreducible factors: same roots, all simple.
Polynomial square_free_part(const Polynomial& p);

/// Product of the square-free factors of odd multiplicity (Yun decomposition).
/// Its real roots are exactly the points where p changes sign.
Polynomial odd_multiplicity_part(const Polynomial& p);

}  // namespace sphcodes
