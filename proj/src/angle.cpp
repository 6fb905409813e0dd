#include "sphcodes/angle.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "sphcodes/errors.hpp"

namespace sphcodes {

namespace {

// Angles (as fractions of pi) with rational cosine, and that cosine.
const std::array<std::pair<Rational, Rational>, 8>& rational_cosines() {
  static const std::array<std::pair<Rational, Rational>, 8> table{{
      {Rational(0), Rational(1)},
      {Rational(1, 3), Rational(1, 2)},
      {Rational(1, 2), Rational(0)},
      {Rational(2, 3), Rational(-1, 2)},
      {Rational(1), Rational(-1)},
      {Rational(4, 3), Rational(-1, 2)},
      {Rational(3, 2), Rational(0)},
      {Rational(5, 3), Rational(1, 2)},
  }};
  return table;
}

// Widening applied to floating cosines: covers the libm error and the
// representation error of theta itself.
const Rational& widening() {
  static const Rational w = Rational(1, 1) / Rational(Integer(1) << 48);
  return w;
}

constexpr double kSnapTol = 1e-14;

}  // namespace

Angle Angle::from_pi_fraction(const Rational& frac) {
  Rational reduced = frac - Rational(2 * floor(Rational(frac / 2)));
  Angle a;
  a.pi_fraction_ = reduced;
  a.radians_ = std::numbers::pi * reduced.get_d();
  for (const auto& [f, c] : rational_cosines()) {
    if (f == reduced) a.exact_cos_ = c;
  }
  return a;
}

Angle Angle::from_radians(double radians) {
  if (!std::isfinite(radians) || radians < 0.0 || radians >= 2.0 * std::numbers::pi) {
    throw DomainError("theta must lie in [0, 2*pi)");
  }
  for (const auto& [f, c] : rational_cosines()) {
    if (std::fabs(radians - std::numbers::pi * f.get_d()) <= kSnapTol) {
      Angle a = from_pi_fraction(f);
      a.radians_ = radians;
      return a;
    }
  }
  Angle a;
  a.radians_ = radians;
  return a;
}

Angle Angle::from_cos(const Rational& cos_value) {
  if (cos_value < -1 || cos_value > 1) throw DomainError("cos(theta) must lie in [-1, 1]");
  for (const auto& [f, c] : rational_cosines()) {
    if (c == cos_value && f <= 1) return from_pi_fraction(f);
  }
  Angle a;
  a.radians_ = std::acos(cos_value.get_d());
  a.exact_cos_ = cos_value;
  return a;
}

double Angle::cos() const { return exact_cos_ ? exact_cos_->get_d() : std::cos(radians_); }

Rational Angle::cos_upper() const {
  if (exact_cos_) return *exact_cos_;
  Rational up = exact_rational(std::cos(radians_)) + widening();
  return up > 1 ? Rational(1) : up;
}

Rational Angle::cos_lower() const {
  if (exact_cos_) return *exact_cos_;
  Rational down = exact_rational(std::cos(radians_)) - widening();
  return down < -1 ? Rational(-1) : down;
}

bool Angle::exceeds_pi() const {
  if (pi_fraction_) return *pi_fraction_ > 1;
  return radians_ > std::numbers::pi;
}

std::string Angle::describe() const {
  if (pi_fraction_) return "pi*" + to_string(*pi_fraction_);
  if (exact_cos_) return "acos(" + to_string(*exact_cos_) + ")";
  return std::to_string(radians_);
}

}  // namespace sphcodes
