#pragma once

#include <optional>
#include <string>

#include "sphcodes/rational.hpp"

namespace sphcodes {

/// A separation angle theta in [0, 2*pi) together with whatever exact
/// knowledge of cos(theta) is available.
///
/// cos(theta) is rational exactly for theta/pi in {0, 1/3, 1/2, 2/3, 1, 4/3,
/// 3/2, 5/3}; those angles (given as a fraction of pi, or as a double within
/// 1e-14 of one) carry an exact cosine. Otherwise exact consumers get an
/// outward-widened rational enclosure of the floating cosine.
class Angle {
 public:
  /// theta = pi * frac, reduced into [0, 2).
  static Angle from_pi_fraction(const Rational& frac);
  static Angle from_radians(double radians);
  /// Exact cosine in [-1, 1]; theta = acos(cos) in [0, pi].
  static Angle from_cos(const Rational& cos_value);

  double radians() const { return radians_; }
  double cos() const;
  bool has_exact_cos() const { return exact_cos_.has_value(); }
  const std::optional<Rational>& exact_cos() const { return exact_cos_; }
  const std::optional<Rational>& pi_fraction() const { return pi_fraction_; }

  /// Rational >= cos(theta) (exact when known).
  Rational cos_upper() const;
  /// Rational <= cos(theta) (exact when known).
  Rational cos_lower() const;

  /// theta > pi, where (theta, 2*pi - theta) describe the same code condition.
  bool exceeds_pi() const;

  std::string describe() const;

 private:
  double radians_ = 0.0;
  std::optional<Rational> pi_fraction_;
  std::optional<Rational> exact_cos_;
};

}  // namespace sphcodes
