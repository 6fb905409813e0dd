#pragma once

#include <optional>
#include <vector>

#include "sphcodes/polynomial.hpp"

namespace sphcodes {

/// Canonical Sturm chain p, p', -rem(...), ... of a square-free polynomial.
///
/// Sign variations V(x) are right-continuous in x, so for square-free p the
/// number of distinct real roots in the half-open interval (a, b] is V(a) - V(b),
/// whether or not a or b are roots themselves.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& square_free);

  int variations_at(const Rational& x) const;
  int variations_at_plus_infinity() const;
  int variations_at_minus_infinity() const;

  /// Distinct roots in (a, b].
  int count_roots(const Rational& a, const Rational& b) const;
  /// Distinct roots in (a, +inf).
  int count_roots_above(const Rational& a) const;

  const std::vector<Polynomial>& chain() const { return chain_; }

 private:
  std::vector<Polynomial> chain_;
};

/// Half-open isolating intervals (lo, hi], each holding exactly one distinct real
/// root of p, covering all roots of p in (a, b]. Intervals are refined until
/// their width is at most `max_width` (0 disables refinement).
struct RootInterval {
  Rational lo;
  Rational hi;
};
std::vector<RootInterval> isolate_roots(const Polynomial& p, const Rational& a, const Rational& b,
                                        const Rational& max_width = Rational(0));

/// Exact decision of "p(r) <= 0 for all r in the set"; on failure `witness`
/// holds a rational point where p is strictly positive.
struct SignCertificate {
  bool holds = false;
  std::optional<Rational> witness;
};

/// p <= 0 on the closed interval [lo, hi].
SignCertificate certify_nonpositive(const Polynomial& p, const Rational& lo, const Rational& hi);

/// p <= 0 on the closed half-line [lo, +inf).
SignCertificate certify_nonpositive_above(const Polynomial& p, const Rational& lo);

}  // namespace sphcodes
