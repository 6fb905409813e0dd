#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace sphcodes {

/// Arbitrary-precision rational. All certified arithmetic goes through this type.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", "-p", "0.125", "1e-3", "-2.5E+2". Throws DomainError on garbage
/// or zero denominators.
Rational parse_rational(std::string_view text);

/// Comma separated list of rationals, e.g. "0,1/2,-3".
std::vector<Rational> parse_rational_list(std::string_view text);

/// Canonical "p/q" (or "p" for integers).
std::string to_string(const Rational& q);

/// Exact value of a finite double (every double is a dyadic rational).
Rational exact_rational(double x);

double to_double(const Rational& q);

Integer floor(const Rational& q);

/// Smallest-denominator continued-fraction convergent within `tol` of x.
Rational best_rational_within(double x, double tol);

}  // namespace sphcodes
