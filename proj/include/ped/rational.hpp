#pragma once

#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ped {

/// Exact scalar used by every decision-making predicate.
using Rational = mpq_class;

/// Tolerance used by the float paths (circulant layout, ink reporting,
/// transcendental constants).
inline constexpr double kFloatTolerance = 1e-9;

/// Parses `p/q`, an integer, or a decimal literal (optionally with an
/// exponent) into an exact rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// `p/q`, or `p` when the denominator is one.
std::string format_rational(const Rational& value);

/// Twelve significant digits, the reporting format for floats.
std::string format_float(double value);

/// Largest p/q with q <= max_denominator such that `at_most(p, q)` holds,
/// where `at_most` is a monotone predicate "p/q <= x" for some x > 0.
/// Used to replace irrational targets like 1/(2*sqrt(2k)) by a safe
/// rational from below. Requires `at_most(0, 1)`.
Rational best_rational_at_most(
    const std::function<bool(const mpz_class&, const mpz_class&)>& at_most,
    long max_denominator);

}  // namespace ped
