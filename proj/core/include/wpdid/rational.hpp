#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace wpdid {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint64_t kDefaultDenominatorLimit = 1'000'000;

/// Relative tolerance a binary float must meet for a rational approximation
/// to be accepted. Decimal literals such as 3.6 land well inside it; values
/// like sqrt(2) need denominators far above any practical limit.
inline constexpr double kApproxRelTolerance = 64.0 * 2.220446049250313e-16;

/// Parses "p/q", an integer, or a decimal literal ("3.6", "-1.25e2") exactly.
/// Throws Error{ParseError} on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, always with an explicit denominator ("6/1").
std::string format_rational(const Rational& value);

std::string format_integer(const Integer& value);

double to_double(const Rational& value);

/// The exact binary value of a finite double as a rational.
Rational exact_rational(double value);

/// Smallest-denominator continued-fraction convergent of `value` that lies
/// within kApproxRelTolerance (relative) of it, or nullopt if every such
/// convergent has a denominator above `denominator_limit`.
std::optional<Rational> approximate_rational(double value, std::uint64_t denominator_limit);

bool is_integer(const Rational& value);

Integer floor(const Rational& value);

/// Largest positive rational g with every value an integer multiple of g.
/// Values must be positive.
Rational rational_gcd(std::span<const Rational> values);

}  // namespace wpdid
