#include "wpdid/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "wpdid/errors.hpp"

namespace wpdid {

namespace mp = boost::multiprecision;

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_digits(std::string_view s) { return Integer(std::string(s)); }

Integer pow10(std::uint64_t exponent) {
  Integer result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) result *= 10;
  return result;
}

[[noreturn]] void bad_number(std::string_view text, std::string_view why) {
  throw Error(Errc::ParseError,
              "cannot parse \"" + std::string(text) + "\" as a rational: " + std::string(why));
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  long long exponent = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view exp_part = s.substr(epos + 1);
    s = s.substr(0, epos);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 4) bad_number(text, "bad exponent");
    exponent = std::stoll(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad_number(text, "no digits");
  if (!int_part.empty() && !all_digits(int_part)) bad_number(text, "unexpected character");
  if (!frac_part.empty() && !all_digits(frac_part)) bad_number(text, "unexpected character");

  Integer mantissa = 0;
  if (!int_part.empty()) mantissa = parse_digits(int_part);
  if (!frac_part.empty()) {
    mantissa = mantissa * pow10(frac_part.size()) + parse_digits(frac_part);
  }
  exponent -= static_cast<long long>(frac_part.size());

  Rational value = exponent >= 0 ? Rational(mantissa * pow10(exponent))
                                 : Rational(mantissa, pow10(-exponent));
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) bad_number(text, "empty string");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    bool negative = false;
    if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
      negative = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) bad_number(text, "expected p/q with integer p and q");
    Integer q = parse_digits(den);
    if (q == 0) bad_number(text, "zero denominator");
    Integer p = parse_digits(num);
    return Rational(negative ? Integer(-p) : p, q);
  }
  return parse_decimal(text);
}

std::string format_rational(const Rational& value) {
  return mp::numerator(value).str() + "/" + mp::denominator(value).str();
}

std::string format_integer(const Integer& value) { return value.str(); }

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational exact_rational(double value) {
  if (!std::isfinite(value)) throw Error(Errc::InvalidArgument, "non-finite value");
  if (value == 0.0) return Rational(0);
  int exp2 = 0;
  const double frac = std::frexp(std::fabs(value), &exp2);
  const auto mantissa = static_cast<std::int64_t>(std::ldexp(frac, 53));
  exp2 -= 53;
  Integer num = mantissa;
  Rational result;
  if (exp2 >= 0) {
    result = Rational(num << exp2);
  } else {
    result = Rational(num, Integer(1) << -exp2);
  }
  return value < 0 ? Rational(-result) : result;
}

std::optional<Rational> approximate_rational(double value, std::uint64_t denominator_limit) {
  if (denominator_limit == 0) throw Error(Errc::InvalidArgument, "denominator limit must be positive");
  const Rational target = exact_rational(value);
  const bool negative = target < 0;
  const Rational magnitude = negative ? Rational(-target) : target;
  const Rational tolerance =
      exact_rational(kApproxRelTolerance) * (magnitude > 1 ? magnitude : Rational(1));

  Integer num = mp::numerator(magnitude);
  Integer den = mp::denominator(magnitude);
  Integer h_prev = 1, h_prev2 = 0;
  Integer k_prev = 0, k_prev2 = 1;
  const Integer limit = denominator_limit;

  while (den != 0) {
    const Integer a = num / den;
    const Integer h = a * h_prev + h_prev2;
    const Integer k = a * k_prev + k_prev2;
    if (k > limit) return std::nullopt;
    const Rational candidate(h, k);
    const Rational err = candidate > magnitude ? Rational(candidate - magnitude)
                                               : Rational(magnitude - candidate);
    if (err <= tolerance) return negative ? Rational(-candidate) : candidate;
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    Integer rem = num - a * den;
    num = den;
    den = rem;
  }
  return std::nullopt;
}

bool is_integer(const Rational& value) { return mp::denominator(value) == 1; }

Integer floor(const Rational& value) {
  const Integer& num = mp::numerator(value);
  const Integer& den = mp::denominator(value);
  Integer q = num / den;
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

Rational rational_gcd(std::span<const Rational> values) {
  if (values.empty()) throw Error(Errc::InvalidArgument, "gcd of an empty set");
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& v : values) {
    if (v <= 0) throw Error(Errc::InvalidArgument, "gcd requires positive values");
    num_gcd = mp::gcd(num_gcd, mp::numerator(v));
    den_lcm = mp::lcm(den_lcm, mp::denominator(v));
  }
  return Rational(num_gcd, den_lcm);
}

}  // namespace wpdid
