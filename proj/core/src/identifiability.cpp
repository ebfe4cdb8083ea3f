#include "wpdid/identifiability.hpp"

#include <cmath>

#include "wpdid/errors.hpp"

namespace wpdid {

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::Identifiable: return "Identifiable";
    case Verdict::Unidentifiable: return "Unidentifiable";
    case Verdict::BoundaryIdentifiable: return "BoundaryIdentifiable";
    case Verdict::IdentifiableByIncommensurability: return "IdentifiableByIncommensurability";
  }
  return "Unknown";
}

std::optional<Verdict> parse_verdict(std::string_view text) noexcept {
  for (auto v : {Verdict::Identifiable, Verdict::Unidentifiable, Verdict::BoundaryIdentifiable,
                 Verdict::IdentifiableByIncommensurability}) {
    if (to_string(v) == text) return v;
  }
  return std::nullopt;
}

namespace {

Integer attained_bound(const Rational& d) {
  return is_integer(d) ? Integer(floor(d) - 1) : floor(d);
}

QMaxVector q_max_from_doubles(const PairDistances& d) {
  QMaxVector out;
  out.reserve(d.size());
  for (double di : d.d) {
    const double f = std::floor(di);
    out.emplace_back(static_cast<long long>(f == di ? f - 1 : f));
  }
  return out;
}

}  // namespace

QMaxVector q_max_vector(const PairDistances& d, std::uint64_t approx_denominator_limit) {
  std::vector<Rational> values;
  try {
    values = rational_distances(d, approx_denominator_limit);
  } catch (const Error& e) {
    if (e.code() != Errc::IncommensurableDistances) throw;
    return q_max_from_doubles(d);
  }
  QMaxVector out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(attained_bound(v));
  return out;
}

bool primitive_fits_under_q_max(const RationalReduction& reduction, const QMaxVector& q_max) {
  if (reduction.D.size() != q_max.size()) throw Error(Errc::LengthMismatch, "D and q_max differ in length");
  for (std::size_t i = 0; i < q_max.size(); ++i) {
    if (reduction.D[i] > q_max[i]) return false;
  }
  return true;
}

IdentifiabilityReport check_identifiability(const SensorLayout& layout, std::uint64_t approx_denominator_limit) {
  return check_identifiability(pair_distances(layout), approx_denominator_limit);
}

IdentifiabilityReport check_identifiability(const PairDistances& d, std::uint64_t approx_denominator_limit) {
  IdentifiabilityReport report;
  report.distances = d;
  report.q_max = q_max_vector(d, approx_denominator_limit);

  try {
    report.reduction = reduce_to_primitive(d, approx_denominator_limit);
  } catch (const Error& e) {
    if (e.code() != Errc::IncommensurableDistances) throw;
    report.verdict = Verdict::IdentifiableByIncommensurability;
    return report;
  }

  // Two DOAs collide iff s * d[i] / 2 is an integer for every pair with
  // s = sin(theta1) - sin(theta2) in (0, 2). With d = scale * D and gcd(D) = 1
  // that forces s = 2k / scale, so a collision exists iff scale > 1.
  const Rational& scale = report.reduction->scale;
  if (scale < 1) {
    report.verdict = Verdict::Identifiable;
    return report;
  }
  if (scale == 1) {
    report.verdict = Verdict::BoundaryIdentifiable;
    return report;
  }

  report.verdict = Verdict::Unidentifiable;
  report.witness_q = report.reduction->D;
  for (Integer k = 1; Rational(k) < scale; ++k) {
    if (report.ambiguous_sine_offsets.size() == kMaxListedOffsets) {
      report.offsets_truncated = true;
      break;
    }
    report.ambiguous_sine_offsets.push_back(Rational(2 * k) / scale);
  }
  return report;
}

std::vector<DirectionPair> ambiguous_direction_pairs(const IdentifiabilityReport& report, std::size_t count) {
  if (report.verdict != Verdict::Unidentifiable) {
    throw Error(Errc::NotAmbiguous, "layout verdict is " + std::string(to_string(report.verdict)));
  }
  std::vector<DirectionPair> out;
  for (const auto& s : report.ambiguous_sine_offsets) {
    if (out.size() == count) break;
    const double half = to_double(s) / 2.0;
    out.push_back({std::asin(half), std::asin(-half)});
  }
  return out;
}

}  // namespace wpdid
