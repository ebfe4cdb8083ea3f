#include "wpdid/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "wpdid/errors.hpp"

namespace wpdid {

namespace {

template <typename T>
void check_sorted_distinct(const std::vector<T>& sorted) {
  if (sorted.size() < 2) {
    throw Error(Errc::TooFewSensors, "a layout needs at least 2 sensors, got " + std::to_string(sorted.size()));
  }
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      throw Error(Errc::DuplicatePosition, "two sensors share a position");
    }
  }
}

}  // namespace

const std::vector<Rational>& SensorLayout::exact_positions() const {
  if (!exact_positions_) throw Error(Errc::InvalidArgument, "layout was built from floats and has no exact positions");
  return *exact_positions_;
}

SensorLayout make_layout(std::vector<Rational> positions) {
  std::sort(positions.begin(), positions.end());
  check_sorted_distinct(positions);
  const Rational origin = positions.front();
  SensorLayout layout;
  layout.positions_.reserve(positions.size());
  for (auto& p : positions) {
    p -= origin;
    layout.positions_.push_back(to_double(p));
  }
  layout.exact_positions_ = std::move(positions);
  return layout;
}

SensorLayout make_layout(std::vector<double> positions) {
  for (double p : positions) {
    if (!std::isfinite(p)) throw Error(Errc::InvalidArgument, "non-finite sensor position");
  }
  std::sort(positions.begin(), positions.end());
  check_sorted_distinct(positions);
  const double origin = positions.front();
  for (auto& p : positions) p -= origin;
  // Translation can collapse nearly equal large coordinates.
  check_sorted_distinct(positions);
  SensorLayout layout;
  layout.positions_ = std::move(positions);
  return layout;
}

double PairDistances::max() const {
  return d.empty() ? 0.0 : *std::max_element(d.begin(), d.end());
}

std::vector<SensorPair> all_pairs(std::size_t sensor_count) {
  std::vector<SensorPair> pairs;
  if (sensor_count >= 2) pairs.reserve(sensor_count * (sensor_count - 1) / 2);
  for (std::size_t u = 0; u < sensor_count; ++u) {
    for (std::size_t v = u + 1; v < sensor_count; ++v) pairs.push_back({u, v});
  }
  return pairs;
}

PairDistances pair_distances(const SensorLayout& layout) {
  const auto pairs = all_pairs(layout.size());
  return pair_distances(layout, pairs);
}

PairDistances pair_distances(const SensorLayout& layout, std::span<const SensorPair> pairs) {
  if (pairs.empty()) throw Error(Errc::InvalidPair, "at least one sensor pair is required");
  std::set<SensorPair> seen;
  for (const auto& p : pairs) {
    if (p.u >= p.v || p.v >= layout.size()) {
      throw Error(Errc::InvalidPair, "pair (" + std::to_string(p.u + 1) + "," + std::to_string(p.v + 1) +
                                         ") is not u < v within " + std::to_string(layout.size()) + " sensors");
    }
    if (!seen.insert(p).second) {
      throw Error(Errc::InvalidPair, "pair (" + std::to_string(p.u + 1) + "," + std::to_string(p.v + 1) + ") repeated");
    }
  }

  PairDistances out;
  out.pairs.assign(pairs.begin(), pairs.end());
  out.d.reserve(pairs.size());
  const auto& pos = layout.positions();
  if (layout.exact()) {
    const auto& exact = layout.exact_positions();
    std::vector<Rational> ed;
    ed.reserve(pairs.size());
    for (const auto& p : pairs) {
      ed.push_back(exact[p.v] - exact[p.u]);
      out.d.push_back(to_double(ed.back()));
    }
    out.exact = std::move(ed);
  } else {
    for (const auto& p : pairs) out.d.push_back(pos[p.v] - pos[p.u]);
  }
  return out;
}

PairDistances distances_from(std::vector<Rational> d) {
  if (d.empty()) throw Error(Errc::InvalidPair, "at least one distance is required");
  PairDistances out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] <= 0) throw Error(Errc::InvalidArgument, "distances must be positive");
    out.pairs.push_back({0, i + 1});
    out.d.push_back(to_double(d[i]));
  }
  out.exact = std::move(d);
  return out;
}

PairDistances distances_from(std::vector<double> d) {
  if (d.empty()) throw Error(Errc::InvalidPair, "at least one distance is required");
  PairDistances out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!(d[i] > 0) || !std::isfinite(d[i])) throw Error(Errc::InvalidArgument, "distances must be positive and finite");
    out.pairs.push_back({0, i + 1});
  }
  out.d = std::move(d);
  return out;
}

std::vector<Rational> rational_distances(const PairDistances& d, std::uint64_t approx_denominator_limit) {
  if (d.exact) return *d.exact;
  std::vector<Rational> out;
  out.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto approx = approximate_rational(d.d[i], approx_denominator_limit);
    if (!approx || *approx <= 0) {
      throw Error(Errc::IncommensurableDistances,
                  "distance " + std::to_string(i + 1) + " has no rational approximation with denominator <= " +
                      std::to_string(approx_denominator_limit));
    }
    out.push_back(std::move(*approx));
  }
  return out;
}

namespace {

// Commensurability only depends on ratios. When individual float distances
// cannot be rationalized, try the ratios to the shortest distance instead; the
// common scale is then itself a float.
std::optional<RationalReduction> reduce_by_ratios(const PairDistances& d, std::uint64_t limit) {
  const std::size_t ref = static_cast<std::size_t>(std::min_element(d.d.begin(), d.d.end()) - d.d.begin());
  std::vector<Rational> ratios;
  ratios.reserve(d.size());
  for (double di : d.d) {
    auto r = approximate_rational(di / d.d[ref], limit);
    if (!r || *r <= 0) return std::nullopt;
    ratios.push_back(std::move(*r));
  }
  const Rational g = rational_gcd(ratios);
  RationalReduction out;
  out.exact = false;
  out.approx_denominator_limit = limit;
  for (const auto& r : ratios) out.D.push_back(boost::multiprecision::numerator(Rational(r / g)));
  out.scale = exact_rational(d.d[ref] / out.D[ref].convert_to<double>());
  return out;
}

}  // namespace

RationalReduction reduce_to_primitive(const PairDistances& d, std::uint64_t approx_denominator_limit) {
  if (approx_denominator_limit == 0) throw Error(Errc::InvalidArgument, "denominator limit must be positive");
  std::vector<Rational> values;
  try {
    values = rational_distances(d, approx_denominator_limit);
  } catch (const Error& e) {
    if (e.code() != Errc::IncommensurableDistances) throw;
    if (auto by_ratio = reduce_by_ratios(d, approx_denominator_limit)) return *by_ratio;
    throw Error(Errc::IncommensurableDistances,
                "no common rational scale with denominator <= " + std::to_string(approx_denominator_limit));
  }
  RationalReduction out;
  out.exact = d.exact.has_value();
  if (!out.exact) out.approx_denominator_limit = approx_denominator_limit;
  out.scale = rational_gcd(values);
  out.D.reserve(values.size());
  for (const auto& v : values) {
    const Rational q = v / out.scale;
    out.D.push_back(boost::multiprecision::numerator(q));
  }
  return out;
}

}  // namespace wpdid
