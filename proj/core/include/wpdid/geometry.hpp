#pragma once

// Array layouts on a line, in half-wavelength units (physical distance
// divided by lambda/2), and their pairwise distance vectors.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wpdid/rational.hpp"

namespace wpdid {

/// Sensors u < v, zero-based.
struct SensorPair {
  std::size_t u = 0;
  std::size_t v = 0;

  friend bool operator==(const SensorPair&, const SensorPair&) = default;
  friend auto operator<=>(const SensorPair&, const SensorPair&) = default;
};

/// Sorted, translation-normalized sensor positions (first sensor at 0).
///
/// A layout is either exact (built from rationals) or approximate (built from
/// binary floats). Approximate layouts keep their float positions untouched;
/// rational approximation is deferred to reduce_to_primitive so that the
/// denominator limit is an explicit, reported choice.
class SensorLayout {
 public:
  std::size_t size() const noexcept { return positions_.size(); }
  bool exact() const noexcept { return exact_positions_.has_value(); }

  /// Double view, always available.
  const std::vector<double>& positions() const noexcept { return positions_; }

  /// Exact view; throws Error{InvalidArgument} for approximate layouts.
  const std::vector<Rational>& exact_positions() const;

  double aperture() const noexcept { return positions_.back(); }

  friend bool operator==(const SensorLayout&, const SensorLayout&) = default;

 private:
  friend SensorLayout make_layout(std::vector<Rational> positions);
  friend SensorLayout make_layout(std::vector<double> positions);

  SensorLayout() = default;

  std::vector<double> positions_;
  std::optional<std::vector<Rational>> exact_positions_;
};

/// Sorts and translates so the first position is 0.
/// Throws TooFewSensors (< 2 entries) or DuplicatePosition.
SensorLayout make_layout(std::vector<Rational> positions);
SensorLayout make_layout(std::vector<double> positions);

struct PairDistances {
  std::vector<SensorPair> pairs;
  std::vector<double> d;
  /// Present iff the source layout was exact.
  std::optional<std::vector<Rational>> exact;

  std::size_t size() const noexcept { return d.size(); }
  double max() const;
};

/// All N(N-1)/2 unordered pairs in lexicographic order (1,2),(1,3),...,(2,3),...
std::vector<SensorPair> all_pairs(std::size_t sensor_count);

PairDistances pair_distances(const SensorLayout& layout);

/// Distances for a chosen subset of pairs. Pairs must satisfy u < v < N and be
/// unique; throws InvalidPair otherwise.
PairDistances pair_distances(const SensorLayout& layout, std::span<const SensorPair> pairs);

/// Distances given directly rather than through a layout. Values must be
/// positive; pairs are labelled (0,1), (0,2), ... as placeholders.
PairDistances distances_from(std::vector<Rational> d);
PairDistances distances_from(std::vector<double> d);

struct RationalReduction {
  std::vector<Integer> D;
  /// d[i] = scale * D[i]; the multiplier that makes d integral is 1/scale.
  Rational scale;
  bool exact = true;
  std::optional<std::uint64_t> approx_denominator_limit;

  Rational multiplier() const { return Rational(1) / scale; }
};

/// Expresses d as scale * D with D a primitive positive integer vector
/// (gcd(D) = 1). Exact distances are reduced exactly; float distances are
/// first replaced by continued-fraction approximations with denominators up to
/// `approx_denominator_limit`. If some float distance has no such
/// approximation, the ratios to the shortest distance are rationalized instead
/// and the scale is kept as the binary value of the shortest distance over its
/// D entry. IncommensurableDistances is thrown only when the ratios fail too.
RationalReduction reduce_to_primitive(const PairDistances& d,
                                      std::uint64_t approx_denominator_limit = kDefaultDenominatorLimit);

/// The rational distances a reduction operates on: the exact ones, or the
/// accepted approximations. Throws IncommensurableDistances like
/// reduce_to_primitive.
std::vector<Rational> rational_distances(const PairDistances& d, std::uint64_t approx_denominator_limit);

}  // namespace wpdid
