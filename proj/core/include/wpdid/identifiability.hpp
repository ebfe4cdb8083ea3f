#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "wpdid/geometry.hpp"
#include "wpdid/rational.hpp"

namespace wpdid {

enum class Verdict {
  Identifiable,
  Unidentifiable,
  /// Commensurate with scale exactly 1: the only colliding DOAs sit at the
  /// endfire limits +-pi/2, which the open DOA domain excludes.
  BoundaryIdentifiable,
  IdentifiableByIncommensurability,
};

std::string_view to_string(Verdict verdict) noexcept;
std::optional<Verdict> parse_verdict(std::string_view text) noexcept;

/// Largest attainable cycle count per pair: floor(d) for non-integral d and
/// d - 1 for integral d (sine differences stay strictly below 2).
using QMaxVector = std::vector<Integer>;

QMaxVector q_max_vector(const PairDistances& d,
                        std::uint64_t approx_denominator_limit = kDefaultDenominatorLimit);

/// Offsets beyond this count are dropped and the report marks the list as
/// truncated; only absurdly long apertures get there.
inline constexpr std::size_t kMaxListedOffsets = 100'000;

struct IdentifiabilityReport {
  Verdict verdict = Verdict::Identifiable;
  PairDistances distances;
  QMaxVector q_max;
  /// Absent for IdentifiableByIncommensurability.
  std::optional<RationalReduction> reduction;
  /// Primitive cycle vector D, present iff Unidentifiable.
  std::optional<std::vector<Integer>> witness_q;
  /// Every s = 2k/scale in (0, 2), ascending. Empty unless Unidentifiable.
  std::vector<Rational> ambiguous_sine_offsets;
  bool offsets_truncated = false;
};

IdentifiabilityReport check_identifiability(const SensorLayout& layout,
                                            std::uint64_t approx_denominator_limit = kDefaultDenominatorLimit);

IdentifiabilityReport check_identifiability(const PairDistances& d,
                                            std::uint64_t approx_denominator_limit = kDefaultDenominatorLimit);

/// Elementwise form of the ambiguity test: D[i] <= q_max[i] for every pair.
/// Equivalent to scale > 1; kept separate so the two can be cross-checked.
bool primitive_fits_under_q_max(const RationalReduction& reduction, const QMaxVector& q_max);

struct DirectionPair {
  double theta_high = 0.0;
  double theta_low = 0.0;
};

/// Up to `count` DOA pairs that share a wrapped phase vector, one per
/// ambiguous sine offset s (ascending), placed symmetrically about broadside:
/// sin(theta_high) = s/2, sin(theta_low) = -s/2.
/// Throws NotAmbiguous unless the report is Unidentifiable.
std::vector<DirectionPair> ambiguous_direction_pairs(const IdentifiabilityReport& report, std::size_t count);

struct LayoutCandidate {
  SensorLayout layout;
  Rational aperture;
  Verdict verdict;
};

/// Guard on max_aperture / step.
inline constexpr std::uint64_t kMaxLatticeSteps = 10'000;
/// Guard on the number of layouts the enumeration may visit.
inline constexpr std::uint64_t kMaxSearchCandidates = 1'000'000'000;

/// Enumerates n-sensor layouts on {0, step, 2 step, ...} up to max_aperture
/// and keeps those whose verdict is not Unidentifiable. Results are ordered by
/// descending aperture, ties by ascending positions, and the enumeration stops
/// after max_results hits. Throws SearchSpaceTooLarge when a guard trips.
std::vector<LayoutCandidate> search_identifiable_layouts(std::size_t n_sensors, const Rational& max_aperture,
                                                         const Rational& step, std::size_t max_results);

}  // namespace wpdid
