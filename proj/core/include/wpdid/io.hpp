#pragma once

// JSON documents exchanged with other tools: layout files, identifiability
// reports, RMSE sweeps and search results. Rationals are always written as
// canonical "p/q" strings so that nothing is rounded on the way out.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "wpdid/geometry.hpp"
#include "wpdid/identifiability.hpp"
#include "wpdid/simulator.hpp"

namespace wpdid {

struct LayoutFile {
  SensorLayout layout;
  /// Zero-based; absent means all pairs.
  std::optional<std::vector<SensorPair>> pairs;

  PairDistances distances() const;
};

/// Layout document:
///   {"positions": ["0", "1.2", "6"], "pairs": [[1, 2], [1, 3]]}
/// Positions are decimal or "p/q" strings (exact) or JSON numbers (integers
/// are exact, any float makes the whole layout approximate). "pairs" is
/// optional and 1-based. Throws Error{ParseError} naming the offending field.
LayoutFile parse_layout_document(std::string_view text);
LayoutFile read_layout_file(const std::filesystem::path& path);

/// Inverse of parse_layout_document; exact positions become "p/q" strings.
std::string format_layout_document(const LayoutFile& file);

nlohmann::json integer_to_json(const Integer& value);

nlohmann::json report_to_json(const IdentifiabilityReport& report);

nlohmann::json layout_to_json(const SensorLayout& layout);

struct SweepSettings {
  double theta0 = 0.0;
  std::size_t grid_size = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

nlohmann::json rmse_sweep_to_json(const SensorLayout& layout, const SweepSettings& settings,
                                  std::span<const RmsePoint> points);

nlohmann::json search_results_to_json(std::span<const LayoutCandidate> results);

}  // namespace wpdid
