#include "wpdid/io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "wpdid/errors.hpp"

namespace wpdid {

using nlohmann::json;

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw Error(Errc::ParseError, "field '" + field + "': " + why);
}

json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

PairDistances LayoutFile::distances() const {
  return pairs ? pair_distances(layout, *pairs) : pair_distances(layout);
}

LayoutFile parse_layout_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::ParseError, "document must be an object");
  if (!doc.contains("positions")) bad_field("positions", "missing");
  const json& positions = doc.at("positions");
  if (!positions.is_array()) bad_field("positions", "must be an array");

  std::vector<Rational> exact;
  std::vector<double> floats;
  bool any_float = false;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const json& p = positions[i];
    const std::string where = "positions[" + std::to_string(i) + "]";
    if (p.is_string()) {
      try {
        exact.push_back(parse_rational(p.get<std::string>()));
      } catch (const Error& e) {
        bad_field(where, e.what());
      }
      floats.push_back(to_double(exact.back()));
    } else if (p.is_number_integer()) {
      exact.emplace_back(p.get<long long>());
      floats.push_back(static_cast<double>(p.get<long long>()));
    } else if (p.is_number_float()) {
      any_float = true;
      const double v = p.get<double>();
      exact.emplace_back(0);
      floats.push_back(v);
    } else {
      bad_field(where, "expected a decimal or \"p/q\" string or a number");
    }
  }

  LayoutFile out{[&] {
    try {
      return any_float ? make_layout(std::move(floats)) : make_layout(std::move(exact));
    } catch (const Error& e) {
      bad_field("positions", e.what());
    }
  }(), std::nullopt};

  if (doc.contains("pairs")) {
    const json& pairs = doc.at("pairs");
    if (!pairs.is_array()) bad_field("pairs", "must be an array of [u, v]");
    std::vector<SensorPair> parsed;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const json& p = pairs[i];
      const std::string where = "pairs[" + std::to_string(i) + "]";
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned()) {
        bad_field(where, "expected [u, v] with 1-based sensor indices");
      }
      const auto u = p[0].get<std::size_t>();
      const auto v = p[1].get<std::size_t>();
      if (u == 0 || v == 0) bad_field(where, "indices are 1-based");
      parsed.push_back({u - 1, v - 1});
    }
    try {
      (void)pair_distances(out.layout, parsed);
    } catch (const Error& e) {
      bad_field("pairs", e.what());
    }
    out.pairs = std::move(parsed);
  }
  return out;
}

LayoutFile read_layout_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open layout file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_layout_document(buf.str());
}

json layout_to_json(const SensorLayout& layout) {
  json positions = json::array();
  if (layout.exact()) {
    for (const auto& p : layout.exact_positions()) positions.push_back(format_rational(p));
  } else {
    for (double p : layout.positions()) positions.push_back(p);
  }
  return positions;
}

std::string format_layout_document(const LayoutFile& file) {
  json doc;
  doc["positions"] = layout_to_json(file.layout);
  if (file.pairs) {
    json pairs = json::array();
    for (const auto& p : *file.pairs) pairs.push_back({p.u + 1, p.v + 1});
    doc["pairs"] = std::move(pairs);
  }
  return doc.dump();
}

json integer_to_json(const Integer& value) {
  if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max()) {
    return value.convert_to<long long>();
  }
  return value.str();
}

namespace {

json integers_to_json(const std::vector<Integer>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(integer_to_json(v));
  return out;
}

}  // namespace

json report_to_json(const IdentifiabilityReport& report) {
  json doc;
  doc["verdict"] = std::string(to_string(report.verdict));

  json pairs = json::array();
  for (const auto& p : report.distances.pairs) pairs.push_back({p.u + 1, p.v + 1});
  doc["pairs"] = std::move(pairs);

  json d = json::array();
  if (report.distances.exact) {
    for (const auto& v : *report.distances.exact) d.push_back(format_rational(v));
  } else {
    for (double v : report.distances.d) d.push_back(v);
  }
  doc["d"] = std::move(d);

  if (report.reduction) {
    const auto& r = *report.reduction;
    doc["D"] = integers_to_json(r.D);
    doc["c"] = format_rational(r.scale);
    doc["I"] = format_rational(r.multiplier());
    doc["exact"] = r.exact;
    doc["approx_denominator_limit"] =
        r.approx_denominator_limit ? json(*r.approx_denominator_limit) : json(nullptr);
  } else {
    doc["D"] = nullptr;
    doc["c"] = nullptr;
    doc["I"] = nullptr;
    doc["exact"] = report.distances.exact.has_value();
    doc["approx_denominator_limit"] = nullptr;
  }
  doc["q_max"] = integers_to_json(report.q_max);
  doc["witness_q"] = report.witness_q ? integers_to_json(*report.witness_q) : json(nullptr);
  json offsets = json::array();
  for (const auto& s : report.ambiguous_sine_offsets) offsets.push_back(format_rational(s));
  doc["ambiguous_sine_offsets"] = std::move(offsets);
  doc["offsets_truncated"] = report.offsets_truncated;
  return doc;
}

json rmse_sweep_to_json(const SensorLayout& layout, const SweepSettings& settings, std::span<const RmsePoint> points) {
  json doc;
  doc["layout"] = layout_to_json(layout);
  doc["theta0"] = settings.theta0;
  doc["grid_size"] = settings.grid_size;
  doc["trials"] = settings.trials;
  doc["seed"] = settings.seed;
  json rows = json::array();
  for (const auto& p : points) {
    rows.push_back({{"snr_db", std::isinf(p.snr_db) ? json("inf") : json(p.snr_db)},
                    {"rmse_rad", number_or_null(p.rmse_rad)},
                    {"trials_failed", p.trials_failed}});
  }
  doc["points"] = std::move(rows);
  return doc;
}

json search_results_to_json(std::span<const LayoutCandidate> results) {
  json rows = json::array();
  for (const auto& r : results) {
    rows.push_back({{"positions", layout_to_json(r.layout)},
                    {"aperture", format_rational(r.aperture)},
                    {"verdict", std::string(to_string(r.verdict))}});
  }
  return rows;
}

}  // namespace wpdid
