#include "wpdid_cli/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "wpdid/errors.hpp"
#include "wpdid/estimator.hpp"
#include "wpdid/identifiability.hpp"
#include "wpdid/io.hpp"
#include "wpdid/phasewrap.hpp"
#include "wpdid/simulator.hpp"

#ifndef WPDID_VERSION
#define WPDID_VERSION "unknown"
#endif

namespace wpdid::cli {
namespace {

using nlohmann::json;

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open layout file " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(Errc::InvalidArgument, "SHA-256 digest failed");
  }
  std::string hex = "sha256:";
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

json manifest(const std::string& command, json parameters, const std::optional<std::string>& input_bytes) {
  return json{{"command", command},
              {"parameters", std::move(parameters)},
              {"version", WPDID_VERSION},
              {"input_digest", input_bytes ? json(sha256_hex(*input_bytes)) : json(nullptr)}};
}

double parse_real(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last || !std::isfinite(value)) {
    throw Error(Errc::InvalidArgument, what + ": not a finite real number: '" + text + "'");
  }
  return value;
}

/// Real radians or "asin:p/q" (sine given exactly).
double parse_theta(const std::string& text) {
  constexpr std::string_view prefix = "asin:";
  if (text.rfind(prefix, 0) == 0) {
    const Rational s = parse_rational(text.substr(prefix.size()));
    if (s <= -1 || s >= 1) throw Error(Errc::DomainError, "--theta0: sine must lie in (-1, 1)");
    return std::asin(to_double(s));
  }
  return parse_real(text, "--theta0");
}

std::vector<double> parse_snr_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "inf" || item == "+inf" || item == "Inf") {
      out.push_back(kNoiseFree);
    } else {
      out.push_back(parse_real(item, "--snr"));
    }
  }
  if (out.empty() || text.back() == ',') throw Error(Errc::InvalidArgument, "--snr: expected a comma list of dB values");
  return out;
}

json snr_list_to_json(const std::vector<double>& snr) {
  json out = json::array();
  for (double s : snr) out.push_back(std::isinf(s) ? json("inf") : json(s));
  return out;
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

struct CheckArgs {
  std::string layout;
  std::uint64_t denominator_limit = kDefaultDenominatorLimit;
};

int cmd_check(const CheckArgs& a, std::ostream& out) {
  const std::string bytes = read_bytes(a.layout);
  const LayoutFile file = parse_layout_document(bytes);
  const auto report = check_identifiability(file.distances(), a.denominator_limit);
  json params{{"layout", a.layout}, {"denominator_limit", a.denominator_limit}};
  emit(out, json{{"manifest", manifest("check", std::move(params), bytes)}, {"report", report_to_json(report)}});
  switch (report.verdict) {
    case Verdict::Unidentifiable: return kExitUnidentifiable;
    case Verdict::BoundaryIdentifiable: return kExitBoundary;
    default: return kExitOk;
  }
}

struct WpdpArgs {
  std::string layout;
  std::size_t grid = 4001;
  std::string out_path;
};

int cmd_wpdp(const WpdpArgs& a, std::ostream& out) {
  const std::string bytes = read_bytes(a.layout);
  const LayoutFile file = parse_layout_document(bytes);
  const auto grid = build_wpdp(file.distances(), a.grid);
  json params{{"layout", a.layout}, {"grid", a.grid}};
  const std::string header = "# " + manifest("wpdp", std::move(params), bytes).dump() + "\n";
  if (a.out_path.empty()) {
    out << header;
    write_wpdp_csv(out, grid);
    return kExitOk;
  }
  std::ofstream file_out(a.out_path, std::ios::binary);
  if (!file_out) throw Error(Errc::InvalidArgument, "--out: cannot write " + a.out_path);
  file_out << header;
  write_wpdp_csv(file_out, grid);
  if (!file_out) throw Error(Errc::InvalidArgument, "--out: write failed for " + a.out_path);
  return kExitOk;
}

struct SimulateArgs {
  std::string layout;
  std::string theta0;
  std::string snr = "inf";
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t grid = 4001;
  unsigned threads = 1;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const std::string bytes = read_bytes(a.layout);
  const LayoutFile file = parse_layout_document(bytes);
  if (file.pairs) throw Error(Errc::InvalidArgument, "simulate uses all sensor pairs; remove 'pairs' from the layout file");
  const double theta0 = parse_theta(a.theta0);
  const auto snr = parse_snr_list(a.snr);
  MonteCarloOptions options;
  options.trials = a.trials;
  options.grid_size = a.grid;
  options.seed = a.seed;
  options.threads = a.threads;
  const auto points = monte_carlo_rmse(file.layout, theta0, snr, options);
  json params{{"layout", a.layout}, {"theta0", a.theta0}, {"theta0_rad", theta0}, {"snr", snr_list_to_json(snr)},
              {"trials", a.trials},   {"seed", a.seed},     {"grid", a.grid}};
  const SweepSettings settings{theta0, a.grid, a.trials, a.seed};
  emit(out, json{{"manifest", manifest("simulate", std::move(params), bytes)},
                 {"sweep", rmse_sweep_to_json(file.layout, settings, points)}});
  return kExitOk;
}

struct SearchArgs {
  std::size_t sensors = 3;
  std::string max_aperture;
  std::string step;
  std::size_t limit = 100;
};

int cmd_search(const SearchArgs& a, std::ostream& out) {
  const Rational max_aperture = parse_rational(a.max_aperture);
  const Rational step = parse_rational(a.step);
  const auto results = search_identifiable_layouts(a.sensors, max_aperture, step, a.limit);
  json params{{"sensors", a.sensors},
              {"max_aperture", format_rational(max_aperture)},
              {"step", format_rational(step)},
              {"limit", a.limit}};
  emit(out, json{{"manifest", manifest("search", std::move(params), std::nullopt)},
                 {"layouts", search_results_to_json(results)}});
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Wrapped phase-difference identifiability of linear sensor arrays", "wpdid"};
  app.set_version_flag("--version", WPDID_VERSION);
  app.require_subcommand(1);

  CheckArgs check;
  auto* c = app.add_subcommand("check", "Decide identifiability of a layout; exit 0/2/3 encodes the verdict");
  c->add_option("--layout", check.layout, "Layout JSON file")->required();
  c->add_option("--denominator-limit", check.denominator_limit, "Largest denominator when rationalizing floats")
      ->check(CLI::PositiveNumber);

  WpdpArgs wpdp;
  auto* w = app.add_subcommand("wpdp", "Tabulate the wrapped phase-difference pattern as CSV");
  w->add_option("--layout", wpdp.layout, "Layout JSON file")->required();
  w->add_option("--grid", wpdp.grid, "Number of sine grid points");
  w->add_option("--out", wpdp.out_path, "Output CSV path (default: standard output)");

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Monte Carlo RMSE of the grid-search estimator versus SNR");
  s->add_option("--layout", sim.layout, "Layout JSON file")->required();
  s->add_option("--theta0", sim.theta0, "True direction in rad, or asin:p/q")->required();
  s->add_option("--snr", sim.snr, "Comma-separated SNR list in dB; 'inf' means noise-free");
  s->add_option("--trials", sim.trials, "Trials per SNR point");
  s->add_option("--seed", sim.seed, "Base RNG seed");
  s->add_option("--grid", sim.grid, "Number of sine grid points");
  s->add_option("--threads", sim.threads, "Worker threads (does not change results)")->check(CLI::PositiveNumber);

  SearchArgs search;
  auto* q = app.add_subcommand("search", "List non-ambiguous layouts on a lattice, largest aperture first");
  q->add_option("--sensors", search.sensors, "Number of sensors")->required();
  q->add_option("--max-aperture", search.max_aperture, "Largest aperture, decimal or p/q")->required();
  q->add_option("--step", search.step, "Lattice step, decimal or p/q")->required();
  q->add_option("--limit", search.limit, "Maximum number of layouts to list");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (c->parsed()) return cmd_check(check, out);
    if (w->parsed()) return cmd_wpdp(wpdp, out);
    if (s->parsed()) return cmd_simulate(sim, out);
    return cmd_search(search, out);
  } catch (const Error& e) {
    err << "wpdid: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "wpdid: internal error: " << e.what() << '\n';
  }
  return kExitError;
}

}  // namespace wpdid::cli
