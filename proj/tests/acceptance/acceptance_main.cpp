// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "wpdid/errors.hpp"
#include "wpdid/estimator.hpp"
#include "wpdid/identifiability.hpp"
#include "wpdid/phasewrap.hpp"
#include "wpdid/simulator.hpp"

namespace {

using namespace wpdid;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

std::vector<Rational> exact(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(parse_rational(v));
  return out;
}

std::vector<Integer> ints(std::initializer_list<int> values) { return {values.begin(), values.end()}; }

Outcome ac1_example_a() {
  Outcome o;
  const auto r = check_identifiability(make_layout(exact({"0", "1.2", "6"})));
  o.require(r.distances.exact && *r.distances.exact == exact({"1.2", "6", "4.8"}), "d != [1.2, 6, 4.8]");
  o.require(r.reduction && r.reduction->D == ints({1, 5, 4}), "D != [1, 5, 4]");
  o.require(r.reduction && r.reduction->multiplier() == Rational(5, 6), "I != 5/6");
  o.require(r.verdict == Verdict::Unidentifiable, "verdict is not Unidentifiable");
  o.require(r.witness_q && *r.witness_q == ints({1, 5, 4}), "witness_q != [1, 5, 4]");
  return o;
}

Outcome ac2_example_b() {
  Outcome o;
  const auto r = check_identifiability(make_layout(exact({"0", "3.6", "8.1"})));
  o.require(r.distances.exact && *r.distances.exact == exact({"3.6", "8.1", "4.5"}), "d != [3.6, 8.1, 4.5]");
  o.require(r.reduction && r.reduction->D == ints({4, 9, 5}), "D != [4, 9, 5]");
  o.require(r.reduction && r.reduction->multiplier() == Rational(10, 9), "I != 10/9");
  o.require(r.q_max == ints({3, 8, 4}), "q_max != [3, 8, 4]");
  o.require(r.verdict == Verdict::Identifiable, "verdict is not Identifiable");
  return o;
}

Outcome ac3_half_wavelength_rule() {
  Outcome o;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> count(2, 6);
  std::uniform_int_distribution<int> far(0, 500);
  std::uniform_int_distribution<int> close(1, 10);
  std::uniform_real_distribution<double> real_far(0.0, 50.0);
  std::uniform_real_distribution<double> real_close(1e-3, 1.0);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = count(rng);
    try {
      if (trial % 4 == 3) {
        std::vector<double> pos{0.0, real_close(rng)};
        while (static_cast<int>(pos.size()) < n) pos.push_back(real_far(rng));
        if (check_identifiability(make_layout(pos)).verdict == Verdict::Unidentifiable) ++failures;
      } else {
        const Rational anchor(far(rng), 10);
        std::vector<Rational> pos{anchor, anchor + Rational(close(rng), 10)};
        while (static_cast<int>(pos.size()) < n) {
          Rational p(far(rng), 10);
          if (std::find(pos.begin(), pos.end(), p) == pos.end()) pos.push_back(p);
        }
        if (check_identifiability(make_layout(pos)).verdict == Verdict::Unidentifiable) ++failures;
      }
    } catch (const Error&) {
      // Duplicate float positions are astronomically unlikely; count as failure.
      ++failures;
    }
  }
  o.require(failures == 0, std::to_string(failures) + " of 200 layouts reported Unidentifiable");
  return o;
}

Outcome ac4_oracle_equivalence() {
  Outcome o;
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> idx(1, 30);
  int agree = 0, ambiguous = 0;
  for (int trial = 0; trial < 100;) {
    int a = idx(rng), b = idx(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    ++trial;
    const auto layout = make_layout(std::vector<Rational>{Rational(0), Rational(3 * a, 10), Rational(3 * b, 10)});
    const auto report = check_identifiability(layout);
    // Ambiguous sines are multiples of 1/c, so a grid holding them holds
    // every exact witness.
    const std::size_t g = grid_size_containing(report.reduction->multiplier(), 1e-3);
    const bool collides = !collision_oracle(report.distances, g).empty();
    const bool unidentifiable = report.verdict == Verdict::Unidentifiable;
    ambiguous += unidentifiable ? 1 : 0;
    if (collides == unidentifiable) {
      ++agree;
    } else if (o.pass) {
      o.require(false, "disagreement at [0, " + format_rational(Rational(3 * a, 10)) + ", " +
                           format_rational(Rational(3 * b, 10)) + "]");
    }
  }
  if (o.pass) o.detail = std::to_string(agree) + "/100 agree, " + std::to_string(ambiguous) + " unidentifiable";
  return o;
}

Outcome ac5_ambiguity_witness() {
  Outcome o;
  const auto d = pair_distances(make_layout(exact({"0", "1.2", "6"})));
  const auto hi = wrapped_vector(d, std::asin(5.0 / 6.0));
  const auto lo = wrapped_vector(d, std::asin(-5.0 / 6.0));
  for (std::size_t i = 0; i < hi.size(); ++i) {
    o.require(circular_distance(hi[i], lo[i]) <= 1e-9, "wrapped vectors differ at pair " + std::to_string(i));
  }
  const auto grid = build_wpdp(d, 4001);
  const auto est = match_doa(hi, grid);
  bool plus = false, minus = false;
  for (const auto& c : est.clusters) {
    const double s = grid.sine_grid()[c.best];
    plus = plus || std::fabs(s - 5.0 / 6.0) <= grid.step();
    minus = minus || std::fabs(s + 5.0 / 6.0) <= grid.step();
  }
  o.require(plus && minus, "candidate clusters missing one sign");
  return o;
}

Outcome ac6_wrapping_identities() {
  Outcome o;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> dist(1e-3, 100.0);
  std::uniform_real_distribution<double> theta(-kPi / 2, kPi / 2);
  std::uniform_int_distribution<int> k(-1000, 1000);
  long bad = 0;
  for (int i = 0; i < 100000; ++i) {
    const double d = dist(rng);
    const double t = theta(rng);
    if (std::fabs(t) >= kPi / 2) continue;
    const double phi = true_phase(d, t);
    const auto parts = decompose(phi);
    const double w = wrap(phi);
    const bool identity = std::fabs(phi - (parts.psi + kTwoPi * static_cast<double>(parts.q))) <= 1e-9;
    const bool idempotent = wrap(w) == w && w >= -kPi && w < kPi;
    const bool periodic = circular_distance(wrap(phi + kTwoPi * k(rng)), w) <= 1e-9;
    if (!(identity && idempotent && periodic)) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " cases violated an identity");
  return o;
}

Outcome ac7_noise_free_pipeline() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> count(2, 6);
  std::uniform_real_distribution<double> pos(0.05, 30.0);
  std::uniform_real_distribution<double> theta(-1.55, 1.55);
  std::uniform_real_distribution<double> time(-1e4, 1e4);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    std::vector<double> p{0.0};
    const int n = count(rng);
    while (static_cast<int>(p.size()) < n) p.push_back(pos(rng));
    const auto layout = make_layout(p);
    const auto d = pair_distances(layout);
    const SourceConfig src{1.0, 3.0, theta(rng), time(rng)};
    const auto psi = principal_phases(generate_snapshot(layout, src, kNoiseFree, 0), d.pairs);
    const auto ref = wrapped_vector(d, src.theta0);
    for (std::size_t k = 0; k < psi.size(); ++k) worst = std::max(worst, circular_distance(psi[k], ref[k]));
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "max deviation %.3g rad", worst);
  o.require(worst <= 1e-9, buf);
  if (o.pass) o.detail = buf;
  return o;
}

Outcome ac8_monte_carlo_trend() {
  Outcome o;
  const auto layout = make_layout(exact({"0", "3.6", "8.1"}));
  const std::vector<double> snr{0.0, 10.0, 20.0, 30.0};
  MonteCarloOptions options;
  options.trials = 500;
  options.grid_size = 4001;
  options.seed = 1;
  const auto points = monte_carlo_rmse(layout, std::asin(0.3), snr, options);
  int inversions = 0;
  bool small = true;
  std::string values;
  for (std::size_t i = 0; i < points.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%.4g", i ? ", " : "", points[i].rmse_rad);
    values += buf;
    if (i > 0 && points[i].rmse_rad > points[i - 1].rmse_rad) {
      ++inversions;
      small = small && points[i].rmse_rad <= 1.1 * points[i - 1].rmse_rad;
    }
  }
  o.require(inversions <= 1 && small, "RMSE not non-increasing: [" + values + "]");
  if (o.pass) o.detail = "RMSE [" + values + "] rad";
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  double time_limit_s;  // <= 0 means no limit
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "layout [0, 1.2, 6] regression", 1.0, ac1_example_a},
      {"AC2", "layout [0, 3.6, 8.1] regression", 1.0, ac2_example_b},
      {"AC3", "half-wavelength rule, 200 layouts", 0.0, ac3_half_wavelength_rule},
      {"AC4", "collision oracle equivalence, 100 layouts", 120.0, ac4_oracle_equivalence},
      {"AC5", "ambiguity witness for [0, 1.2, 6]", 0.0, ac5_ambiguity_witness},
      {"AC6", "wrapping identities, 1e5 cases", 0.0, ac6_wrapping_identities},
      {"AC7", "noise-free pipeline identity, 100 cases", 0.0, ac7_noise_free_pipeline},
      {"AC8", "Monte Carlo RMSE trend", 60.0, ac8_monte_carlo_trend},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.time_limit_s > 0 && elapsed >= c.time_limit_s) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "took %.2f s, limit %.0f s", elapsed, c.time_limit_s);
      o.pass = false;
      o.detail = buf;
    }
    if (!o.pass) ++failed;
    std::printf("%s %s  %s (%.3f s)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.title, elapsed,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
