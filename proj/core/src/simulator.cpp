#include "wpdid/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <thread>

#include "wpdid/errors.hpp"
#include "wpdid/estimator.hpp"
#include "wpdid/phasewrap.hpp"

namespace wpdid {

namespace {

void check_theta(double theta) {
  if (!(std::fabs(theta) < kPi / 2)) {
    throw Error(Errc::DomainError, "theta must lie in (-pi/2, pi/2), got " + std::to_string(theta));
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::vector<Complex> steering_vector(const SensorLayout& layout, double theta) {
  check_theta(theta);
  const double s = std::sin(theta);
  std::vector<Complex> a;
  a.reserve(layout.size());
  for (double r : layout.positions()) a.push_back(std::polar(1.0, -kPi * r * s));
  return a;
}

Snapshot generate_snapshot(const SensorLayout& layout, const SourceConfig& source, double snr_db, std::uint64_t seed) {
  if (!(source.amplitude > 0)) throw Error(Errc::InvalidArgument, "amplitude must be positive");
  if (!(source.frequency > 0)) throw Error(Errc::InvalidArgument, "frequency must be positive");
  if (std::isnan(snr_db) || snr_db == -kNoiseFree) throw Error(Errc::InvalidArgument, "snr_db must be a number or +inf");

  const Complex signal = std::polar(source.amplitude, -kTwoPi * source.frequency * source.time);
  Snapshot snap;
  snap.x = steering_vector(layout, source.theta0);
  for (auto& xk : snap.x) xk *= signal;

  if (snr_db == kNoiseFree) return snap;

  const double variance = source.amplitude * source.amplitude * std::pow(10.0, -snr_db / 10.0);
  snap.noise_sigma = std::sqrt(variance);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> component(0.0, std::sqrt(variance / 2.0));
  for (auto& xk : snap.x) {
    const double re = component(rng);
    const double im = component(rng);
    xk += Complex(re, im);
  }
  return snap;
}

std::vector<double> principal_phases(const Snapshot& snapshot, std::span<const SensorPair> pairs) {
  std::vector<double> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) {
    if (p.u >= snapshot.x.size() || p.v >= snapshot.x.size()) {
      throw Error(Errc::InvalidPair, "pair index outside snapshot of " + std::to_string(snapshot.x.size()) + " sensors");
    }
    const Complex prod = snapshot.x[p.u] * std::conj(snapshot.x[p.v]);
    if (std::abs(prod) < 1e-300) throw Error(Errc::ZeroMagnitude, "phase of a zero product is undefined");
    double psi = std::arg(prod);  // (-pi, pi]
    if (psi >= kPi) psi = -kPi;
    out.push_back(psi);
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t snr_index, std::size_t trial_index) {
  const std::uint64_t key = (static_cast<std::uint64_t>(snr_index) << 32) ^ static_cast<std::uint64_t>(trial_index);
  return seed ^ splitmix64(key);
}

std::vector<RmsePoint> monte_carlo_rmse(const SensorLayout& layout, double theta0, std::span<const double> snr_db,
                                        const MonteCarloOptions& options) {
  check_theta(theta0);
  if (options.trials == 0) throw Error(Errc::InvalidArgument, "trials must be at least 1");
  for (double snr : snr_db) {
    if (std::isnan(snr) || snr == -kNoiseFree) throw Error(Errc::InvalidArgument, "snr_db must be a number or +inf");
  }

  const auto pairs = all_pairs(layout.size());
  const auto grid = build_wpdp(pair_distances(layout, pairs), options.grid_size);
  SourceConfig source;
  source.theta0 = theta0;

  std::vector<RmsePoint> out;
  out.reserve(snr_db.size());
  std::vector<std::optional<double>> errors(options.trials);
  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(options.trials)));

  for (std::size_t si = 0; si < snr_db.size(); ++si) {
    auto run = [&](std::size_t begin, std::size_t end) {
      for (std::size_t t = begin; t < end; ++t) {
        try {
          const auto snap = generate_snapshot(layout, source, snr_db[si], trial_seed(options.seed, si, t));
          const auto psi = principal_phases(snap, pairs);
          errors[t] = match_doa(psi, grid).theta_hat - theta0;
        } catch (const Error&) {
          errors[t].reset();
        }
      }
    };
    if (workers == 1) {
      run(0, options.trials);
    } else {
      std::vector<std::jthread> pool;
      const std::size_t chunk = (options.trials + workers - 1) / workers;
      for (unsigned w = 0; w < workers; ++w) {
        const std::size_t begin = w * chunk;
        const std::size_t end = std::min(options.trials, begin + chunk);
        if (begin < end) pool.emplace_back(run, begin, end);
      }
    }

    RmsePoint point;
    point.snr_db = snr_db[si];
    double sum_sq = 0.0;
    std::size_t ok = 0;
    for (const auto& e : errors) {
      if (!e) {
        ++point.trials_failed;
        continue;
      }
      sum_sq += *e * *e;
      ++ok;
    }
    point.rmse_rad = ok ? std::sqrt(sum_sq / static_cast<double>(ok)) : std::nan("");
    out.push_back(point);
  }
  return out;
}

}  // namespace wpdid
