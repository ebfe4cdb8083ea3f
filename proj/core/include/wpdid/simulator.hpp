#pragma once

// Single-snapshot far-field observations of a complex sinusoid on a linear
// array, principal phase extraction, and seeded Monte Carlo RMSE sweeps.
//
// Noise is circularly-symmetric complex Gaussian drawn from std::mt19937_64
// through std::normal_distribution. Runs are reproducible for a given
// standard library; bit equality across library implementations is not
// promised because normal_distribution's algorithm is unspecified.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "wpdid/geometry.hpp"

namespace wpdid {

using Complex = std::complex<double>;

inline constexpr double kNoiseFree = std::numeric_limits<double>::infinity();

struct SourceConfig {
  double amplitude = 1.0;
  double frequency = 1.0;  // cycles per unit time
  double theta0 = 0.0;     // rad, |theta0| < pi/2
  double time = 0.0;
};

struct Snapshot {
  std::vector<Complex> x;
  double noise_sigma = 0.0;
};

/// a_k = exp(-j pi r_k sin(theta)); a_0 = 1. Throws DomainError.
std::vector<Complex> steering_vector(const SensorLayout& layout, double theta);

/// x = a(theta0) s(t) + w with s(t) = A exp(-j 2 pi f t) and per-sensor noise
/// variance sigma^2 = A^2 10^(-snr_db / 10), split evenly between real and
/// imaginary parts. snr_db = +inf gives w = 0.
Snapshot generate_snapshot(const SensorLayout& layout, const SourceConfig& source, double snr_db, std::uint64_t seed);

/// arg(x_u conj(x_v)) in [-pi, pi) for each pair. Throws ZeroMagnitude when a
/// product is (numerically) zero and InvalidPair for out-of-range indices.
std::vector<double> principal_phases(const Snapshot& snapshot, std::span<const SensorPair> pairs);

struct RmsePoint {
  double snr_db = 0.0;
  double rmse_rad = 0.0;
  std::size_t trials_failed = 0;
};

/// Seed for one trial: seed XOR splitmix64((snr_index << 32) | trial_index).
std::uint64_t trial_seed(std::uint64_t seed, std::size_t snr_index, std::size_t trial_index);

struct MonteCarloOptions {
  std::size_t trials = 100;
  std::size_t grid_size = 4001;
  std::uint64_t seed = 0;
  /// Worker threads; results do not depend on it.
  unsigned threads = 1;
};

/// For each SNR, `trials` independent snapshot -> principal_phases ->
/// match_doa runs over all sensor pairs; RMSE of theta_hat - theta0 over the
/// trials that did not fail. A point with every trial failed reports NaN.
std::vector<RmsePoint> monte_carlo_rmse(const SensorLayout& layout, double theta0, std::span<const double> snr_db,
                                        const MonteCarloOptions& options);

}  // namespace wpdid
