#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

#include "wpdid/geometry.hpp"

namespace wpdid {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Default absolute tolerance for comparing phases in radians.
inline constexpr double kPhaseTolerance = 1e-9;

struct PhaseDecomposition {
  double phi = 0.0;  // true phase difference
  std::int64_t q = 0;  // whole cycles removed
  double psi = 0.0;  // principal value in [-pi, pi)
};

/// pi * d * sin(theta). Throws DomainError unless |theta| < pi/2 and d > 0.
double true_phase(double d, double theta);

/// Principal value of phi in [-pi, pi): mod(phi + pi, 2pi) - pi with a
/// floored modulus, so odd multiples of pi map to -pi and +pi never occurs.
double wrap(double phi);

/// Splits phi into principal value and cycle count, phi = psi + 2*pi*q.
PhaseDecomposition decompose(double phi);

/// Integer number of 2pi cycles in pi * d * sin(theta), consistent with wrap():
/// a phase landing exactly on an odd multiple of pi rounds half up.
std::int64_t cycle_count(double d, double theta);

/// wrap(pi * d[i] * sin(theta)) for every pair.
std::vector<double> wrapped_vector(const PairDistances& d, double theta);

/// Same pattern indexed by sine rather than angle; |sine| < 1.
std::vector<double> wrapped_vector_at_sine(const PairDistances& d, double sine);

/// Shortest signed angular difference a - b, in [-pi, pi).
inline double circular_difference(double a, double b) { return wrap(a - b); }

/// |circular_difference(a, b)|, in [0, pi].
double circular_distance(double a, double b);

}  // namespace wpdid
