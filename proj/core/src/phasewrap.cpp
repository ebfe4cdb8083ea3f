#include "wpdid/phasewrap.hpp"

#include <cmath>
#include <string>

#include "wpdid/errors.hpp"

namespace wpdid {

namespace {

void check_theta(double theta) {
  if (!(std::fabs(theta) < kPi / 2)) {
    throw Error(Errc::DomainError, "theta must lie in (-pi/2, pi/2), got " + std::to_string(theta));
  }
}

void check_sine(double sine) {
  if (!(std::fabs(sine) < 1.0)) {
    throw Error(Errc::DomainError, "sine must lie in (-1, 1), got " + std::to_string(sine));
  }
}

}  // namespace

double true_phase(double d, double theta) {
  check_theta(theta);
  if (!(d > 0)) throw Error(Errc::DomainError, "distance must be positive");
  return kPi * d * std::sin(theta);
}

double wrap(double phi) {
  // remainder() is exact; it only leaves the half-open range at the +pi tie.
  double r = std::remainder(phi, kTwoPi);
  if (r >= kPi) r -= kTwoPi;
  return r;
}

PhaseDecomposition decompose(double phi) {
  PhaseDecomposition out;
  out.phi = phi;
  out.psi = wrap(phi);
  out.q = std::llround((phi - out.psi) / kTwoPi);
  return out;
}

std::int64_t cycle_count(double d, double theta) { return decompose(true_phase(d, theta)).q; }

std::vector<double> wrapped_vector(const PairDistances& d, double theta) {
  check_theta(theta);
  return wrapped_vector_at_sine(d, std::sin(theta));
}

std::vector<double> wrapped_vector_at_sine(const PairDistances& d, double sine) {
  check_sine(sine);
  std::vector<double> out;
  out.reserve(d.size());
  for (double di : d.d) out.push_back(wrap(kPi * di * sine));
  return out;
}

double circular_distance(double a, double b) { return std::fabs(wrap(a - b)); }

}  // namespace wpdid
