#include "wpdid/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <string>

#include "wpdid/errors.hpp"
#include "wpdid/phasewrap.hpp"

namespace wpdid {

WpdpGrid build_wpdp(const PairDistances& d, std::size_t grid_size) {
  if (grid_size < 2) throw Error(Errc::InvalidArgument, "grid_size must be >= 2");
  if (grid_size > kMaxGridSize) {
    throw Error(Errc::GridTooLarge, "grid_size " + std::to_string(grid_size) + " exceeds " + std::to_string(kMaxGridSize));
  }
  if (d.size() == 0) throw Error(Errc::InvalidPair, "no sensor pairs");

  WpdpGrid grid;
  grid.distances_ = d;
  grid.step_ = 2.0 / static_cast<double>(grid_size + 1);
  grid.sines_.resize(grid_size);
  const auto half = static_cast<double>(grid_size + 1) / 2.0;
  for (std::size_t g = 0; g < grid_size; ++g) {
    // Exact integer numerator keeps the grid symmetric: s[G-1-g] == -s[g].
    grid.sines_[g] = (static_cast<double>(g + 1) - half) / half;
  }
  const std::size_t m = d.size();
  grid.pattern_.resize(grid_size * m);
  for (std::size_t g = 0; g < grid_size; ++g) {
    for (std::size_t i = 0; i < m; ++i) grid.pattern_[g * m + i] = wrap(kPi * d.d[i] * grid.sines_[g]);
  }
  return grid;
}

std::size_t grid_size_containing(const Rational& spacing, double max_step) {
  if (spacing <= 0) throw Error(Errc::InvalidArgument, "spacing must be positive");
  if (!(max_step > 0)) throw Error(Errc::InvalidArgument, "max_step must be positive");
  const Integer q = boost::multiprecision::denominator(spacing);
  const Integer min_n = Integer(static_cast<long long>(std::ceil(1.0 / max_step)));
  Integer n = q * ((min_n + q - 1) / q);
  if (n == 0) n = q;
  const Integer g = 2 * n - 1;
  if (g > kMaxGridSize) throw Error(Errc::GridTooLarge, "required grid size " + g.str() + " is too large");
  return g.convert_to<std::size_t>();
}

double match_cost(std::span<const double> psi_observed, std::span<const double> pattern_row) {
  double cost = 0.0;
  for (std::size_t i = 0; i < psi_observed.size(); ++i) {
    const double e = wrap(psi_observed[i] - pattern_row[i]);
    cost += e * e;
  }
  return cost;
}

DoaEstimate match_doa(std::span<const double> psi_observed, const WpdpGrid& grid, double candidate_tolerance) {
  if (psi_observed.size() != grid.pair_count()) {
    throw Error(Errc::LengthMismatch, "observed " + std::to_string(psi_observed.size()) + " phases, grid has " +
                                          std::to_string(grid.pair_count()) + " pairs");
  }
  const auto& sines = grid.sine_grid();
  std::vector<double> costs(grid.grid_size());
  std::size_t best = 0;
  for (std::size_t g = 0; g < grid.grid_size(); ++g) {
    costs[g] = match_cost(psi_observed, grid.row(g));
    if (g == 0) continue;
    if (costs[g] < costs[best] || (costs[g] == costs[best] && std::fabs(sines[g]) < std::fabs(sines[best]))) {
      best = g;
    }
  }

  DoaEstimate est;
  est.index = best;
  est.cost = costs[best];
  est.sine_hat = sines[best];
  est.theta_hat = std::asin(est.sine_hat);
  const double threshold = est.cost + candidate_tolerance;
  for (std::size_t g = 0; g < costs.size(); ++g) {
    if (costs[g] > threshold) continue;
    est.candidates.push_back(g);
    if (est.clusters.empty() || est.clusters.back().last + 1 != g) {
      est.clusters.push_back({g, g, g, costs[g]});
    } else {
      auto& c = est.clusters.back();
      c.last = g;
      if (costs[g] < c.best_cost) {
        c.best = g;
        c.best_cost = costs[g];
      }
    }
  }
  return est;
}

double default_collision_tolerance(const WpdpGrid& grid) {
  return kPi * grid.distances().max() * grid.step() * 0.5;
}

std::vector<GridIndexPair> collision_oracle(const WpdpGrid& grid, std::optional<double> collision_tolerance) {
  const double g = static_cast<double>(grid.grid_size());
  const double comparisons = g * (g - 1) / 2.0 * static_cast<double>(grid.pair_count());
  if (comparisons > kOracleComparisonBudget) {
    throw Error(Errc::BudgetExceeded, "collision scan needs " + std::to_string(comparisons) + " comparisons");
  }
  const double tol = collision_tolerance.value_or(default_collision_tolerance(grid));
  const std::size_t n = grid.grid_size();
  const std::size_t m = grid.pair_count();

  auto rows_collide = [&](std::size_t a, std::size_t b) {
    const auto ra = grid.row(a);
    const auto rb = grid.row(b);
    for (std::size_t i = 0; i < m; ++i) {
      if (circular_distance(ra[i], rb[i]) > tol) return false;
    }
    return true;
  };

  std::vector<GridIndexPair> out;
  if (tol >= kPi / 2) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (rows_collide(a, b)) out.emplace_back(a, b);
      }
    }
    return out;
  }

  // Every colliding pair is within tol on the first pair's column, so only
  // neighbours in that column (circularly) need the full row comparison.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return grid.at(a, 0) < grid.at(b, 0) || (grid.at(a, 0) == grid.at(b, 0) && a < b);
  });
  auto record = [&](std::size_t a, std::size_t b) {
    if (rows_collide(a, b)) out.emplace_back(std::min(a, b), std::max(a, b));
  };
  for (std::size_t i = 0; i < n; ++i) {
    const double vi = grid.at(order[i], 0);
    std::size_t j = i + 1;
    for (; j < n && grid.at(order[j], 0) - vi <= tol; ++j) record(order[i], order[j]);
    // Wrap-around neighbours at the top of the range, not already visited.
    for (std::size_t k = n; k-- > j;) {
      if (vi + kTwoPi - grid.at(order[k], 0) > tol + 1e-12) break;
      record(order[i], order[k]);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<GridIndexPair> collision_oracle(const PairDistances& d, std::size_t grid_size,
                                            std::optional<double> collision_tolerance) {
  return collision_oracle(build_wpdp(d, grid_size), collision_tolerance);
}

void write_wpdp_csv(std::ostream& out, const WpdpGrid& grid) {
  out << "sine";
  for (std::size_t i = 0; i < grid.pair_count(); ++i) out << ",psi_" << (i + 1);
  out << '\n';
  char buf[32];
  for (std::size_t g = 0; g < grid.grid_size(); ++g) {
    std::snprintf(buf, sizeof buf, "%.12g", grid.sine_grid()[g]);
    out << buf;
    for (double v : grid.row(g)) {
      std::snprintf(buf, sizeof buf, "%.12g", v);
      out << ',' << buf;
    }
    out << '\n';
  }
}

}  // namespace wpdid
