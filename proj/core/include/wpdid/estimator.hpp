#pragma once

// Wrapped phase-difference patterns (WPDP) over a sine-space grid, DOA
// estimation by circular grid matching, and a brute-force collision oracle.

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "wpdid/geometry.hpp"

namespace wpdid {

inline constexpr std::size_t kMaxGridSize = 10'000'000;
inline constexpr double kDefaultCandidateTolerance = 1e-6;
/// Upper bound on G(G-1)/2 * M elementwise comparisons in the oracle.
inline constexpr double kOracleComparisonBudget = 1e9;

/// Grid of G sines s_g = -1 + (g + 1) h with h = 2 / (G + 1): the interior
/// points of a uniform partition of [-1, 1]. Symmetric about 0, contains 0
/// for odd G, never touches the endfire limits.
class WpdpGrid {
 public:
  std::size_t grid_size() const noexcept { return sines_.size(); }
  std::size_t pair_count() const noexcept { return distances_.size(); }
  double step() const noexcept { return step_; }

  const std::vector<double>& sine_grid() const noexcept { return sines_; }
  const PairDistances& distances() const noexcept { return distances_; }

  /// Wrapped phases of grid point g, one per pair.
  std::span<const double> row(std::size_t g) const {
    return {pattern_.data() + g * distances_.size(), distances_.size()};
  }

  double at(std::size_t g, std::size_t pair) const { return pattern_[g * distances_.size() + pair]; }

 private:
  friend WpdpGrid build_wpdp(const PairDistances& d, std::size_t grid_size);

  PairDistances distances_;
  std::vector<double> sines_;
  std::vector<double> pattern_;  // row-major G x M
  double step_ = 0.0;
};

/// Throws InvalidArgument for grid_size < 2 and GridTooLarge above kMaxGridSize.
WpdpGrid build_wpdp(const PairDistances& d, std::size_t grid_size);

/// Smallest odd grid size whose step divides `spacing` and is at most
/// `max_step`, i.e. G + 1 = 2m / spacing for an integer m. Used to place exact
/// rational sines on the grid.
std::size_t grid_size_containing(const Rational& spacing, double max_step);

struct CandidateCluster {
  std::size_t first = 0;  // grid indices, inclusive
  std::size_t last = 0;
  std::size_t best = 0;
  double best_cost = 0.0;
};

struct DoaEstimate {
  double theta_hat = 0.0;
  double sine_hat = 0.0;
  std::size_t index = 0;
  double cost = 0.0;
  /// Every grid index within candidate_tolerance of the minimal cost, ascending.
  std::vector<std::size_t> candidates;
  /// Candidates grouped into runs of consecutive indices.
  std::vector<CandidateCluster> clusters;
};

/// Circular squared error sum_i wrap(psi[i] - pattern[g][i])^2.
double match_cost(std::span<const double> psi_observed, std::span<const double> pattern_row);

/// Minimizes match_cost over the grid. Exact cost ties prefer the smaller
/// |sine|, then the smaller index. Throws LengthMismatch.
DoaEstimate match_doa(std::span<const double> psi_observed, const WpdpGrid& grid,
                      double candidate_tolerance = kDefaultCandidateTolerance);

/// Half the largest per-step pattern movement, pi * max(d) * h / 2.
double default_collision_tolerance(const WpdpGrid& grid);

using GridIndexPair = std::pair<std::size_t, std::size_t>;

/// All g1 < g2 whose rows agree elementwise within `collision_tolerance` in
/// circular distance, ordered by (g1, g2). The result is the same as comparing
/// every pair of rows; candidates are pruned by sorting on the first column.
/// Throws BudgetExceeded past kOracleComparisonBudget comparisons.
std::vector<GridIndexPair> collision_oracle(const WpdpGrid& grid, std::optional<double> collision_tolerance = {});

std::vector<GridIndexPair> collision_oracle(const PairDistances& d, std::size_t grid_size,
                                            std::optional<double> collision_tolerance = {});

/// Delimited table: header "sine,psi_1,...,psi_M", one row per grid point,
/// values with 12 significant digits.
void write_wpdp_csv(std::ostream& out, const WpdpGrid& grid);

}  // namespace wpdid
