#include "wpdid/identifiability.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "wpdid/errors.hpp"

namespace wpdid {

namespace {

namespace mp = boost::multiprecision;

// Number of layouts with first sensor at 0 and n-1 further sensors on
// {1, ..., steps}: C(steps, n-1). Saturates at limit + 1.
std::uint64_t candidate_count(std::uint64_t steps, std::size_t n, std::uint64_t limit) {
  const std::uint64_t k = n - 1;
  if (k > steps) return 0;
  long double c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    c = c * static_cast<long double>(steps - i) / static_cast<long double>(i + 1);
    if (c > static_cast<long double>(limit)) return limit + 1;
  }
  return static_cast<std::uint64_t>(c + 0.5L);
}

// Advances `interior` (strictly increasing values in [1, upper]) to the next
// combination in lexicographic order. Returns false when exhausted.
bool next_combination(std::vector<std::int64_t>& interior, std::int64_t upper) {
  const auto k = static_cast<std::int64_t>(interior.size());
  for (std::int64_t i = k - 1; i >= 0; --i) {
    if (interior[i] < upper - (k - 1 - i)) {
      ++interior[i];
      for (std::int64_t j = i + 1; j < k; ++j) interior[j] = interior[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<LayoutCandidate> search_identifiable_layouts(std::size_t n_sensors, const Rational& max_aperture,
                                                         const Rational& step, std::size_t max_results) {
  if (n_sensors < 2) throw Error(Errc::InvalidArgument, "n_sensors must be at least 2");
  if (step <= 0) throw Error(Errc::InvalidArgument, "step must be positive");
  if (max_aperture <= 0) throw Error(Errc::InvalidArgument, "max_aperture must be positive");

  const Rational ratio = max_aperture / step;
  if (ratio > Rational(kMaxLatticeSteps)) {
    throw Error(Errc::SearchSpaceTooLarge, "max_aperture/step = " + format_rational(ratio) + " exceeds " +
                                               std::to_string(kMaxLatticeSteps) +
                                               "; increase step or reduce max_aperture");
  }
  const auto steps = floor(ratio).convert_to<std::uint64_t>();
  const std::uint64_t total = candidate_count(steps, n_sensors, kMaxSearchCandidates);
  if (total > kMaxSearchCandidates) {
    throw Error(Errc::SearchSpaceTooLarge, "more than " + std::to_string(kMaxSearchCandidates) +
                                               " candidate layouts; reduce n, max_aperture or increase step");
  }

  std::vector<LayoutCandidate> results;
  if (max_results == 0 || total == 0) return results;

  // A lattice layout step*K has scale step*gcd(K), so it is ambiguous iff
  // step*gcd(K) > 1, i.e. gcd(K) > floor(1/step).
  const Integer max_gcd_big = floor(Rational(1) / step);
  const std::int64_t max_gcd =
      max_gcd_big > steps ? static_cast<std::int64_t>(steps) : max_gcd_big.convert_to<std::int64_t>();

  const std::size_t interior_count = n_sensors - 2;
  for (auto last = static_cast<std::int64_t>(steps); last >= static_cast<std::int64_t>(n_sensors - 1); --last) {
    std::vector<std::int64_t> interior(interior_count);
    std::iota(interior.begin(), interior.end(), std::int64_t{1});
    do {
      std::int64_t g = last;
      for (auto k : interior) g = std::gcd(g, k);
      if (g > max_gcd) continue;

      std::vector<Rational> positions;
      positions.reserve(n_sensors);
      positions.emplace_back(0);
      for (auto k : interior) positions.push_back(step * k);
      positions.push_back(step * last);
      auto layout = make_layout(std::move(positions));
      const auto report = check_identifiability(layout);
      if (report.verdict == Verdict::Unidentifiable) {
        throw std::logic_error("lattice prefilter disagrees with check_identifiability");
      }
      results.push_back({std::move(layout), step * last, report.verdict});
      if (results.size() == max_results) return results;
    } while (next_combination(interior, last - 1));
  }
  return results;
}

}  // namespace wpdid
