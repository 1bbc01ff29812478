#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ulam/level_set.hpp"

namespace ulam {

/// rho(n) = count / 2^n.
[[nodiscard]] double density(const LevelSet& level) noexcept;

/// Relative error of the density against the model curve c * n^e,
/// measured against the model: |rho - c n^e| / (c n^e).
[[nodiscard]] double density_fit_error(const LevelSet& level, double c,
                                       double e);

/// Gap structure of one level: the differences between consecutive member
/// codes. Moments are kept as exact integer sums; floating point enters
/// only in mean() / stddev().
struct GapStats {
  int length = 0;
  std::uint64_t member_count = 0;  ///< k_n
  std::uint64_t gap_count = 0;     ///< k_n - 1
  std::uint64_t gap_sum = 0;       ///< equals 2^n - 3 for every n >= 2
  std::uint64_t gap_square_sum = 0;
  std::uint64_t max_gap = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;  ///< gap -> count

  /// Mean gap = gap_sum / gap_count.
  [[nodiscard]] double mean() const noexcept;

  /// Standard deviation under the convention that reproduces the published
  /// reference values: the squared-deviation sum is divided by the member
  /// count k_n (one more than the number of gaps). Computed from the exact
  /// integer sums. See the project README for the convention note.
  [[nodiscard]] double stddev() const noexcept;

  /// Gap counts by residue class modulo m (m >= 1).
  [[nodiscard]] std::vector<std::uint64_t> mod_profile(std::uint64_t m) const;
};

/// Builds GapStats by streaming the member codes once.
/// Throws DomainError when the level has fewer than two members.
[[nodiscard]] GapStats gap_stats(const LevelSet& level);

/// Relative error of the mean gap against the model curve c * n^e,
/// measured against the observed mean: |mean - c n^e| / mean.
/// (Measuring against the model instead does not reproduce the published
/// reference errors; see the README.)
[[nodiscard]] double gap_mean_fit_error(const GapStats& stats, double c,
                                        double e);

/// p_n(g): fraction of gaps equal to g, for every occurring g. Values sum
/// to 1. Throws DomainError when the level has fewer than two members.
[[nodiscard]] std::map<std::uint64_t, double> gap_distribution(
    const LevelSet& level);

/// Member counts of one level by residue class of the code.
struct ModularProfile {
  int length = 0;
  std::uint64_t modulus = 1;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> class_counts;  ///< size == modulus

  /// Relative density rho_{a,N} = class_counts[a] / total.
  [[nodiscard]] double rho(std::uint64_t a) const;
};

/// Exact class counts by residue. Throws DomainError when N = 0.
[[nodiscard]] ModularProfile modular_profile(const LevelSet& level,
                                             std::uint64_t N);

/// Modular discrepancy d_N = max over classes a, b of |rho_a - rho_b|,
/// i.e. (max count - min count) / total.
[[nodiscard]] double discrepancy(const ModularProfile& profile);

/// Largest l in [0, n] such that every residue modulo 2^l occurs among the
/// member codes (l = 0 holds vacuously).
[[nodiscard]] int surjectivity_index(const LevelSet& level);

/// All prime powers p^k < limit in increasing order (used as the modulus
/// family for discrepancy tables), e.g. limit 30 gives
/// {2,3,4,5,7,8,9,11,13,16,17,19,23,25,27,29}.
[[nodiscard]] std::vector<std::uint64_t> prime_powers_below(
    std::uint64_t limit);

/// alpha_0 = (count / (2 (n1 + 1)))^(1 / n1). Requires count > 2 n1 + 2
/// (so the base exceeds 1); throws DomainError otherwise.
[[nodiscard]] double alpha_zero(int n1, std::uint64_t count);

/// Outcome of the growth-bound checks over a contiguous count range.
struct GrowthReport {
  int linear_checks = 0;    ///< lengths n >= 6 tested against 2n + 4
  int weak_sum_checks = 0;  ///< lengths with count(n)^2 <= sum n..2n
  int weak_max_checks = 0;  ///< lengths with max n..2n >= count(n)^2/(n+1)
  std::vector<std::string> violations;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
};

/// Verifies the linear bound count(n) >= 2n + 4 (for n >= 6) and both
/// forms of the weak bound wherever the range allows (2n inside the map).
/// `counts` must cover a contiguous range of lengths; throws DomainError
/// on gaps or emptiness.
[[nodiscard]] GrowthReport check_growth_bounds(
    const std::map<int, std::uint64_t>& counts);

}  // namespace ulam
