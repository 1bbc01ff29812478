#include "ulam/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "ulam/errors.hpp"

namespace ulam {

namespace {

/// True when the low 2^l bits of `words` are all set.
bool low_bits_all_set(const std::vector<std::uint64_t>& words, int l) {
  if (l >= 6) {
    const std::size_t word_count = std::size_t{1} << (l - 6);
    for (std::size_t i = 0; i < word_count; ++i) {
      if (words[i] != ~std::uint64_t{0}) return false;
    }
    return true;
  }
  const std::uint64_t mask = (std::uint64_t{1} << (1u << l)) - 1;
  return (words[0] & mask) == mask;
}

/// ORs the upper 2^(l-1) bits of a 2^l-bit set onto the lower half, so the
/// lower half afterwards marks the residues occupied modulo 2^(l-1).
void fold_in_half(std::vector<std::uint64_t>& words, int l) {
  if (l - 1 >= 6) {
    const std::size_t half_words = std::size_t{1} << (l - 1 - 6);
    for (std::size_t i = 0; i < half_words; ++i) {
      words[i] |= words[i + half_words];
    }
  } else {
    const unsigned half_bits = 1u << (l - 1);
    const std::uint64_t mask = (std::uint64_t{1} << half_bits) - 1;
    words[0] = (words[0] | (words[0] >> half_bits)) & mask;
  }
}

}  // namespace

double density(const LevelSet& level) noexcept {
  return std::ldexp(static_cast<double>(level.count()), -level.length());
}

double density_fit_error(const LevelSet& level, double c, double e) {
  if (!(c > 0.0)) {
    throw DomainError("density_fit_error: coefficient must be positive");
  }
  const double model = c * std::pow(static_cast<double>(level.length()), e);
  return std::fabs(density(level) - model) / model;
}

double GapStats::mean() const noexcept {
  if (gap_count == 0) return 0.0;
  return static_cast<double>(gap_sum) / static_cast<double>(gap_count);
}

double GapStats::stddev() const noexcept {
  if (gap_count == 0) return 0.0;
  // Exact squared-deviation sum: SS = S2 - S1^2/m = (m*S2 - S1^2)/m with
  // m = gap_count. The divisor is the member count m + 1 (see header), so
  // sigma^2 = (m * S2 - S1^2) / (m * (m + 1)).
  using u128 = unsigned __int128;
  const u128 m = gap_count;
  const u128 numerator = m * static_cast<u128>(gap_square_sum) -
                         static_cast<u128>(gap_sum) * static_cast<u128>(gap_sum);
  const u128 denominator = m * (m + 1);
  const long double variance = static_cast<long double>(numerator) /
                               static_cast<long double>(denominator);
  return static_cast<double>(std::sqrt(variance));
}

std::vector<std::uint64_t> GapStats::mod_profile(std::uint64_t m) const {
  if (m == 0) throw DomainError("mod_profile: modulus must be positive");
  std::vector<std::uint64_t> counts(m, 0);
  for (const auto& [gap, count] : histogram) counts[gap % m] += count;
  return counts;
}

GapStats gap_stats(const LevelSet& level) {
  if (level.count() < 2) {
    throw DomainError("gap_stats: needs at least two members");
  }
  GapStats stats;
  stats.length = level.length();
  stats.member_count = level.count();
  stats.gap_count = stats.member_count - 1;
  bool have_prev = false;
  std::uint64_t prev = 0;
  level.for_each_member([&](std::uint64_t code) {
    if (have_prev) {
      const std::uint64_t gap = code - prev;
      stats.gap_sum += gap;
      stats.gap_square_sum += gap * gap;
      stats.max_gap = std::max(stats.max_gap, gap);
      ++stats.histogram[gap];
    }
    prev = code;
    have_prev = true;
  });
  return stats;
}

double gap_mean_fit_error(const GapStats& stats, double c, double e) {
  if (stats.gap_count == 0) {
    throw DomainError("gap_mean_fit_error: no gaps");
  }
  const double model = c * std::pow(static_cast<double>(stats.length), e);
  const double actual = stats.mean();
  return std::fabs(actual - model) / actual;
}

std::map<std::uint64_t, double> gap_distribution(const LevelSet& level) {
  const GapStats stats = gap_stats(level);
  std::map<std::uint64_t, double> distribution;
  for (const auto& [gap, count] : stats.histogram) {
    distribution[gap] =
        static_cast<double>(count) / static_cast<double>(stats.gap_count);
  }
  return distribution;
}

double ModularProfile::rho(std::uint64_t a) const {
  if (a >= modulus) throw DomainError("rho: residue out of range");
  if (total == 0) throw DomainError("rho: empty profile");
  return static_cast<double>(class_counts[a]) / static_cast<double>(total);
}

ModularProfile modular_profile(const LevelSet& level, std::uint64_t N) {
  if (N == 0) throw DomainError("modular_profile: modulus must be positive");
  ModularProfile profile;
  profile.length = level.length();
  profile.modulus = N;
  profile.total = level.count();
  profile.class_counts.assign(N, 0);
  level.for_each_member(
      [&](std::uint64_t code) { ++profile.class_counts[code % N]; });
  return profile;
}

double discrepancy(const ModularProfile& profile) {
  if (profile.total == 0) throw DomainError("discrepancy: empty profile");
  const auto [lo, hi] = std::minmax_element(profile.class_counts.begin(),
                                            profile.class_counts.end());
  return static_cast<double>(*hi - *lo) / static_cast<double>(profile.total);
}

int surjectivity_index(const LevelSet& level) {
  const int n = level.length();
  std::vector<std::uint64_t> fold(level.words().begin(), level.words().end());
  // Coverage of all residues mod 2^l implies coverage mod 2^(l-1), so the
  // first l (scanning downward) whose folded set is saturated is the
  // largest one.
  for (int l = n; l >= 1; --l) {
    if (low_bits_all_set(fold, l)) return l;
    fold_in_half(fold, l);
  }
  return 0;
}

std::vector<std::uint64_t> prime_powers_below(std::uint64_t limit) {
  std::vector<std::uint64_t> result;
  for (std::uint64_t m = 2; m < limit; ++m) {
    std::uint64_t smallest = 0;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d == 0) {
        smallest = d;
        break;
      }
    }
    if (smallest == 0) {
      result.push_back(m);  // prime
      continue;
    }
    std::uint64_t q = m;
    while (q % smallest == 0) q /= smallest;
    if (q == 1) result.push_back(m);  // power of its smallest prime
  }
  return result;
}

double alpha_zero(int n1, std::uint64_t count) {
  if (n1 < 1) throw DomainError("alpha_zero: length must be positive");
  const std::uint64_t floor_count = 2 * static_cast<std::uint64_t>(n1) + 2;
  if (count <= floor_count) {
    throw DomainError("alpha_zero: count must exceed 2*(n1 + 1)");
  }
  const double base =
      static_cast<double>(count) / (2.0 * (static_cast<double>(n1) + 1.0));
  return std::exp2(std::log2(base) / static_cast<double>(n1));
}

GrowthReport check_growth_bounds(const std::map<int, std::uint64_t>& counts) {
  if (counts.empty()) throw DomainError("check_growth_bounds: no counts");
  int expected = counts.begin()->first;
  for (const auto& [n, count] : counts) {
    if (n != expected++) {
      throw DomainError("check_growth_bounds: lengths must be contiguous");
    }
  }
  const int lo = counts.begin()->first;
  const int hi = counts.rbegin()->first;

  GrowthReport report;
  for (int n = std::max(lo, 6); n <= hi; ++n) {
    ++report.linear_checks;
    const std::uint64_t bound = 2 * static_cast<std::uint64_t>(n) + 4;
    const std::uint64_t count = counts.at(n);
    if (count < bound) {
      report.violations.push_back("length " + std::to_string(n) + ": count " +
                                  std::to_string(count) +
                                  " below linear bound " +
                                  std::to_string(bound));
    }
  }
  for (int n = std::max(lo, 1); 2 * n <= hi; ++n) {
    const std::uint64_t count = counts.at(n);
    const std::uint64_t square = count * count;
    std::uint64_t window_sum = 0;
    std::uint64_t window_max = 0;
    for (int i = n; i <= 2 * n; ++i) {
      const std::uint64_t c = counts.at(i);
      window_sum += c;
      window_max = std::max(window_max, c);
    }
    ++report.weak_sum_checks;
    if (square > window_sum) {
      report.violations.push_back(
          "length " + std::to_string(n) + ": squared count " +
          std::to_string(square) + " exceeds window sum " +
          std::to_string(window_sum));
    }
    ++report.weak_max_checks;
    if (window_max * static_cast<std::uint64_t>(n + 1) < square) {
      report.violations.push_back(
          "length " + std::to_string(n) + ": window maximum " +
          std::to_string(window_max) + " below squared count / (n + 1)");
    }
  }
  return report;
}

}  // namespace ulam
