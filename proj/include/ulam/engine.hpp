#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ulam/level_set.hpp"
#include "ulam/word.hpp"

namespace ulam {

/// Default working-memory allowance for the sieve: 1 GiB, enough for the
/// full length-30 run (~640 MB of level storage plus scratch).
inline constexpr std::uint64_t kDefaultMemoryBudget =
    std::uint64_t{1} << 30;

/// The levels U_1..U_N, built strictly in order of length.
///
/// Level 1 is axiomatic: the single-letter words "0" and "1". Every later
/// level is sieved from the ones below it. Completed levels are immutable.
class UlamTable {
 public:
  explicit UlamTable(int max_length = 24,
                     std::uint64_t memory_budget_bytes = kDefaultMemoryBudget);

  [[nodiscard]] int max_length() const noexcept { return max_length_; }

  /// Highest level computed so far (>= 1; level 1 exists from birth).
  [[nodiscard]] int computed_length() const noexcept {
    return static_cast<int>(levels_.size());
  }

  [[nodiscard]] std::uint64_t memory_budget() const noexcept {
    return budget_;
  }

  /// Bytes held by the stored levels.
  [[nodiscard]] std::uint64_t stored_bytes() const noexcept;

  /// Access a computed level. Throws StateError when the level has not been
  /// computed (or DomainError for lengths outside [1, max_length]).
  [[nodiscard]] const LevelSet& level(int n) const;

  /// Computes and stores the next level; returns it.
  /// Throws DomainError past max_length, ResourceError past the budget.
  const LevelSet& extend();

  /// Extends until level n exists.
  void build_to(int n);

  /// Installs an externally obtained level (e.g. loaded from disk). The
  /// level must be the next one in sequence; throws StateError otherwise.
  void adopt(LevelSet level);

 private:
  int max_length_;
  std::uint64_t budget_;
  std::vector<LevelSet> levels_;  // levels_[i] holds length i + 1
};

/// Sieves level n from the lower levels of `table` (which must hold
/// 1..n-1). Splits are processed in the order given; `split_order` must be
/// a permutation of {1, ..., n-1}. The result is independent of the order.
///
/// Contract (bit-parallel path): for each split k build
///   S_k = { a * 2^(n-k) + b : a in U_k, b in U_(n-k) },
/// clear the diagonal codes u * 2^(n/2) + u when k = n/2, then accumulate
/// a saturating two-counter: twice |= once & S_k; once |= S_k. The level is
/// once \ twice — the codes produced by exactly one ordered split.
[[nodiscard]] LevelSet compute_level(const UlamTable& table, int n,
                                     std::span<const int> split_order);

/// compute_level with the natural split order 1..n-1.
[[nodiscard]] LevelSet compute_level(const UlamTable& table, int n);

/// Number of ordered representations w = u1 ^ u2 with u1, u2 Ulam and
/// u1 != u2. Splits at k and n-k count separately; the distinctness clause
/// only excludes equal halves at the middle split (words of different
/// lengths are never equal). Requires |w| >= 2 and levels 1..|w|-1.
[[nodiscard]] int representation_count(const UlamTable& table, const Word& w);

/// True iff w is Ulam: length 1, or exactly one representation.
/// Throws StateError when |w| exceeds the computed length.
[[nodiscard]] bool is_ulam(const UlamTable& table, const Word& w);

}  // namespace ulam
