#pragma once

#include <string>
#include <vector>

namespace ulam {

/// Reference enumeration of one level by brute-force dictionary tally,
/// deliberately sharing no machinery with the bitset sieve: words live as
/// plain ASCII strings and membership is decided by counting ordered
/// concatenations of distinct shorter words in a hash map.
///
/// `lower` holds the oracle's own previously computed levels: lower[k] is
/// the sorted list of length-(k+1) words, for k + 1 in 1..n-1.
/// Returns the length-n words with tally exactly one, sorted by their
/// binary reading.
[[nodiscard]] std::vector<std::string> naive_level_oracle(
    int n, const std::vector<std::vector<std::string>>& lower);

/// Convenience wrapper that grows the oracle's levels one by one.
class NaiveOracle {
 public:
  NaiveOracle();

  [[nodiscard]] int computed_length() const noexcept {
    return static_cast<int>(levels_.size());
  }

  /// Level n as sorted strings (computing anything missing below it).
  const std::vector<std::string>& level(int n);

 private:
  std::vector<std::vector<std::string>> levels_;  // levels_[k] = length k+1
};

}  // namespace ulam
