#include "ulam/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "ulam/errors.hpp"

namespace ulam {

std::vector<std::string> naive_level_oracle(
    int n, const std::vector<std::vector<std::string>>& lower) {
  if (n < 2) {
    throw DomainError("the oracle derives levels from below; n must be >= 2");
  }
  if (lower.size() < static_cast<std::size_t>(n - 1)) {
    throw StateError("oracle needs its levels 1.." + std::to_string(n - 1));
  }

  std::unordered_map<std::string, int> tally;
  for (int k = 1; k < n; ++k) {
    const auto& first = lower[static_cast<std::size_t>(k - 1)];
    const auto& second = lower[static_cast<std::size_t>(n - k - 1)];
    for (const std::string& u1 : first) {
      for (const std::string& u2 : second) {
        if (u1 == u2) continue;  // the pair must be of distinct words
        ++tally[u1 + u2];
      }
    }
  }

  std::vector<std::string> members;
  for (const auto& [word, times] : tally) {
    if (times == 1) members.push_back(word);
  }
  std::sort(members.begin(), members.end(),
            [](const std::string& a, const std::string& b) {
              // Same length, so lexicographic order is the binary order.
              return a < b;
            });
  return members;
}

NaiveOracle::NaiveOracle() { levels_.push_back({"0", "1"}); }

const std::vector<std::string>& NaiveOracle::level(int n) {
  if (n < 1) {
    throw DomainError("oracle levels start at 1");
  }
  while (computed_length() < n) {
    levels_.push_back(naive_level_oracle(computed_length() + 1, levels_));
  }
  return levels_[static_cast<std::size_t>(n - 1)];
}

}  // namespace ulam
