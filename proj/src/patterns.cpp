#include "ulam/patterns.hpp"

#include <bit>
#include <string>

#include "ulam/engine.hpp"
#include "ulam/errors.hpp"

namespace ulam {

std::uint64_t gould(std::uint64_t k) noexcept {
  return std::uint64_t{1} << std::popcount(k);
}

bool binom_is_odd(std::uint64_t a, std::uint64_t b) noexcept {
  // C(a+b, a) is odd exactly when adding a and b in binary carries nowhere.
  return (a & b) == 0;
}

bool predict_single_one(std::uint64_t a, std::uint64_t b) noexcept {
  return binom_is_odd(a, b);
}

bool predict_double_one(std::uint64_t a, std::uint64_t b) noexcept {
  // Length a + b + 2 is odd iff a + b is odd.
  return ((a + b) & 1) == 1;
}

bool predict_101(std::uint64_t a, std::uint64_t b) {
  if (a + b < 2) {
    throw DomainError("predict_101 requires a + b >= 2");
  }
  // Length a + b + 3 is even iff a + b is odd.
  return ((a + b) & 1) == 1;
}

bool predict_quad_one(std::uint64_t a, std::uint64_t b) {
  if (a + b < 1) {
    throw DomainError("predict_quad_one requires a + b >= 1");
  }
  return (a + b) % 4 == 1;
}

bool predict_triple_one_suffix(int n) {
  if (n < 3) {
    throw DomainError("predict_triple_one_suffix requires n >= 3");
  }
  const int r = n % 4;
  return r == 0 || r == 1;
}

bool predict_10101(std::uint64_t a, std::uint64_t b) {
  if (a + b < 1) {
    throw DomainError("predict_10101 requires a + b >= 1");
  }
  return (a % 2 == 0) && (b % 2 == 0) && (a == 0 || b == 0);
}

SierpinskiSet sierpinski_points(int k) {
  if (k < 0 || k > 18) {
    throw DomainError("sierpinski_points supports k in [0, 18], got " +
                      std::to_string(k));
  }
  SierpinskiSet set{k, {{2, 1}}};
  for (int i = 0; i < k; ++i) {
    const std::int64_t step = std::int64_t{1} << i;
    std::set<std::pair<std::int64_t, std::int64_t>> next = set.points;
    for (const auto& [x, y] : set.points) {
      next.emplace(x + step, y);
      next.emplace(x + step, y + step);
    }
    set.points = std::move(next);
  }
  return set;
}

bool predict_ones_then_zeros(std::int64_t x, std::int64_t y) {
  if (x < 1 || y < 1) {
    throw DomainError("predict_ones_then_zeros requires x, y >= 1");
  }
  if (y > x) {
    throw DomainError("the ones run cannot exceed the total length");
  }
  if (x == 1) return y == 1;  // the isolated point: the word "1"
  if (y == x) return false;   // all-ones words of length >= 2 never qualify
  // Rotated Pascal parity: (x, y) lies in the limit set iff C(x-2, y-1)
  // is odd.
  return binom_is_odd(static_cast<std::uint64_t>(y - 1),
                      static_cast<std::uint64_t>(x - y - 1));
}

std::uint64_t count_zeros_then_ones(int n) {
  if (n < 2) {
    throw DomainError("count_zeros_then_ones requires n >= 2");
  }
  // 0^a 1^(n-a) is the reverse of 1^(n-a) 0^a, and reversal preserves
  // membership, so count the (x, y) = (n, n-a) points with a in [1, n-1].
  std::uint64_t count = 0;
  for (int a = 1; a < n; ++a) {
    if (predict_ones_then_zeros(n, n - a)) ++count;
  }
  return count;
}

std::vector<PowerCounterexample> check_power_conjecture(const UlamTable& table,
                                                        int k) {
  if (k < 1) {
    throw DomainError("check_power_conjecture requires k >= 1");
  }
  std::vector<PowerCounterexample> out;
  const int ones = 1 << k;
  if (ones > table.computed_length()) return out;
  for (int n = ones + 2; n <= table.computed_length(); ++n) {
    const bool predicted = (n % ones) == 1;
    const LevelSet& level = table.level(n);
    const std::uint64_t ones_block = (std::uint64_t{1} << ones) - 1;
    for (int a = 1; a + ones + 1 <= n; ++a) {
      const int b = n - ones - a;
      const bool engine = level.test(ones_block << b);
      if (engine != predicted) {
        out.push_back(PowerCounterexample{n, static_cast<std::uint64_t>(a),
                                          static_cast<std::uint64_t>(b),
                                          engine, predicted});
      }
    }
  }
  return out;
}

}  // namespace ulam
