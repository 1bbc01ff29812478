#pragma once

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace ulam {

class UlamTable;

/// Gould's sequence: G(k) = 2^(number of set bits of k), the number of odd
/// entries in row k of Pascal's triangle.
[[nodiscard]] std::uint64_t gould(std::uint64_t k) noexcept;

/// True iff C(a+b, a) is odd. Implemented by the carry-free criterion
/// (a AND b == 0), which the tests validate against direct binomials.
[[nodiscard]] bool binom_is_odd(std::uint64_t a, std::uint64_t b) noexcept;

/// Membership of 0^a 1 0^b: Ulam iff C(a+b, a) is odd.
[[nodiscard]] bool predict_single_one(std::uint64_t a,
                                      std::uint64_t b) noexcept;

/// Membership of 0^a 11 0^b: Ulam iff the total length a+b+2 is odd.
[[nodiscard]] bool predict_double_one(std::uint64_t a,
                                      std::uint64_t b) noexcept;

/// Membership of 0^a 101 0^b for a+b >= 2: Ulam iff the length is even.
/// Throws DomainError when a + b < 2 (outside the statement's hypothesis).
[[nodiscard]] bool predict_101(std::uint64_t a, std::uint64_t b);

/// Membership of 0^a 1111 0^b for a+b >= 1: Ulam iff a+b = 1 (mod 4).
/// Throws DomainError when a + b < 1.
[[nodiscard]] bool predict_quad_one(std::uint64_t a, std::uint64_t b);

/// Membership of 111 0^(n-3), n >= 3: Ulam iff n = 0 or 1 (mod 4).
/// Throws DomainError when n < 3.
[[nodiscard]] bool predict_triple_one_suffix(int n);

/// Membership of 0^a 10101 0^b for a+b >= 1: Ulam iff a and b are both
/// even and at least one of them is zero. Throws DomainError when a+b < 1.
[[nodiscard]] bool predict_10101(std::uint64_t a, std::uint64_t b);

/// Lattice point set of the discrete Sierpinski construction.
struct SierpinskiSet {
  int level;
  std::set<std::pair<std::int64_t, std::int64_t>> points;
};

/// S_0 = {(2,1)}; S_(k+1) = S_k  u  (S_k + (2^k, 0))  u  (S_k + (2^k, 2^k)).
/// |S_k| = 3^k; every point has x >= 2 and 1 <= y <= x - 1.
/// Throws DomainError for k < 0 or k > 18 (3^k points must fit in memory).
[[nodiscard]] SierpinskiSet sierpinski_points(int k);

/// Membership of 1^y 0^(x-y) (a run of ones then zeros, total length x):
/// true iff (x, y) = (1, 1) or (x, y) lies in the limiting Sierpinski set.
/// Closed form via Pascal parity: for 1 <= y <= x - 1 the point is in the
/// set iff C(x-2, y-1) is odd. Requires x, y >= 1 and y <= x;
/// throws DomainError otherwise.
[[nodiscard]] bool predict_ones_then_zeros(std::int64_t x, std::int64_t y);

/// Number of a in [1, n-1] with 0^a 1^(n-a) Ulam, computed from
/// predict_ones_then_zeros through the reverse symmetry. Requires n >= 2.
/// Equals the number of odd entries in Pascal row n-2, i.e. gould(n-2)
/// (the tests pin this row index against the engine).
[[nodiscard]] std::uint64_t count_zeros_then_ones(int n);

/// One disagreement found by check_power_conjecture.
struct PowerCounterexample {
  int n;            // total word length a + 2^k + b
  std::uint64_t a;  // leading zeros
  std::uint64_t b;  // trailing zeros
  bool engine_says_ulam;
  bool conjecture_says_ulam;
};

/// Scans all words 0^a 1^(2^k) 0^b with a, b >= 1 and total length at most
/// table.computed_length(), comparing engine membership with the predicted
/// rule "Ulam iff n = 1 (mod 2^k)". Returns every disagreement; an empty
/// list means the rule held over the scanned range. Requires k >= 1.
[[nodiscard]] std::vector<PowerCounterexample> check_power_conjecture(
    const UlamTable& table, int k);

}  // namespace ulam
