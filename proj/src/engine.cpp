#include "ulam/engine.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "ulam/errors.hpp"

namespace ulam {

namespace {

LevelSet base_level() {
  // U_1 = {"0", "1"}: codes 0 and 1.
  return LevelSet(1, std::vector<std::uint64_t>{0b11});
}

std::uint64_t level_bytes(int n) {
  return LevelSet::word_count(n) * sizeof(std::uint64_t);
}

/// OR the full bitset of `suffixes` (2^m bits, m = suffixes.length()) into
/// `dst` starting at bit offset `a << m`. Blocks are 2^m bits long, so for
/// m >= 6 the write is word-aligned and for m < 6 a block sits inside one
/// 64-bit word (power-of-two blocks never straddle a word boundary).
inline void or_shifted_block(std::vector<std::uint64_t>& dst,
                             const std::vector<std::uint64_t>& suffix_words,
                             int m, std::uint64_t a) {
  if (m >= 6) {
    const std::size_t base = static_cast<std::size_t>(a)
                             << (m - 6);
    for (std::size_t i = 0; i < suffix_words.size(); ++i) {
      dst[base + i] |= suffix_words[i];
    }
  } else {
    const std::uint64_t bit = a << m;
    dst[bit >> 6] |= suffix_words[0] << (bit & 63);
  }
}

}  // namespace

UlamTable::UlamTable(int max_length, std::uint64_t memory_budget_bytes)
    : max_length_(max_length), budget_(memory_budget_bytes) {
  if (max_length < 1 || max_length > kMaxLevelLength) {
    throw DomainError("max_length must be in [1, " +
                      std::to_string(kMaxLevelLength) + "], got " +
                      std::to_string(max_length));
  }
  levels_.push_back(base_level());
}

std::uint64_t UlamTable::stored_bytes() const noexcept {
  std::uint64_t total = 0;
  for (const LevelSet& level : levels_) total += level_bytes(level.length());
  return total;
}

const LevelSet& UlamTable::level(int n) const {
  if (n < 1 || n > max_length_) {
    throw DomainError("level " + std::to_string(n) +
                      " outside table range [1, " +
                      std::to_string(max_length_) + "]");
  }
  if (n > computed_length()) {
    throw StateError("level " + std::to_string(n) +
                     " has not been computed yet (have 1.." +
                     std::to_string(computed_length()) + ")");
  }
  return levels_[static_cast<std::size_t>(n - 1)];
}

const LevelSet& UlamTable::extend() {
  const int n = computed_length() + 1;
  if (n > max_length_) {
    throw DomainError("table is capped at max_length " +
                      std::to_string(max_length_));
  }
  // Budget check before allocation: three scratch bitsets of 2^n bits
  // (once / twice / split product) on top of what is already stored.
  const std::uint64_t working = 3 * level_bytes(n);
  if (stored_bytes() + working > budget_) {
    throw ResourceError(
        "computing level " + std::to_string(n) + " needs " +
        std::to_string(stored_bytes() + working) +
        " bytes, over the budget of " + std::to_string(budget_));
  }
  levels_.push_back(compute_level(*this, n));
  return levels_.back();
}

void UlamTable::build_to(int n) {
  if (n < 1 || n > max_length_) {
    throw DomainError("cannot build to level " + std::to_string(n) +
                      "; table range is [1, " + std::to_string(max_length_) +
                      "]");
  }
  while (computed_length() < n) extend();
}

void UlamTable::adopt(LevelSet level) {
  if (level.length() != computed_length() + 1) {
    throw StateError("adopted level has length " +
                     std::to_string(level.length()) + "; expected " +
                     std::to_string(computed_length() + 1));
  }
  if (level.length() > max_length_) {
    throw DomainError("adopted level exceeds max_length " +
                      std::to_string(max_length_));
  }
  levels_.push_back(std::move(level));
}

LevelSet compute_level(const UlamTable& table, int n,
                       std::span<const int> split_order) {
  if (n < 2 || n > kMaxLevelLength) {
    throw DomainError("compute_level needs n in [2, " +
                      std::to_string(kMaxLevelLength) + "]; level 1 is " +
                      "axiomatic");
  }
  if (table.computed_length() < n - 1) {
    throw StateError("levels 1.." + std::to_string(n - 1) +
                     " must be computed before level " + std::to_string(n));
  }
  {
    // split_order must be a permutation of 1..n-1.
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    if (split_order.size() != static_cast<std::size_t>(n - 1)) {
      throw DomainError("split order must list each split 1.." +
                        std::to_string(n - 1) + " exactly once");
    }
    for (int k : split_order) {
      if (k < 1 || k >= n || seen[static_cast<std::size_t>(k)]) {
        throw DomainError("split order must be a permutation of 1.." +
                          std::to_string(n - 1));
      }
      seen[static_cast<std::size_t>(k)] = true;
    }
  }

  const std::size_t words = LevelSet::word_count(n);
  std::vector<std::uint64_t> once(words, 0);
  std::vector<std::uint64_t> twice(words, 0);
  std::vector<std::uint64_t> split_product(words, 0);

  for (int k : split_order) {
    const LevelSet& prefixes = table.level(k);
    const LevelSet& suffixes = table.level(n - k);
    const int m = n - k;  // suffix length; blocks are 2^m bits

    std::fill(split_product.begin(), split_product.end(), 0);
    prefixes.for_each_member([&](std::uint64_t a) {
      or_shifted_block(split_product, suffixes.words(), m, a);
    });

    if (2 * k == n) {
      // The only ordered split that can violate u1 != u2 is the middle one
      // with equal halves; clear those diagonal codes u * 2^(n/2) + u.
      const LevelSet& half = table.level(k);
      half.for_each_member([&](std::uint64_t u) {
        const std::uint64_t code = (u << k) | u;
        split_product[code >> 6] &= ~(std::uint64_t{1} << (code & 63));
      });
    }

    for (std::size_t i = 0; i < words; ++i) {
      twice[i] |= once[i] & split_product[i];
      once[i] |= split_product[i];
    }
  }

  for (std::size_t i = 0; i < words; ++i) {
    once[i] &= ~twice[i];
  }
  return LevelSet(n, std::move(once));
}

LevelSet compute_level(const UlamTable& table, int n) {
  std::vector<int> order(n >= 2 ? static_cast<std::size_t>(n - 1) : 0);
  std::iota(order.begin(), order.end(), 1);
  return compute_level(table, n, order);
}

int representation_count(const UlamTable& table, const Word& w) {
  const int n = w.length();
  if (n < 2) {
    throw DomainError("representation_count needs |w| >= 2");
  }
  if (table.computed_length() < n - 1) {
    throw StateError("levels 1.." + std::to_string(n - 1) +
                     " must be computed before splitting a length-" +
                     std::to_string(n) + " word");
  }
  int found = 0;
  for (int k = 1; k < n; ++k) {
    const std::uint64_t prefix = w.bits() >> (n - k);
    const std::uint64_t suffix =
        w.bits() & ((std::uint64_t{1} << (n - k)) - 1);
    if (2 * k == n && prefix == suffix) continue;  // u1 != u2
    if (table.level(k).test(prefix) && table.level(n - k).test(suffix)) {
      if (++found == 2) return found;  // only 0 / 1 / "at least 2" matter
    }
  }
  return found;
}

bool is_ulam(const UlamTable& table, const Word& w) {
  if (w.length() > table.computed_length()) {
    throw StateError("word length " + std::to_string(w.length()) +
                     " exceeds the computed table (1.." +
                     std::to_string(table.computed_length()) + ")");
  }
  if (w.length() == 1) return true;
  return representation_count(table, w) == 1;
}

}  // namespace ulam
