#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace ulam {

/// Largest level length the bitset representation supports. 2^30 bits is
/// 128 MiB per level; the default runs stop at 24.
inline constexpr int kMaxLevelLength = 30;

/// All Ulam words of one fixed length n, stored as a membership bitset over
/// the 2^n integer codes. Bit i of the stream (bit i % 64 of 64-bit word
/// i / 64) records whether the word of length n reading as i is a member.
///
/// Immutable after construction; safe to share between threads.
class LevelSet {
 public:
  /// Adopts a raw bitset. `words` must hold exactly word_count(length)
  /// entries and, when 2^length < 64, must not set bits at or above
  /// 2^length. Throws DomainError otherwise.
  LevelSet(int length, std::vector<std::uint64_t> words);

  /// Builds a level from explicit member codes (duplicates collapse).
  /// Throws DomainError when a code does not fit in `length` letters.
  static LevelSet from_codes(int length, std::span<const std::uint64_t> codes);

  [[nodiscard]] int length() const noexcept { return length_; }

  /// Number of codes of this length: 2^length.
  [[nodiscard]] std::uint64_t universe_size() const noexcept {
    return std::uint64_t{1} << length_;
  }

  /// Number of members (set bits).
  [[nodiscard]] std::uint64_t count() const noexcept { return count_; }

  /// Membership of one code. Throws DomainError when code >= 2^length.
  [[nodiscard]] bool test(std::uint64_t code) const;

  /// Raw bitset words, least significant bit of words()[0] = code 0.
  [[nodiscard]] const std::vector<std::uint64_t>& words() const noexcept {
    return words_;
  }

  /// Members whose leading letter is 0, i.e. codes below 2^(length-1)
  /// (for length 1 this is the single code 0).
  [[nodiscard]] std::uint64_t zero_leading_count() const noexcept;

  /// Calls fn(code) for every member code in ascending order.
  template <typename Fn>
  void for_each_member(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w != 0) {
        const int bit = std::countr_zero(w);
        fn(static_cast<std::uint64_t>(wi) * 64 + static_cast<unsigned>(bit));
        w &= w - 1;
      }
    }
  }

  /// All member codes, ascending.
  [[nodiscard]] std::vector<std::uint64_t> member_codes() const;

  /// Number of 64-bit words backing a level of the given length.
  static std::size_t word_count(int length) noexcept {
    return length >= 6 ? (std::size_t{1} << (length - 6)) : std::size_t{1};
  }

  friend bool operator==(const LevelSet&, const LevelSet&) = default;

 private:
  int length_;
  std::uint64_t count_;
  std::vector<std::uint64_t> words_;
};

}  // namespace ulam
