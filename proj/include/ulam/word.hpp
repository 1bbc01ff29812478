#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace ulam {

/// Longest representable word. A word is stored as (length, bits) in one
/// machine word; the enumeration engine itself only needs lengths up to ~32.
inline constexpr int kMaxWordLength = 63;

/// A finite word over the alphabet {0, 1}.
///
/// Length is part of identity: "0" != "00". Letters are indexed from the
/// left, and the leftmost letter is the most significant bit of the integer
/// reading, so the word "110" reads as 6.
class Word {
 public:
  /// Builds a word of `length` letters whose integer reading is `bits`.
  /// Throws DomainError unless 1 <= length <= kMaxWordLength and
  /// bits < 2^length.
  Word(int length, std::uint64_t bits);

  /// Parses an ASCII string of '0'/'1' characters (leftmost = most
  /// significant). Throws DomainError on empty input or foreign characters.
  static Word parse(std::string_view text);

  [[nodiscard]] int length() const noexcept { return length_; }
  [[nodiscard]] std::uint64_t bits() const noexcept { return bits_; }

  /// Letter at position i, counted from the left (i = 0 is leftmost).
  [[nodiscard]] bool letter(int i) const;

  /// ASCII rendering, leftmost letter first.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Word&, const Word&) noexcept = default;

 private:
  int length_;
  std::uint64_t bits_;
};

/// The integer encoding pi restricted to a fixed length: value plus the
/// length it was read at. Distinct lengths give distinct codes even when the
/// values coincide ("01" and "001" both read 1 but are different words).
struct Code {
  int length;
  std::uint64_t value;

  friend bool operator==(const Code&, const Code&) noexcept = default;
};

/// Reads a word as a binary integer, leftmost letter most significant.
[[nodiscard]] Code encode(const Word& w) noexcept;

/// Inverse of encode for a fixed length; pads with leading zeros.
/// Throws DomainError when value >= 2^n or n is out of range.
[[nodiscard]] Word decode(int n, std::uint64_t value);

/// Flips every letter. pi(complement(w)) = 2^n - 1 - pi(w).
[[nodiscard]] Word complement(const Word& w) noexcept;

/// Reverses the letter order. Involution; commutes with complement.
[[nodiscard]] Word reverse(const Word& w) noexcept;

/// Concatenation: letters of u followed by letters of v.
/// pi(concat(u, v)) = pi(u) * 2^|v| + pi(v).
/// Throws DomainError when the combined length exceeds kMaxWordLength.
[[nodiscard]] Word concat(const Word& u, const Word& v);

}  // namespace ulam
