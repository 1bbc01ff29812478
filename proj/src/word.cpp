#include "ulam/word.hpp"

#include <string>

#include "ulam/errors.hpp"

namespace ulam {

namespace {

std::uint64_t length_mask(int length) noexcept {
  // length <= 63, so the shift never overflows.
  return (std::uint64_t{1} << length) - 1;
}

}  // namespace

Word::Word(int length, std::uint64_t bits) : length_(length), bits_(bits) {
  if (length < 1 || length > kMaxWordLength) {
    throw DomainError("word length must be in [1, " +
                      std::to_string(kMaxWordLength) + "], got " +
                      std::to_string(length));
  }
  if (bits > length_mask(length)) {
    throw DomainError("word value " + std::to_string(bits) +
                      " does not fit in " + std::to_string(length) +
                      " letters");
  }
}

Word Word::parse(std::string_view text) {
  if (text.empty()) {
    throw DomainError("cannot parse an empty string as a word");
  }
  if (text.size() > static_cast<std::size_t>(kMaxWordLength)) {
    throw DomainError("word text longer than " +
                      std::to_string(kMaxWordLength) + " letters");
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw DomainError(std::string("invalid letter '") + c +
                        "' in word text");
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return Word(static_cast<int>(text.size()), bits);
}

bool Word::letter(int i) const {
  if (i < 0 || i >= length_) {
    throw DomainError("letter index " + std::to_string(i) +
                      " out of range for length " + std::to_string(length_));
  }
  return ((bits_ >> (length_ - 1 - i)) & 1u) != 0;
}

std::string Word::str() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if (letter(i)) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

Code encode(const Word& w) noexcept { return Code{w.length(), w.bits()}; }

Word decode(int n, std::uint64_t value) {
  // Word's constructor performs exactly the required range checks.
  return Word(n, value);
}

Word complement(const Word& w) noexcept {
  return Word(w.length(), ~w.bits() & length_mask(w.length()));
}

Word reverse(const Word& w) noexcept {
  std::uint64_t in = w.bits();
  std::uint64_t out = 0;
  for (int i = 0; i < w.length(); ++i) {
    out = (out << 1) | (in & 1u);
    in >>= 1;
  }
  return Word(w.length(), out);
}

Word concat(const Word& u, const Word& v) {
  if (u.length() + v.length() > kMaxWordLength) {
    throw DomainError("concatenation of lengths " +
                      std::to_string(u.length()) + " and " +
                      std::to_string(v.length()) + " exceeds the word limit");
  }
  return Word(u.length() + v.length(), (u.bits() << v.length()) | v.bits());
}

namespace {
// length_mask(63) must not shift by 64; kMaxWordLength == 63 keeps the
// constructor's upper bound inside defined behavior.
static_assert(kMaxWordLength < 64);
}  // namespace

}  // namespace ulam
