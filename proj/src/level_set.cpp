#include "ulam/level_set.hpp"

#include <bit>
#include <string>

#include "ulam/errors.hpp"

namespace ulam {

LevelSet::LevelSet(int length, std::vector<std::uint64_t> words)
    : length_(length), count_(0), words_(std::move(words)) {
  if (length < 1 || length > kMaxLevelLength) {
    throw DomainError("level length must be in [1, " +
                      std::to_string(kMaxLevelLength) + "], got " +
                      std::to_string(length));
  }
  if (words_.size() != word_count(length)) {
    throw DomainError("bitset for length " + std::to_string(length) +
                      " needs " + std::to_string(word_count(length)) +
                      " words, got " + std::to_string(words_.size()));
  }
  if (length < 6 && (words_[0] >> (std::uint64_t{1} << length)) != 0) {
    throw DomainError("bitset for length " + std::to_string(length) +
                      " has bits beyond code " +
                      std::to_string((std::uint64_t{1} << length) - 1));
  }
  for (std::uint64_t w : words_) {
    count_ += static_cast<std::uint64_t>(std::popcount(w));
  }
}

LevelSet LevelSet::from_codes(int length,
                              std::span<const std::uint64_t> codes) {
  if (length < 1 || length > kMaxLevelLength) {
    throw DomainError("level length must be in [1, " +
                      std::to_string(kMaxLevelLength) + "], got " +
                      std::to_string(length));
  }
  std::vector<std::uint64_t> words(word_count(length), 0);
  const std::uint64_t universe = std::uint64_t{1} << length;
  for (std::uint64_t code : codes) {
    if (code >= universe) {
      throw DomainError("code " + std::to_string(code) +
                        " does not fit in length " + std::to_string(length));
    }
    words[code >> 6] |= std::uint64_t{1} << (code & 63);
  }
  return LevelSet(length, std::move(words));
}

bool LevelSet::test(std::uint64_t code) const {
  if (code >= universe_size()) {
    throw DomainError("code " + std::to_string(code) +
                      " out of range for length " + std::to_string(length_));
  }
  return ((words_[code >> 6] >> (code & 63)) & 1u) != 0;
}

std::uint64_t LevelSet::zero_leading_count() const noexcept {
  // Zero-leading codes occupy the lower half of the bitset
  // (for length 1, exactly the single bit for code 0).
  if (length_ < 7) {
    const int half_bits = 1 << (length_ - 1);
    const std::uint64_t mask = (std::uint64_t{1} << half_bits) - 1;
    return static_cast<std::uint64_t>(std::popcount(words_[0] & mask));
  }
  std::uint64_t total = 0;
  for (std::size_t wi = 0; wi < words_.size() / 2; ++wi) {
    total += static_cast<std::uint64_t>(std::popcount(words_[wi]));
  }
  return total;
}

std::vector<std::uint64_t> LevelSet::member_codes() const {
  std::vector<std::uint64_t> codes;
  codes.reserve(static_cast<std::size_t>(count_));
  for_each_member([&codes](std::uint64_t code) { codes.push_back(code); });
  return codes;
}

}  // namespace ulam
