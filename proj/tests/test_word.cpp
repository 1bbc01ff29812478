#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <string>

#include "doctest.h"
#include "ulam/errors.hpp"
#include "ulam/word.hpp"

using namespace ulam;

namespace {

/// Uniformly random word with 1 <= length <= max_length.
Word random_word(std::mt19937_64& rng, int max_length = kMaxWordLength) {
  const int length =
      std::uniform_int_distribution<int>(1, max_length)(rng);
  const std::uint64_t mask = length == 64
                                 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << length) - 1;
  return Word(length, rng() & mask);
}

}  // namespace

TEST_CASE("word construction validates length and bit range") {
  CHECK_NOTHROW(Word(1, 0));
  CHECK_NOTHROW(Word(kMaxWordLength, 0));
  CHECK_THROWS_AS(Word(0, 0), DomainError);
  CHECK_THROWS_AS(Word(-3, 0), DomainError);
  CHECK_THROWS_AS(Word(kMaxWordLength + 1, 0), DomainError);
  CHECK_THROWS_AS(Word(2, 4), DomainError);  // 4 needs three letters
  CHECK_NOTHROW(Word(3, 4));
}

TEST_CASE("parse reads leftmost letter as most significant") {
  const Word w = Word::parse("110");
  CHECK(w.length() == 3);
  CHECK(w.bits() == 6);
  CHECK(w.str() == "110");

  CHECK(Word::parse("0").bits() == 0);
  CHECK(Word::parse("1").bits() == 1);
  CHECK(Word::parse("00101").bits() == 5);
  CHECK(Word::parse("00101").length() == 5);
}

TEST_CASE("parse rejects empty, overlong, and foreign input") {
  CHECK_THROWS_AS(Word::parse(""), DomainError);
  CHECK_THROWS_AS(Word::parse("01021"), DomainError);
  CHECK_THROWS_AS(Word::parse("abc"), DomainError);
  CHECK_THROWS_AS(Word::parse(std::string(64, '1')), DomainError);
  CHECK_NOTHROW(Word::parse(std::string(63, '1')));
}

TEST_CASE("letters are indexed from the left") {
  const Word w = Word::parse("0110");
  CHECK_FALSE(w.letter(0));
  CHECK(w.letter(1));
  CHECK(w.letter(2));
  CHECK_FALSE(w.letter(3));
  CHECK_THROWS_AS(w.letter(4), DomainError);
  CHECK_THROWS_AS(w.letter(-1), DomainError);
}

TEST_CASE("length is part of word identity") {
  CHECK(Word::parse("0") != Word::parse("00"));
  CHECK(Word::parse("01") != Word::parse("001"));
  CHECK(Word::parse("01") == Word(2, 1));
  CHECK(encode(Word::parse("01")) != encode(Word::parse("001")));
  CHECK(encode(Word::parse("01")).value == encode(Word::parse("001")).value);
}

TEST_CASE("encode reads the word as a binary integer") {
  CHECK(encode(Word::parse("110")) == Code{3, 6});
  CHECK(encode(Word::parse("1")) == Code{1, 1});
  CHECK(encode(Word::parse("0000")) == Code{4, 0});
}

TEST_CASE("decode pads with leading zeros and inverts encode") {
  CHECK(decode(5, 5).str() == "00101");
  CHECK(decode(1, 0).str() == "0");
  CHECK_THROWS_AS(decode(3, 8), DomainError);
  CHECK_THROWS_AS(decode(0, 0), DomainError);

  std::mt19937_64 rng(20260816);
  for (int i = 0; i < 2000; ++i) {
    const Word w = random_word(rng);
    const Code c = encode(w);
    CHECK(decode(c.length, c.value) == w);
  }
}

TEST_CASE("complement flips every letter") {
  CHECK(complement(Word::parse("110")).str() == "001");
  CHECK(complement(Word::parse("0")).str() == "1");

  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    const Word w = random_word(rng, 62);
    const Word c = complement(w);
    CHECK(c.length() == w.length());
    CHECK(complement(c) == w);  // involution
    // Reading of the complement: 2^n - 1 - reading of w.
    const std::uint64_t full = (std::uint64_t{1} << w.length()) - 1;
    CHECK(c.bits() == full - w.bits());
  }
}

TEST_CASE("reverse mirrors the letter order") {
  CHECK(reverse(Word::parse("110")).str() == "011");
  CHECK(reverse(Word::parse("0101")).str() == "1010");
  CHECK(reverse(Word::parse("1")).str() == "1");

  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Word w = random_word(rng);
    CHECK(reverse(reverse(w)) == w);                        // involution
    CHECK(reverse(complement(w)) == complement(reverse(w)));  // commute
    const std::string s = w.str();
    CHECK(reverse(w).str() == std::string(s.rbegin(), s.rend()));
  }
}

TEST_CASE("concatenation shifts the left factor") {
  const Word w = concat(Word::parse("10"), Word::parse("11"));
  CHECK(w.str() == "1011");
  CHECK(encode(w).value == 11);

  std::mt19937_64 rng(13);
  for (int i = 0; i < 2000; ++i) {
    const Word u = random_word(rng, 31);
    const Word v = random_word(rng, 31);
    const Word uv = concat(u, v);
    CHECK(uv.length() == u.length() + v.length());
    CHECK(uv.str() == u.str() + v.str());
    CHECK(encode(uv).value ==
          (encode(u).value << v.length()) + encode(v).value);
  }
}

TEST_CASE("concatenation past the length cap throws") {
  const Word long_word(40, 0);
  const Word other(24, 0);
  CHECK_THROWS_AS(concat(long_word, other), DomainError);
  CHECK_NOTHROW(concat(Word(40, 0), Word(23, 0)));
}
