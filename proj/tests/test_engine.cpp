#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "ulam/engine.hpp"
#include "ulam/errors.hpp"
#include "ulam/level_set.hpp"
#include "ulam/oracle.hpp"
#include "ulam/word.hpp"

using namespace ulam;

namespace {

// Member counts for lengths 1..12, cross-checked against the dictionary
// oracle below; the longer prefix is pinned by the acceptance suite.
constexpr std::uint64_t kCounts[] = {2,   2,   2,   4,   8,   12,  26,
                                     36,  98,  124, 274, 512, 1018};
// kCounts[n] = count at length n (index 0 unused).

std::uint64_t count_at(const UlamTable& table, int n) {
  return table.level(n).count();
}

}  // namespace

TEST_CASE("level set construction validates its input") {
  CHECK_THROWS_AS(LevelSet(0, {0}), DomainError);
  CHECK_THROWS_AS(LevelSet(kMaxLevelLength + 1,
                           std::vector<std::uint64_t>(
                               LevelSet::word_count(kMaxLevelLength + 1), 0)),
                  DomainError);
  // Wrong backing size.
  CHECK_THROWS_AS(LevelSet(7, {0}), DomainError);
  CHECK_THROWS_AS(LevelSet(3, {0, 0}), DomainError);
  // Bits beyond the universe of a short level.
  CHECK_THROWS_AS(LevelSet(2, {0b10000}), DomainError);
  CHECK_NOTHROW(LevelSet(2, {0b1111}));
}

TEST_CASE("level set indexing, counting, and scanning agree") {
  const LevelSet level = LevelSet::from_codes(4, std::vector<std::uint64_t>{
                                                     1, 2, 4, 7, 8, 11, 13,
                                                     14});
  CHECK(level.length() == 4);
  CHECK(level.universe_size() == 16);
  CHECK(level.count() == 8);
  CHECK(level.test(1));
  CHECK_FALSE(level.test(0));
  CHECK_FALSE(level.test(15));
  CHECK_THROWS_AS(level.test(16), DomainError);

  CHECK(level.member_codes() ==
        std::vector<std::uint64_t>{1, 2, 4, 7, 8, 11, 13, 14});
  CHECK(level.zero_leading_count() == 4);

  std::vector<std::uint64_t> scanned;
  level.for_each_member([&](std::uint64_t c) { scanned.push_back(c); });
  CHECK(scanned == level.member_codes());

  CHECK_THROWS_AS(
      LevelSet::from_codes(3, std::vector<std::uint64_t>{8}), DomainError);
}

TEST_CASE("word_count covers short and long levels") {
  CHECK(LevelSet::word_count(1) == 1);
  CHECK(LevelSet::word_count(6) == 1);
  CHECK(LevelSet::word_count(7) == 2);
  CHECK(LevelSet::word_count(16) == 1024);
}

TEST_CASE("the base level is the two one-letter words") {
  UlamTable table(4);
  CHECK(table.computed_length() == 1);
  CHECK(table.level(1).member_codes() == std::vector<std::uint64_t>{0, 1});
}

TEST_CASE("the first levels come out exactly") {
  UlamTable table(6);
  table.build_to(6);
  CHECK(table.level(2).member_codes() == std::vector<std::uint64_t>{1, 2});
  CHECK(table.level(3).member_codes() ==
        std::vector<std::uint64_t>{1, 3, 4, 6});
  CHECK(table.level(4).member_codes() ==
        std::vector<std::uint64_t>{1, 2, 4, 7, 8, 11, 13, 14});
  CHECK(table.level(5).member_codes() ==
        std::vector<std::uint64_t>{1, 3, 6, 7, 12, 15, 16, 19, 24, 25, 28,
                                   30});
  CHECK(table.level(6).member_codes() ==
        std::vector<std::uint64_t>{1,  2,  5,  9,  10, 11, 13, 16, 19,
                                   20, 23, 27, 31, 32, 36, 40, 43, 44,
                                   47, 50, 52, 53, 54, 58, 61, 62});
}

TEST_CASE("member counts match the reference prefix") {
  UlamTable table(12);
  table.build_to(12);
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(count_at(table, n) == kCounts[n]);
  }
}

TEST_CASE("the sieve reproduces the dictionary oracle word for word") {
  UlamTable table(12);
  table.build_to(12);
  NaiveOracle oracle;
  for (int n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const std::vector<std::string>& expected = oracle.level(n);
    const std::vector<std::uint64_t> codes = table.level(n).member_codes();
    REQUIRE(codes.size() == expected.size());
    for (std::size_t i = 0; i < codes.size(); ++i) {
      CHECK(Word(n, codes[i]).str() == expected[i]);
    }
  }
}

TEST_CASE("oracle spot values") {
  NaiveOracle oracle;
  CHECK(oracle.level(3) ==
        std::vector<std::string>{"001", "011", "100", "110"});
  const std::vector<std::string>& u5 = oracle.level(5);
  CHECK(std::find(u5.begin(), u5.end(), "00001") != u5.end());
  CHECK(std::find(u5.begin(), u5.end(), "11110") != u5.end());
}

TEST_CASE("split order does not change the sieve result") {
  UlamTable table(14);
  table.build_to(14);
  std::mt19937_64 rng(5);
  for (int n : {5, 9, 12, 14}) {
    std::vector<int> order(static_cast<std::size_t>(n - 1));
    std::iota(order.begin(), order.end(), 1);
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(order.begin(), order.end(), rng);
      CAPTURE(n);
      CHECK(compute_level(table, n, order) == table.level(n));
    }
    // Reverse order as a deterministic extreme.
    std::vector<int> reversed(order);
    std::sort(reversed.begin(), reversed.end(), std::greater<>());
    CHECK(compute_level(table, n, reversed) == table.level(n));
  }
}

TEST_CASE("representation counts on the worked examples") {
  UlamTable table(6);
  table.build_to(6);
  CHECK(representation_count(table, Word::parse("01")) == 1);
  CHECK(representation_count(table, Word::parse("010")) == 2);
  CHECK(representation_count(table, Word::parse("00")) == 0);
  CHECK_THROWS_AS(representation_count(table, Word::parse("0")), DomainError);
}

TEST_CASE("membership matches the definition exhaustively") {
  const int kMax = 10;
  UlamTable table(kMax);
  table.build_to(kMax);
  for (int n = 2; n <= kMax; ++n) {
    const LevelSet& level = table.level(n);
    for (std::uint64_t code = 0; code < level.universe_size(); ++code) {
      const bool member = level.test(code);
      const int reps = representation_count(table, Word(n, code));
      if (member != (reps == 1)) {
        CAPTURE(n);
        CAPTURE(code);
        CHECK(member == (reps == 1));
      }
    }
  }
}

TEST_CASE("is_ulam handles the axioms and the worked examples") {
  UlamTable table(6);
  table.build_to(6);
  CHECK(is_ulam(table, Word::parse("0")));
  CHECK(is_ulam(table, Word::parse("1")));
  CHECK(is_ulam(table, Word::parse("0111")));
  CHECK_FALSE(is_ulam(table, Word::parse("0011")));
  CHECK_THROWS_AS(is_ulam(table, Word::parse("0000000")), StateError);
}

TEST_CASE("levels are closed under complement and reverse") {
  UlamTable table(14);
  table.build_to(14);
  for (int n = 1; n <= 14; ++n) {
    const LevelSet& level = table.level(n);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    level.for_each_member([&](std::uint64_t code) {
      CHECK(level.test(full - code));  // complement
      CHECK(level.test(reverse(Word(n, code)).bits()));
    });
  }
}

TEST_CASE("every level has more than one member and grows linearly") {
  UlamTable table(14);
  table.build_to(14);
  for (int n = 6; n <= 14; ++n) {
    CAPTURE(n);
    CHECK(count_at(table, n) >= 2 * static_cast<std::uint64_t>(n) + 4);
  }
}

TEST_CASE("table enforces its bounds and computation order") {
  UlamTable table(5);
  CHECK_THROWS_AS(table.level(0), DomainError);
  CHECK_THROWS_AS(table.level(6), DomainError);
  CHECK_THROWS_AS(table.level(3), StateError);  // not yet computed
  table.build_to(5);
  CHECK_NOTHROW(table.level(5));
  CHECK_THROWS_AS(table.extend(), DomainError);  // past max_length
  CHECK_THROWS_AS(UlamTable(0), DomainError);
  CHECK_THROWS_AS(UlamTable(kMaxLevelLength + 1), DomainError);
}

TEST_CASE("compute_level rejects bad split orders") {
  UlamTable table(6);
  table.build_to(5);
  const std::vector<int> too_short = {1, 2, 3, 4};
  CHECK_THROWS_AS(compute_level(table, 6, too_short), DomainError);
  const std::vector<int> duplicate = {1, 2, 3, 3, 4};
  CHECK_THROWS_AS(compute_level(table, 6, duplicate), DomainError);
  const std::vector<int> out_of_range = {1, 2, 3, 4, 6};
  CHECK_THROWS_AS(compute_level(table, 6, out_of_range), DomainError);
  CHECK_THROWS_AS(compute_level(table, 1), DomainError);
  CHECK_THROWS_AS(compute_level(table, 7), StateError);  // level 6 missing
}

TEST_CASE("memory budget stops the sieve with a resource error") {
  // 1 KiB admits the small levels but not length 14 (3 * 2 KiB scratch).
  UlamTable table(20, 1024);
  CHECK_THROWS_AS(table.build_to(14), ResourceError);
  CHECK(table.computed_length() < 14);
  // A fresh table with the default budget sails through.
  UlamTable roomy(14);
  CHECK_NOTHROW(roomy.build_to(14));
}

TEST_CASE("adopt only accepts the next level in sequence") {
  UlamTable table(6);
  table.build_to(3);
  UlamTable donor(6);
  donor.build_to(5);
  CHECK_THROWS_AS(table.adopt(donor.level(5)), StateError);
  CHECK_NOTHROW(table.adopt(donor.level(4)));
  CHECK(table.computed_length() == 4);
  CHECK(table.level(4) == donor.level(4));
}
