#include <doctest.h>

#include <random>

#include "oss/oracle.hpp"
#include "oss/read_profile.hpp"
#include "test_util.hpp"

using namespace oss;

namespace {

// Exhaustive opt1 oracle: minimum seed_freq over every legal sub-seed of
// [begin, end), independent of the min-propagation recurrence.
std::uint64_t opt1_exhaustive(const std::string& read, const FrequencyIndex& index,
                              SeedBounds bounds, int begin, int end) {
  std::uint64_t best = kInfFreq;
  for (int a = begin; a < end; ++a)
    for (int len = bounds.min_len; len <= bounds.max_len && a + len <= end; ++len)
      best = std::min(best,
                      index.count(std::string_view(read).substr(a, len)));
  return best;
}

}  // namespace

TEST_CASE("profile of read ACGT over ACGTACGTTT, bounds [2,3]") {
  // Frozen from the naive scan oracle over the reference:
  //   AC->2 CG->2 GT->2 ACG->2 CGT->2
  FrequencyIndex index = build_index(PackedReference("r", "ACGTACGTTT"));
  ReadProfile profile("ACGT", index, {2, 3});
  CHECK(profile.seed_freq(0, 2) == 2);
  CHECK(profile.seed_freq(1, 2) == 2);
  CHECK(profile.seed_freq(2, 2) == 2);
  CHECK(profile.seed_freq(0, 3) == 2);
  CHECK(profile.seed_freq(1, 3) == 2);
  CHECK(profile.opt1(0, 4) == 2);
  // cross-check the frozen values against the oracle
  CHECK(profile.seed_freq(0, 2) == naive_count("ACGTACGTTT", "AC"));
  CHECK(profile.seed_freq(2, 2) == naive_count("ACGTACGTTT", "GT"));
}

TEST_CASE("degenerate bounds reduce opt1 to a sliding-window minimum") {
  std::mt19937_64 rng(31);
  const std::string text = testutil::repetitive_reference(rng, 2000);
  FrequencyIndex index = build_index(PackedReference("r", text));
  const std::string read = testutil::sample_read(rng, text, 40, 2);
  const int s = 5;
  ReadProfile profile(read, index, {s, s});
  for (int begin = 0; begin < 40; ++begin)
    for (int end = begin + 1; end <= 40; ++end) {
      std::uint64_t expected = kInfFreq;
      for (int a = begin; a + s <= end; ++a)
        expected = std::min(expected, profile.seed_freq(a, s));
      CHECK(profile.opt1(begin, end) == expected);
    }
}

TEST_CASE("a read equal to the whole reference is unique") {
  const std::string text = "ACGTTCAGGA";
  FrequencyIndex index = build_index(PackedReference("r", text));
  ReadProfile profile(text, index, {static_cast<int>(text.size()),
                                    static_cast<int>(text.size())});
  CHECK(profile.opt1(0, profile.length()) == 1);
}

TEST_CASE("opt1 boundary behaviour") {
  FrequencyIndex index = build_index(PackedReference("r", "ACGTACGTTT"));
  ReadProfile profile("ACGTAC", index, {2, 3});
  CHECK(profile.opt1(1, 3) == profile.seed_freq(1, 2));  // base case
  CHECK(profile.opt1(2, 3) == kInfFreq);                 // interval too short
  CHECK_THROWS_WITH_AS(profile.opt1(3, 2), "bad interval", std::out_of_range);
  CHECK_THROWS_AS(profile.opt1(0, 7), std::out_of_range);
  CHECK_THROWS_WITH_AS(ReadProfile("A", index, {2, 3}), "read too short",
                       std::runtime_error);
}

TEST_CASE("lookup counter is exact") {
  FrequencyIndex index = build_index(PackedReference("r", "ACGTACGTTT"));
  const std::string read = "ACGTACGT";
  const int L = static_cast<int>(read.size());
  SeedBounds bounds{2, 5};
  ReadProfile profile(read, index, bounds);
  std::uint64_t expected = 0;
  for (int len = bounds.min_len; len <= std::min(bounds.max_len, L); ++len)
    expected += static_cast<std::uint64_t>(L - len + 1);
  CHECK(profile.lookup_count() == expected);
  CHECK(profile.lookup_count() <=
        static_cast<std::uint64_t>(L) * (bounds.max_len - bounds.min_len + 1));
}

TEST_CASE("N-containing seeds score zero") {
  FrequencyIndex index = build_index(PackedReference("r", "ACGTACGTTT"));
  ReadProfile profile("ACNT", index, {2, 3});
  CHECK(profile.seed_freq(1, 2) == 0);  // "CN"
  CHECK(profile.opt1(0, 4) == 0);       // a zero-frequency seed wins
}

TEST_CASE("opt1 equals exhaustive minimization on random instances") {
  std::mt19937_64 rng(37);
  int instances = 0;
  while (instances < 500) {
    const std::string text = testutil::repetitive_reference(rng, 500 + rng() % 4500);
    FrequencyIndex index = build_index(PackedReference("r", text));
    for (int r = 0; r < 25 && instances < 500; ++r, ++instances) {
      const int L = 10 + static_cast<int>(rng() % 51);
      const std::string read = testutil::sample_read(rng, text, L, 2);
      const int smin = 2 + static_cast<int>(rng() % 3);
      const SeedBounds bounds{smin, smin + 1 + static_cast<int>(rng() % 5)};
      ReadProfile profile(read, index, bounds);
      // spot-check a sample of intervals plus the full read
      for (int q = 0; q < 30; ++q) {
        const int begin = static_cast<int>(rng() % L);
        const int end = begin + 1 + static_cast<int>(rng() % (L - begin));
        CHECK(profile.opt1(begin, end) ==
              opt1_exhaustive(read, index, bounds, begin, end));
      }
      CHECK(profile.opt1(0, L) == opt1_exhaustive(read, index, bounds, 0, L));
      const Placement p = profile.opt1_argmin(0, L);
      CHECK(p.freq == profile.opt1(0, L));
      CHECK(p.length() >= bounds.min_len);
      CHECK(p.length() <= bounds.max_len);
    }
  }
}

TEST_CASE("opt1 is monotone along both interval-growth directions") {
  std::mt19937_64 rng(41);
  const std::string text = testutil::repetitive_reference(rng, 3000);
  FrequencyIndex index = build_index(PackedReference("r", text));
  const std::string read = testutil::sample_read(rng, text, 60, 2);
  ReadProfile profile(read, index, {3, 8});
  for (int begin = 0; begin < 60; ++begin)
    for (int end = begin + 1; end <= 60; ++end) {
      if (begin > 0) CHECK(profile.opt1(begin - 1, end) <= profile.opt1(begin, end));
      if (end < 60) CHECK(profile.opt1(begin, end + 1) <= profile.opt1(begin, end));
    }
}
