#include <doctest.h>

#include <random>

#include "oss/baselines.hpp"
#include "oss/oracle.hpp"
#include "oss/solver.hpp"
#include "test_util.hpp"

using namespace oss;

namespace {

struct Fixture {
  std::string text;
  FrequencyIndex index;

  explicit Fixture(std::uint64_t seed, std::size_t length = 4000) {
    std::mt19937_64 rng(seed);
    text = testutil::repetitive_reference(rng, length);
    index = build_index(PackedReference("r", text), "110100110010101111");
  }
};

}  // namespace

TEST_CASE("apply_mask") {
  CHECK(apply_mask("ACGT", "1101") == "ACT");
  CHECK(apply_mask("ACGT", "1111") == "ACGT");
  CHECK(apply_mask("ACGTACGTACGTACGTAC", "110100110010101111").size() == 11);
  CHECK_THROWS_WITH_AS(apply_mask("ACG", "11"), "mask/window length mismatch",
                       std::invalid_argument);
}

TEST_CASE("naive_select places consecutive fixed-length seeds") {
  // Frozen from the naive scan oracle: AC->2, GT->2 over ACGTACGTTT.
  FrequencyIndex index = build_index(PackedReference("r", "ACGTACGTTT"));
  ReadProfile profile("ACGTACGTTT", index, {2, 3});
  const SelectionResult two = naive_select(profile, 2, 2);
  REQUIRE(two.seeds.seeds.size() == 2);
  CHECK(two.seeds.seeds[0] == Placement{0, 2, 2});
  CHECK(two.seeds.seeds[1] == Placement{2, 4, 2});
  CHECK(two.seeds.total_freq == 4);
  CHECK(two.counters.lookups == 2);

  const SelectionResult one = naive_select(profile, 1, 2);
  CHECK(one.seeds.total_freq == naive_count("ACGTACGTTT", "AC"));

  // x*k == L tiles the read exactly
  const SelectionResult tiled = naive_select(profile, 5, 2);
  CHECK(tiled.seeds.seeds.back().end == 10);
  CHECK_THROWS_WITH_AS(naive_select(profile, 6, 2), "read too short for scheme",
                       std::runtime_error);
}

TEST_CASE("cks_select candidate pool and tie-breaking") {
  Fixture fx(101, 20000);
  std::mt19937_64 rng(103);
  const std::string read = testutil::sample_read(rng, fx.text, 100, 2);
  ReadProfile profile(read, fx.index, {10, 30});
  const SelectionResult result = cks_select(profile, 3, 12);
  CHECK(result.counters.lookups == 8);  // floor(100/12) candidates
  for (const Placement& p : result.seeds.seeds) {
    CHECK(p.begin % 12 == 0);
    CHECK(p.length() == 12);
  }
  CHECK_THROWS_WITH_AS(cks_select(profile, 9, 12), "not enough candidate positions",
                       std::runtime_error);

  // equal frequencies: the first x positions win
  FrequencyIndex flat = build_index(PackedReference("r", std::string(40, 'A')));
  ReadProfile flat_profile(std::string(12, 'A'), flat, {2, 4});
  const SelectionResult tie = cks_select(flat_profile, 2, 3);
  CHECK(tie.seeds.seeds[0].begin == 0);
  CHECK(tie.seeds.seeds[1].begin == 3);
}

TEST_CASE("ops_select is optimal among fixed-length placements") {
  Fixture fx(107);
  std::mt19937_64 rng(109);
  for (int round = 0; round < 25; ++round) {
    const int L = 20 + static_cast<int>(rng() % 20);
    const int k = 4 + static_cast<int>(rng() % 3);
    const int x = 1 + static_cast<int>(rng() % 3);
    if (x * k > L) continue;
    const std::string read = testutil::sample_read(rng, fx.text, L, 2);
    ReadProfile profile(read, fx.index, {k, k});
    const SelectionResult ops = ops_select(profile, x, k);
    const SelectionResult oracle = brute_force_optimal(profile, x);
    CHECK(ops.seeds.total_freq == oracle.seeds.total_freq);
    CHECK(ops.counters.lookups == static_cast<std::uint64_t>(L - k + 1));
    for (std::size_t i = 0; i < ops.seeds.seeds.size(); ++i) {
      CHECK(ops.seeds.seeds[i].length() == k);
      if (i > 0) CHECK(ops.seeds.seeds[i].begin >= ops.seeds.seeds[i - 1].end);
    }
  }
}

TEST_CASE("ops x=1 equals the sliding-window minimum") {
  Fixture fx(113);
  std::mt19937_64 rng(127);
  const std::string read = testutil::sample_read(rng, fx.text, 40, 2);
  const int k = 6;
  ReadProfile profile(read, fx.index, {k, k});
  CHECK(ops_select(profile, 1, k).seeds.total_freq == profile.opt1(0, 40));
}

TEST_CASE("dominance chain with aligned parameters") {
  Fixture fx(131, 20000);
  std::mt19937_64 rng(137);
  const int k = 12;
  for (int round = 0; round < 20; ++round) {
    const std::string read = testutil::sample_read(rng, fx.text, 101, 2);
    ReadProfile profile(read, fx.index, {k, k});
    for (int x = 1; x <= 4; ++x) {
      const std::uint64_t oss_total = optimal_seed_solver(profile, x).seeds.total_freq;
      const std::uint64_t ops_total = ops_select(profile, x, k).seeds.total_freq;
      const std::uint64_t cks_total = cks_select(profile, x, k).seeds.total_freq;
      const std::uint64_t naive_total = naive_select(profile, x, k).seeds.total_freq;
      CHECK(oss_total <= ops_total);
      CHECK(ops_total <= cks_total);
      CHECK(cks_total <= naive_total);
    }
  }
}

TEST_CASE("asf with a huge threshold equals naive at s_min") {
  Fixture fx(139);
  std::mt19937_64 rng(149);
  const std::string read = testutil::sample_read(rng, fx.text, 60, 2);
  ReadProfile profile(read, fx.index, {5, 12});
  const SelectionResult asf =
      asf_select(profile, 4, std::numeric_limits<std::uint64_t>::max(), 12);
  const SelectionResult naive = naive_select(profile, 4, 5);
  CHECK_FALSE(asf.fallback);
  CHECK(asf.seeds.total_freq == naive.seeds.total_freq);
  for (const Placement& p : asf.seeds.seeds) CHECK(p.length() == 5);
}

TEST_CASE("asf with t=0 extends to s_max and falls back to cks") {
  Fixture fx(151, 30000);
  std::mt19937_64 rng(157);
  // near-unique read: every max-length window still has freq >= 1 > 0
  const std::string read = testutil::sample_read(rng, fx.text, 36, 0);
  ReadProfile profile(read, fx.index, {10, 20});
  // seeds extend greedily (20bp + 16bp exhaust the read), leaving no room
  // for a third: ASF fails, CKS with k=12 takes over
  const SelectionResult result = asf_select(profile, 3, 0, 12);
  CHECK(result.fallback);
  const SelectionResult cks = cks_select(profile, 3, 12);
  CHECK(result.seeds.total_freq == cks.seeds.total_freq);
  CHECK(result.seeds.seeds == cks.seeds.seeds);

  // fallback itself infeasible
  ReadProfile short_profile(testutil::sample_read(rng, fx.text, 11, 0), fx.index, {10, 20});
  CHECK_THROWS_WITH_AS(asf_select(short_profile, 3, 0, 12), "scheme failed",
                       std::runtime_error);
}

TEST_CASE("asf acceptance condition is count <= t") {
  // threshold equal to the first window's count stops extension immediately
  FrequencyIndex index = build_index(PackedReference("r", "ACGTACGTTT"));
  ReadProfile profile("ACGTACGTTT", index, {2, 5});
  const std::uint64_t first = index.count("AC");
  const SelectionResult result = asf_select(profile, 1, first, 12);
  CHECK(result.seeds.seeds[0].length() == 2);
  CHECK(result.seeds.seeds[0].freq == first);
}

TEST_CASE("spaced selection with the identity mask equals naive") {
  std::mt19937_64 rng(163);
  const std::string text = testutil::repetitive_reference(rng, 5000);
  const std::string identity(8, '1');
  FrequencyIndex index = build_index(PackedReference("r", text), identity);
  for (int round = 0; round < 10; ++round) {
    const std::string read = testutil::sample_read(rng, text, 40, 2);
    ReadProfile profile(read, index, {8, 8});
    for (int x = 1; x <= 4; ++x) {
      const SelectionResult spaced = spaced_select(read, index.spaced, x);
      const SelectionResult naive = naive_select(profile, x, 8);
      CHECK(spaced.seeds.total_freq == naive.seeds.total_freq);
      CHECK(spaced.counters.lookups == static_cast<std::uint64_t>(x));
    }
  }
}

TEST_CASE("spaced selection limits and N handling") {
  Fixture fx(167);
  // default mask, 18 bp: a 101-bp read hosts at most 5 seeds
  std::mt19937_64 rng(173);
  const std::string read = testutil::sample_read(rng, fx.text, 101, 0);
  CHECK(spaced_select(read, fx.index.spaced, 5).seeds.seeds.size() == 5);
  CHECK_THROWS_WITH_AS(spaced_select(read, fx.index.spaced, 6),
                       "read too short for scheme", std::runtime_error);

  std::string with_n = read;
  with_n[0] = 'N';  // first window's signature unseen -> zero contribution
  const SelectionResult result = spaced_select(with_n, fx.index.spaced, 1);
  CHECK(result.seeds.total_freq == 0);
}
