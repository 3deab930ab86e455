#include "oss/solver.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace oss {
namespace {

SelectionResult solve(const ReadProfile& profile, int x, bool optimized) {
  const int L = profile.length();
  const int smin = profile.bounds().min_len;
  if (x < 1) throw std::invalid_argument("seed count must be positive");
  if (static_cast<long long>(x) * smin > L)
    throw std::runtime_error("read cannot host x seeds");

  SelectionResult result;
  result.counters.lookups = profile.lookup_count();

  if (x == 1) {
    Placement p = profile.opt1_argmin(0, L);
    result.seeds.seeds = {p};
    result.seeds.total_freq = p.freq;
    return result;
  }

  OptTable table(x - 1, L);
  for (int l = smin; l <= L; ++l) {
    table.cell(1, l).freq = profile.opt1(0, l);
    table.cell(1, l).div = 0;
  }

  for (int m = 2; m <= x - 1; ++m) {
    // Substrings processed longest to shortest; each scan starts at the
    // previous (longer) substring's first optimal divider (cascading),
    // clamped to this substring's last legal divider.
    int start = L - smin;
    for (int l = L; l >= m * smin; --l) {
      const int from = optimized ? std::min(start, l - smin) : l - smin;
      const DividerScan scan = first_opt_divider(profile, table, m, l, from, optimized);
      table.cell(m, l) = OptCell{scan.total, scan.divider};
      result.counters.divisions_examined += scan.examined;
      ++result.counters.substrings_processed;
      assert(l == L || table.cell(m, l).freq >= table.cell(m, l + 1).freq);
      assert(l == L || table.cell(m, l).div <= table.cell(m, l + 1).div);
      if (optimized) start = scan.divider;
    }
  }

  // Final combination: the m = x instance of the same scan, over the full read.
  const DividerScan last = first_opt_divider(profile, table, x, L, L - smin, optimized);
  result.counters.divisions_examined += last.examined;
  ++result.counters.substrings_processed;

  result.table = std::move(table);
  result.seeds = backtrack(profile, result.table, x, last.divider);
  assert(result.seeds.total_freq == last.total && "corrupt DP table");
  return result;
}

}  // namespace

DividerScan first_opt_divider(const ReadProfile& profile, const OptTable& table,
                              int seeds_in_prefix, int prefix_len, int start_div,
                              bool early_termination) {
  const int smin = profile.bounds().min_len;
  const int lowest = (seeds_in_prefix - 1) * smin;
  assert(seeds_in_prefix >= 2);
  assert(prefix_len >= seeds_in_prefix * smin && prefix_len <= profile.length());
  assert(start_div >= lowest && start_div <= prefix_len - smin);

  DividerScan scan;
  std::uint64_t prev_first = kInfFreq;
  std::uint64_t prev_second = kInfFreq;
  for (int d = start_div; d >= lowest; --d) {
    const std::uint64_t first = table.cell(seeds_in_prefix - 1, d).freq;
    const std::uint64_t second = profile.opt1(d, prefix_len);
    ++scan.examined;
    // Early divider termination: once the first part grows by more than the
    // second part could still shed, no earlier divider can win. Sentinels
    // disable the check until both parts were feasible at the previous step.
    if (early_termination && prev_first != kInfFreq && prev_second != kInfFreq &&
        first != kInfFreq && first > prev_first && first - prev_first > prev_second)
      break;
    const std::uint64_t total = add_freq(first, second);
    if (total <= scan.total) {  // <= keeps the smaller divider on ties
      scan.total = total;
      scan.divider = d;
    }
    prev_first = first;
    prev_second = second;
  }
  return scan;
}

SeedSet backtrack(const ReadProfile& profile, const OptTable& table, int x,
                  int final_div) {
  const int L = profile.length();
  // boundaries[i-1] is where seed i's segment begins; segment i is
  // [boundaries[i-1], boundaries[i]).
  std::vector<int> boundaries(static_cast<std::size_t>(x) + 1);
  boundaries[0] = 0;
  boundaries[x] = L;
  if (x >= 2) {
    boundaries[x - 1] = final_div;
    int prev = final_div;
    for (int iter = x - 1; iter >= 2; --iter) {
      const int d = table.cell(iter, prev).div;
      assert(d >= (iter - 1) * profile.bounds().min_len && d <= prev && "corrupt DP table");
      boundaries[iter - 1] = d;
      prev = d;
    }
  }

  SeedSet set;
  set.seeds.reserve(static_cast<std::size_t>(x));
  for (int i = 0; i < x; ++i) {
    const Placement p = profile.opt1_argmin(boundaries[i], boundaries[i + 1]);
    assert((set.seeds.empty() || p.begin >= set.seeds.back().end) && "corrupt DP table");
    set.seeds.push_back(p);
    set.total_freq = add_freq(set.total_freq, p.freq);
  }
  return set;
}

SelectionResult optimal_seed_solver(const ReadProfile& profile, int x) {
  return solve(profile, x, true);
}

SelectionResult full_scan_solver(const ReadProfile& profile, int x) {
  return solve(profile, x, false);
}

bool verify_opt_table(const OptTable& table, const ReadProfile& profile,
                      std::string* why) {
  const int smin = profile.bounds().min_len;
  auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };
  for (int m = 1; m <= table.rows(); ++m) {
    for (int l = 0; l <= table.length(); ++l) {
      const OptCell& c = table.cell(m, l);
      if (l < m * smin) {
        if (c.freq != kInfFreq)
          return fail("feasibility: finite cell below m*s_min at (" +
                      std::to_string(m) + "," + std::to_string(l) + ")");
        continue;
      }
      if (c.freq == kInfFreq)
        return fail("feasibility: infeasible cell at (" + std::to_string(m) +
                    "," + std::to_string(l) + ")");
      if (l > m * smin) {
        if (table.cell(m, l - 1).freq < c.freq)
          return fail("row monotonicity violated at (" + std::to_string(m) +
                      "," + std::to_string(l) + ")");
        if (m >= 2 && table.cell(m, l - 1).div > c.div)
          return fail("divider cascading violated at (" + std::to_string(m) +
                      "," + std::to_string(l) + ")");
      }
    }
  }
  return true;
}

std::uint64_t legal_division_count(const ReadProfile& profile, int x) {
  const int L = profile.length();
  const int smin = profile.bounds().min_len;
  std::uint64_t total = 0;
  for (int m = 2; m <= x - 1; ++m)
    for (int l = m * smin; l <= L; ++l)
      total += static_cast<std::uint64_t>((l - smin) - (m - 1) * smin + 1);
  if (x >= 2) total += static_cast<std::uint64_t>((L - smin) - (x - 1) * smin + 1);
  return total;
}

}  // namespace oss
