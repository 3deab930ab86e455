#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oss/read_profile.hpp"

namespace oss {

// DP cell for prefix [0, l) under m seeds: the optimal total frequency and
// the first optimal divider (0-based start of the 1-seed second part).
struct OptCell {
  std::uint64_t freq = kInfFreq;
  int div = -1;
};

// Rows 1..x-1 by prefix lengths 0..L; cell(m, l) describes the optimal
// m-seed solution of read[0, l). Cells with l < m*min_len stay infeasible.
class OptTable {
 public:
  OptTable() = default;
  OptTable(int rows, int length)
      : rows_(rows), length_(length),
        cells_(static_cast<std::size_t>(rows) * (length + 1)) {}

  int rows() const { return rows_; }
  int length() const { return length_; }

  const OptCell& cell(int m, int l) const {
    return cells_[static_cast<std::size_t>(m - 1) * (length_ + 1) + l];
  }
  OptCell& cell(int m, int l) {
    return cells_[static_cast<std::size_t>(m - 1) * (length_ + 1) + l];
  }

 private:
  int rows_ = 0;
  int length_ = 0;
  std::vector<OptCell> cells_;
};

struct SeedSet {
  std::vector<Placement> seeds;  // sorted, pairwise non-overlapping
  std::uint64_t total_freq = 0;
};

struct SolverCounters {
  std::uint64_t divisions_examined = 0;
  std::uint64_t lookups = 0;
  std::uint64_t substrings_processed = 0;
};

struct SelectionResult {
  SeedSet seeds;
  SolverCounters counters;
  OptTable table;  // filled by the DP solvers, empty otherwise
  bool fallback = false;
};

struct DividerScan {
  int divider = -1;
  std::uint64_t total = kInfFreq;
  std::uint64_t examined = 0;
};

// Backward divider scan for prefix [0, prefix_len) holding seeds_in_prefix
// seeds: dividers run from start_div down to (seeds_in_prefix-1)*min_len,
// the first part [0, d) taking its frequency from row seeds_in_prefix-1 and
// the second part [d, prefix_len) from opt1. Ties keep the smaller divider,
// which is the first optimal divider. With early_termination the scan stops
// once the first part's frequency growth exceeds the second part's previous
// frequency; the result is identical to a full scan.
DividerScan first_opt_divider(const ReadProfile& profile, const OptTable& table,
                              int seeds_in_prefix, int prefix_len, int start_div,
                              bool early_termination = true);

// Recovers the x placements from a filled table and the full read's divider.
SeedSet backtrack(const ReadProfile& profile, const OptTable& table, int x,
                  int final_div);

// The optimal seed solver: x non-overlapping seeds with lengths within the
// profile's bounds minimizing total frequency, using divider cascading and
// early divider termination. Throws std::runtime_error
// ("read cannot host x seeds") when L < x*min_len.
SelectionResult optimal_seed_solver(const ReadProfile& profile, int x);

// Same answer, every substring scans all legal dividers (internal oracle for
// prune-safety).
SelectionResult full_scan_solver(const ReadProfile& profile, int x);

// Row monotonicity and divider cascading over the filled region.
bool verify_opt_table(const OptTable& table, const ReadProfile& profile,
                      std::string* why = nullptr);

// Number of legal dividers summed over all substrings the solver visits,
// i.e. the full-scan work for this instance.
std::uint64_t legal_division_count(const ReadProfile& profile, int x);

}  // namespace oss
