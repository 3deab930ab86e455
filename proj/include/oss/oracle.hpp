#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "oss/read_profile.hpp"
#include "oss/solver.hpp"

namespace oss {

// O(n*m) scan; 'N' (or any non-ACGT character) in text or pattern never
// matches. Overlapping occurrences are counted. Test/validation oracle for
// SuffixArray::count.
std::uint64_t naive_count(std::string_view text, std::string_view pattern);

// Enumerates every tuple of x non-overlapping seed placements with lengths
// within bounds, each exactly once, in lexicographic order of
// (begin_1, end_1, begin_2, ...).
class PlacementEnumerator {
 public:
  PlacementEnumerator(int read_length, int x, SeedBounds bounds);

  std::uint64_t count() const;
  void for_each(const std::function<void(const std::vector<Placement>&)>& fn) const;

 private:
  int length_;
  int x_;
  SeedBounds bounds_;
};

// Exhaustive minimum over all placements; ties broken lexicographically.
// Throws std::runtime_error("instance too large for oracle") when the
// placement count exceeds 10^8, and "read cannot host x seeds" when
// infeasible.
SelectionResult brute_force_optimal(const ReadProfile& profile, int x);

}  // namespace oss
