#include "oss/read_profile.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace oss {

ReadProfile::ReadProfile(std::string read, const FrequencyIndex& index,
                         SeedBounds bounds)
    : read_(std::move(read)), bounds_(bounds), index_(&index) {
  if (bounds_.min_len < 1 || bounds_.min_len > bounds_.max_len)
    throw std::invalid_argument("bad seed bounds");
  const int L = length();
  if (L < bounds_.min_len) throw std::runtime_error("read too short");

  const int max_len = std::min(bounds_.max_len, L);
  freq_offsets_.assign(static_cast<std::size_t>(max_len - bounds_.min_len) + 2, 0);
  for (int len = bounds_.min_len; len <= max_len; ++len)
    freq_offsets_[len - bounds_.min_len + 1] =
        freq_offsets_[len - bounds_.min_len] + static_cast<std::size_t>(L - len + 1);
  freq_.assign(freq_offsets_.back(), 0);

  for (int len = bounds_.min_len; len <= max_len; ++len) {
    for (int begin = 0; begin + len <= L; ++begin) {
      // Seeds containing N count 0 occurrences (the index returns 0 for them).
      freq_[freq_offsets_[len - bounds_.min_len] + begin] =
          index.count(std::string_view(read_).substr(begin, len));
      ++lookups_;
    }
  }

  // opt1(i,j) = min(opt1(i+1,j), opt1(i,j-1), freq(i, j-i) if j-i <= max).
  opt1_.assign(static_cast<std::size_t>(L + 1) * (L + 1), kInfFreq);
  for (int len = bounds_.min_len; len <= L; ++len) {
    for (int begin = 0; begin + len <= L; ++begin) {
      const int end = begin + len;
      std::uint64_t best = std::min(opt1_cell(begin + 1, end), opt1_cell(begin, end - 1));
      if (len <= max_len)
        best = std::min(best, freq_[freq_offsets_[len - bounds_.min_len] + begin]);
      opt1_cell(begin, end) = best;
    }
  }
}

std::uint64_t ReadProfile::seed_freq(int begin, int len) const {
  assert(len >= bounds_.min_len && len <= bounds_.max_len);
  assert(begin >= 0 && begin + len <= length());
  return freq_[freq_offsets_[len - bounds_.min_len] + begin];
}

std::uint64_t ReadProfile::opt1(int begin, int end) const {
  if (begin < 0 || end > length() || begin >= end)
    throw std::out_of_range("bad interval");
  return opt1_[static_cast<std::size_t>(begin) * (length() + 1) + end];
}

Placement ReadProfile::opt1_argmin(int begin, int end) const {
  const std::uint64_t target = opt1(begin, end);
  if (target == kInfFreq) throw std::out_of_range("bad interval");
  const int max_len = std::min(bounds_.max_len, length());
  for (int a = begin; a + bounds_.min_len <= end; ++a)
    for (int len = bounds_.min_len; len <= max_len && a + len <= end; ++len)
      if (seed_freq(a, len) == target) return Placement{a, a + len, target};
  assert(false && "opt1 table inconsistent with seed frequencies");
  return {};
}

}  // namespace oss
