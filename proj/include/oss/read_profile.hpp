#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "oss/dna.hpp"
#include "oss/frequency_index.hpp"

namespace oss {

struct SeedBounds {
  int min_len = 10;
  int max_len = 30;
};

// One seed placement within a read, [begin, end) 0-based; freq is the
// occurrence count of the corresponding substring in the reference.
struct Placement {
  int begin = 0;
  int end = 0;
  std::uint64_t freq = 0;

  int length() const { return end - begin; }
  auto operator<=>(const Placement&) const = default;
};

// Per-read cache of every legal seed frequency and of the optimal 1-seed
// frequency of every interval. Built eagerly with exactly
// sum_{len=min..min(max,L)} (L-len+1) index lookups.
class ReadProfile {
 public:
  ReadProfile(std::string read, const FrequencyIndex& index, SeedBounds bounds);

  int length() const { return static_cast<int>(read_.size()); }
  const std::string& read() const { return read_; }
  SeedBounds bounds() const { return bounds_; }
  const FrequencyIndex& index() const { return *index_; }
  std::uint64_t lookup_count() const { return lookups_; }

  // Occurrence count of read[begin, begin+len); len must lie in bounds.
  std::uint64_t seed_freq(int begin, int len) const;

  // Optimal 1-seed frequency of interval [begin, end): the minimum seed_freq
  // over every legal sub-seed. kInfFreq when the interval is shorter than the
  // minimum seed length. Throws std::out_of_range("bad interval").
  std::uint64_t opt1(int begin, int end) const;

  // A placement achieving opt1(begin, end), smallest (begin, length) on ties.
  Placement opt1_argmin(int begin, int end) const;

 private:
  std::uint64_t& opt1_cell(int begin, int end) {
    return opt1_[static_cast<std::size_t>(begin) * (read_.size() + 1) + end];
  }

  std::string read_;
  SeedBounds bounds_;
  const FrequencyIndex* index_;
  std::uint64_t lookups_ = 0;
  std::vector<std::uint64_t> freq_;  // [len - min_len][begin]
  std::vector<std::size_t> freq_offsets_;
  std::vector<std::uint64_t> opt1_;  // (L+1)^2, half-open intervals
};

}  // namespace oss
