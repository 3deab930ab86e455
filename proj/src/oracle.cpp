#include "oss/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "oss/dna.hpp"

namespace oss {

std::uint64_t naive_count(std::string_view text, std::string_view pattern) {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  if (pattern.size() > text.size()) return 0;
  std::uint64_t hits = 0;
  for (std::size_t p = 0; p + pattern.size() <= text.size(); ++p) {
    bool match = true;
    for (std::size_t j = 0; j < pattern.size(); ++j) {
      const char t = text[p + j];
      const char q = pattern[j];
      if (base_code(t) < 0 || base_code(q) < 0 || base_code(t) != base_code(q)) {
        match = false;
        break;
      }
    }
    if (match) ++hits;
  }
  return hits;
}

PlacementEnumerator::PlacementEnumerator(int read_length, int x, SeedBounds bounds)
    : length_(read_length), x_(x), bounds_(bounds) {
  if (x < 1) throw std::invalid_argument("seed count must be positive");
  if (bounds.min_len < 1 || bounds.min_len > bounds.max_len)
    throw std::invalid_argument("bad seed bounds");
}

std::uint64_t PlacementEnumerator::count() const {
  // ways[m][pos]: placements of m more seeds in [pos, length).
  const std::size_t cols = static_cast<std::size_t>(length_) + 1;
  std::vector<std::uint64_t> prev(cols, 1), cur(cols, 0);
  for (int m = 1; m <= x_; ++m) {
    for (int pos = length_; pos >= 0; --pos) {
      std::uint64_t total = pos + 1 <= length_ ? cur[pos + 1] : 0;
      for (int len = bounds_.min_len;
           len <= bounds_.max_len && pos + len <= length_; ++len)
        total += prev[pos + len];
      cur[pos] = total;
    }
    prev = cur;
  }
  return prev[0];
}

void PlacementEnumerator::for_each(
    const std::function<void(const std::vector<Placement>&)>& fn) const {
  std::vector<Placement> stack;
  stack.reserve(static_cast<std::size_t>(x_));
  auto recurse = [&](auto&& self, int pos, int remaining) -> void {
    if (remaining == 0) {
      fn(stack);
      return;
    }
    for (int begin = pos; begin + remaining * bounds_.min_len <= length_; ++begin) {
      for (int len = bounds_.min_len;
           len <= bounds_.max_len &&
           begin + len + (remaining - 1) * bounds_.min_len <= length_;
           ++len) {
        stack.push_back(Placement{begin, begin + len, 0});
        self(self, begin + len, remaining - 1);
        stack.pop_back();
      }
    }
  };
  recurse(recurse, 0, x_);
}

SelectionResult brute_force_optimal(const ReadProfile& profile, int x) {
  const int L = profile.length();
  const SeedBounds bounds = profile.bounds();
  if (static_cast<long long>(x) * bounds.min_len > L)
    throw std::runtime_error("read cannot host x seeds");
  PlacementEnumerator enumerator(L, x, bounds);
  if (enumerator.count() > 100'000'000ULL)
    throw std::runtime_error("instance too large for oracle");

  SelectionResult result;
  result.seeds.total_freq = kInfFreq;

  const int max_len = std::min(bounds.max_len, L);
  std::vector<Placement> stack;
  stack.reserve(static_cast<std::size_t>(x));
  // Lexicographic enumeration with strict improvement keeps the
  // lexicographically first minimum.
  auto recurse = [&](auto&& self, int pos, int remaining, std::uint64_t running) -> void {
    if (remaining == 0) {
      if (running < result.seeds.total_freq) {
        result.seeds.total_freq = running;
        result.seeds.seeds = stack;
      }
      return;
    }
    for (int begin = pos; begin + remaining * bounds.min_len <= L; ++begin) {
      for (int len = bounds.min_len;
           len <= max_len && begin + len + (remaining - 1) * bounds.min_len <= L;
           ++len) {
        const std::uint64_t f = profile.seed_freq(begin, len);
        stack.push_back(Placement{begin, begin + len, f});
        self(self, begin + len, remaining - 1, running + f);
        stack.pop_back();
      }
    }
  };
  recurse(recurse, 0, x, 0);
  return result;
}

}  // namespace oss
