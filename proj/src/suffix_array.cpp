#include "oss/suffix_array.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "oss/dna.hpp"

namespace oss {

SuffixArray SuffixArray::build(const PackedReference& ref) {
  const std::size_t n = ref.size();
  if (n == 0) throw std::invalid_argument("empty reference");

  std::vector<std::int64_t> rank(n), next_rank(n);
  std::vector<std::uint64_t> sa(n);
  std::iota(sa.begin(), sa.end(), 0);
  for (std::size_t i = 0; i < n; ++i) rank[i] = ref.symbol(i);

  // Prefix doubling; suffixes shorter than the compared span key as -1,
  // which puts a suffix before any proper extension of it.
  for (std::size_t k = 1;; k <<= 1) {
    auto key = [&](std::uint64_t i) {
      return std::pair<std::int64_t, std::int64_t>(
          rank[i], i + k < n ? rank[i + k] : -1);
    };
    std::sort(sa.begin(), sa.end(),
              [&](std::uint64_t a, std::uint64_t b) { return key(a) < key(b); });
    next_rank[sa[0]] = 0;
    for (std::size_t i = 1; i < n; ++i)
      next_rank[sa[i]] = next_rank[sa[i - 1]] + (key(sa[i - 1]) < key(sa[i]) ? 1 : 0);
    rank.swap(next_rank);
    if (rank[sa[n - 1]] == static_cast<std::int64_t>(n - 1)) break;
  }

  SuffixArray result;
  result.sa_ = std::move(sa);
  return result;
}

SuffixArray SuffixArray::from_positions(std::vector<std::uint64_t> sa) {
  SuffixArray result;
  result.sa_ = std::move(sa);
  return result;
}

std::uint64_t SuffixArray::count(const PackedReference& ref,
                                 std::string_view pattern) const {
  if (pattern.empty()) throw std::invalid_argument("empty pattern");
  const std::size_t n = ref.size();
  if (pattern.size() > n) return 0;

  std::vector<int> pat(pattern.size());
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    int code = base_code(pattern[i]);
    if (code < 0) return 0;
    pat[i] = code + 1;
  }

  // -1: suffix prefix < pattern, 0: equal over |pattern|, +1: greater.
  auto compare = [&](std::uint64_t pos) {
    for (std::size_t j = 0; j < pat.size(); ++j) {
      if (pos + j >= n) return -1;  // suffix ran out, sorts before
      int s = ref.symbol(pos + j);
      if (s != pat[j]) return s < pat[j] ? -1 : 1;
    }
    return 0;
  };

  auto lo = std::partition_point(sa_.begin(), sa_.end(),
                                 [&](std::uint64_t p) { return compare(p) < 0; });
  auto hi = std::partition_point(lo, sa_.end(),
                                 [&](std::uint64_t p) { return compare(p) == 0; });
  return static_cast<std::uint64_t>(hi - lo);
}

}  // namespace oss
