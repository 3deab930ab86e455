#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "oss/packed_reference.hpp"

namespace oss {

// Plain suffix array over the decoded reference text. Masked positions order
// below 'A' as a sentinel that no pattern character equals, so occurrence
// counts never span an N. Queries are two binary searches,
// O(|pattern| * log n).
class SuffixArray {
 public:
  SuffixArray() = default;

  static SuffixArray build(const PackedReference& ref);
  static SuffixArray from_positions(std::vector<std::uint64_t> sa);

  const std::vector<std::uint64_t>& positions() const { return sa_; }

  // Exact number of occurrence start positions of pattern in ref. A pattern
  // containing a non-ACGT character has zero occurrences by definition.
  // Throws std::invalid_argument("empty pattern") on an empty pattern.
  std::uint64_t count(const PackedReference& ref, std::string_view pattern) const;

 private:
  std::vector<std::uint64_t> sa_;
};

}  // namespace oss
