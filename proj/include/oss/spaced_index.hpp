#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "oss/packed_reference.hpp"

namespace oss {

// Rebalancing hash database for spaced seeds: every w-length window of the
// reference containing no masked base contributes one count to the signature
// obtained by extracting the bases at the mask's 1-positions.
struct SpacedIndex {
  std::string mask;  // '0'/'1' string, length w
  std::map<std::string, std::uint64_t> table;

  bool empty() const { return mask.empty(); }
  int weight() const;
  std::uint64_t signature_count(std::string_view signature) const;
};

// Throws std::invalid_argument("mask/window length mismatch") on size mismatch.
std::string apply_mask(std::string_view window, std::string_view mask);

// Throws std::invalid_argument("degenerate mask") when the mask is empty or
// has no 1-positions.
SpacedIndex build_spaced_index(const PackedReference& ref, std::string_view mask);

}  // namespace oss
