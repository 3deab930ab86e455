#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "oss/packed_reference.hpp"
#include "oss/spaced_index.hpp"
#include "oss/suffix_array.hpp"

namespace oss {

// The seed database: reference text plus the structures answering
// occurrence-count queries. Immutable after construction; concurrent
// read-only queries are safe.
struct FrequencyIndex {
  PackedReference reference;
  SuffixArray suffixes;
  SpacedIndex spaced;  // empty when no mask was given at build time

  std::uint64_t count(std::string_view pattern) const {
    return suffixes.count(reference, pattern);
  }
};

FrequencyIndex build_index(PackedReference ref, std::string_view spaced_mask = {});

// Binary format: magic "OSSIDX01", version u32 LE, reference length u64 LE,
// packed bases, N-mask bitset, suffix array as u64 LE, spaced-mask length
// u32 LE + ASCII mask + (signature bytes, count u64 LE) pairs sorted by key.
void save_index(const FrequencyIndex& index, std::ostream& out);
void save_index(const FrequencyIndex& index, const std::filesystem::path& path);

// Throws std::runtime_error: "incompatible index" on bad magic/version,
// "corrupt index" on truncation.
FrequencyIndex load_index(std::istream& in);
FrequencyIndex load_index(const std::filesystem::path& path);

}  // namespace oss
