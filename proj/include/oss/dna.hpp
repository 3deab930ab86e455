#pragma once

#include <cstdint>
#include <limits>

namespace oss {

// Frequencies are exact occurrence counts in the reference. kInfFreq marks
// structurally infeasible intervals (too short to host the required seeds);
// it is strictly greater than any real count and absorbs under addition.
inline constexpr std::uint64_t kInfFreq = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t add_freq(std::uint64_t a, std::uint64_t b) {
  if (a == kInfFreq || b == kInfFreq) return kInfFreq;
  return a + b;
}

// A=0 C=1 G=2 T=3; -1 for anything else (treated as N).
inline int base_code(char c) {
  switch (c) {
    case 'A': case 'a': return 0;
    case 'C': case 'c': return 1;
    case 'G': case 'g': return 2;
    case 'T': case 't': return 3;
    default: return -1;
  }
}

inline char base_char(int code) { return "ACGT"[code]; }

}  // namespace oss
