#pragma once

#include <cstdint>
#include <string_view>

#include "oss/read_profile.hpp"
#include "oss/solver.hpp"

namespace oss {

// Fixed-length seeds selected consecutively from the start of the read.
// Exactly x index lookups. Throws "read too short for scheme".
SelectionResult naive_select(const ReadProfile& profile, int x, int k);

// Cheap K-mer Selection: candidate starts every k bp (floor(L/k) of them,
// one lookup each), the x least frequent chosen, ties to the smaller start.
// Throws "not enough candidate positions".
SelectionResult cks_select(const ReadProfile& profile, int x, int k);

// Optimal Prefix Selection: DP over all non-overlapping length-k placements;
// optimal within that space. L-k+1 lookups. Throws "read too short for scheme".
SelectionResult ops_select(const ReadProfile& profile, int x, int k);

// Adaptive Seeds Filter: consecutive seeds, each extended from min_len until
// its frequency drops to <= t, capped at max_len or the read end. When fewer
// than x seeds fit, the read fails ASF and the result falls back to
// cks_select(profile, x, fallback_k) with the fallback flag set. Throws
// "scheme failed" when the fallback is infeasible too.
SelectionResult asf_select(const ReadProfile& profile, int x, std::uint64_t t,
                           int fallback_k);

// Spaced seeds: consecutive mask-length windows scored by the rebalancing
// signature database; unseen signatures count 0. Exactly x lookups. Throws
// "read too short for scheme".
SelectionResult spaced_select(std::string_view read, const SpacedIndex& spaced,
                              int x);

}  // namespace oss
