#include "oss/baselines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace oss {
namespace {

std::uint64_t window_count(const ReadProfile& profile, int begin, int len,
                           SolverCounters& counters) {
  ++counters.lookups;
  return profile.index().count(
      std::string_view(profile.read()).substr(begin, len));
}

}  // namespace

SelectionResult naive_select(const ReadProfile& profile, int x, int k) {
  if (x < 1 || k < 1) throw std::invalid_argument("bad scheme parameters");
  if (static_cast<long long>(x) * k > profile.length())
    throw std::runtime_error("read too short for scheme");
  SelectionResult result;
  for (int i = 0; i < x; ++i) {
    const int begin = i * k;
    const std::uint64_t f = window_count(profile, begin, k, result.counters);
    result.seeds.seeds.push_back(Placement{begin, begin + k, f});
    result.seeds.total_freq += f;
  }
  return result;
}

SelectionResult cks_select(const ReadProfile& profile, int x, int k) {
  if (x < 1 || k < 1) throw std::invalid_argument("bad scheme parameters");
  const int candidates = profile.length() / k;
  if (x > candidates) throw std::runtime_error("not enough candidate positions");

  SelectionResult result;
  std::vector<std::uint64_t> freq(static_cast<std::size_t>(candidates));
  for (int i = 0; i < candidates; ++i)
    freq[i] = window_count(profile, i * k, k, result.counters);

  std::vector<int> order(freq.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return freq[a] < freq[b]; });
  order.resize(static_cast<std::size_t>(x));
  std::sort(order.begin(), order.end());

  for (int i : order) {
    result.seeds.seeds.push_back(Placement{i * k, i * k + k, freq[i]});
    result.seeds.total_freq += freq[i];
  }
  return result;
}

SelectionResult ops_select(const ReadProfile& profile, int x, int k) {
  if (x < 1 || k < 1) throw std::invalid_argument("bad scheme parameters");
  const int L = profile.length();
  if (static_cast<long long>(x) * k > L)
    throw std::runtime_error("read too short for scheme");

  SelectionResult result;
  std::vector<std::uint64_t> window(static_cast<std::size_t>(L - k) + 1);
  for (int begin = 0; begin + k <= L; ++begin)
    window[begin] = window_count(profile, begin, k, result.counters);

  // best[m][j]: optimal total of m seeds within the prefix [0, j).
  const std::size_t cols = static_cast<std::size_t>(L) + 1;
  std::vector<std::vector<std::uint64_t>> best(
      static_cast<std::size_t>(x) + 1, std::vector<std::uint64_t>(cols, kInfFreq));
  std::fill(best[0].begin(), best[0].end(), 0);
  for (int m = 1; m <= x; ++m)
    for (int j = m * k; j <= L; ++j)
      best[m][j] = std::min(best[m][j - 1],
                            add_freq(best[m - 1][j - k], window[j - k]));

  result.seeds.total_freq = best[x][L];
  int j = L;
  for (int m = x; m >= 1; --m) {
    while (j > m * k && best[m][j] == best[m][j - 1]) --j;
    result.seeds.seeds.push_back(Placement{j - k, j, window[j - k]});
    j -= k;
  }
  std::reverse(result.seeds.seeds.begin(), result.seeds.seeds.end());
  return result;
}

SelectionResult asf_select(const ReadProfile& profile, int x, std::uint64_t t,
                           int fallback_k) {
  if (x < 1) throw std::invalid_argument("bad scheme parameters");
  const int L = profile.length();
  const SeedBounds bounds = profile.bounds();

  SelectionResult result;
  int pos = 0;
  while (static_cast<int>(result.seeds.seeds.size()) < x && pos + bounds.min_len <= L) {
    int len = bounds.min_len;
    std::uint64_t f = window_count(profile, pos, len, result.counters);
    while (f > t && len < bounds.max_len && pos + len < L) {
      ++len;
      f = window_count(profile, pos, len, result.counters);
    }
    result.seeds.seeds.push_back(Placement{pos, pos + len, f});
    result.seeds.total_freq += f;
    pos += len;
  }

  if (static_cast<int>(result.seeds.seeds.size()) < x) {
    SelectionResult fallback;
    try {
      fallback = cks_select(profile, x, fallback_k);
    } catch (const std::exception&) {
      throw std::runtime_error("scheme failed");
    }
    fallback.counters.lookups += result.counters.lookups;
    fallback.fallback = true;
    return fallback;
  }
  return result;
}

SelectionResult spaced_select(std::string_view read, const SpacedIndex& spaced,
                              int x) {
  if (x < 1) throw std::invalid_argument("bad scheme parameters");
  if (spaced.empty()) throw std::runtime_error("index has no spaced-seed table");
  const int w = static_cast<int>(spaced.mask.size());
  if (static_cast<long long>(x) * w > static_cast<long long>(read.size()))
    throw std::runtime_error("read too short for scheme");

  SelectionResult result;
  for (int i = 0; i < x; ++i) {
    const int begin = i * w;
    const std::uint64_t f =
        spaced.signature_count(apply_mask(read.substr(begin, w), spaced.mask));
    ++result.counters.lookups;
    result.seeds.seeds.push_back(Placement{begin, begin + w, f});
    result.seeds.total_freq += f;
  }
  return result;
}

}  // namespace oss
