#include "oss/spaced_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace oss {

int SpacedIndex::weight() const {
  return static_cast<int>(std::count(mask.begin(), mask.end(), '1'));
}

std::uint64_t SpacedIndex::signature_count(std::string_view signature) const {
  auto it = table.find(std::string(signature));
  return it == table.end() ? 0 : it->second;
}

std::string apply_mask(std::string_view window, std::string_view mask) {
  if (window.size() != mask.size())
    throw std::invalid_argument("mask/window length mismatch");
  std::string signature;
  signature.reserve(mask.size());
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i] == '1') signature += window[i];
  return signature;
}

SpacedIndex build_spaced_index(const PackedReference& ref, std::string_view mask) {
  if (mask.empty() || mask.find('1') == std::string_view::npos)
    throw std::invalid_argument("degenerate mask");
  SpacedIndex index;
  index.mask = std::string(mask);
  const std::size_t w = mask.size();
  if (w > ref.size()) return index;
  std::string window(w, '\0');
  for (std::size_t p = 0; p + w <= ref.size(); ++p) {
    if (ref.window_masked(p, w)) continue;
    for (std::size_t i = 0; i < w; ++i) window[i] = ref.char_at(p + i);
    ++index.table[apply_mask(window, mask)];
  }
  return index;
}

}  // namespace oss
