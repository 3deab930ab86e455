#include "oss/packed_reference.hpp"

#include <fstream>
#include <istream>
#include <stdexcept>

namespace oss {

PackedReference::PackedReference(std::string name, std::string_view sequence)
    : name_(std::move(name)), length_(sequence.size()) {
  packed_.assign((length_ + 3) / 4, 0);
  mask_words_.assign((length_ + 63) / 64, 0);
  for (std::size_t i = 0; i < length_; ++i) {
    int code = base_code(sequence[i]);
    if (code < 0) {
      mask_words_[i >> 6] |= std::uint64_t{1} << (i & 63u);
      code = 0;  // masked positions decode to 'A'
    }
    packed_[i >> 2] |= static_cast<std::uint8_t>(code) << ((i & 3u) * 2);
  }
}

PackedReference PackedReference::from_parts(std::string name, std::size_t length,
                                            std::vector<std::uint8_t> packed,
                                            std::vector<std::uint64_t> mask_words) {
  if (packed.size() != (length + 3) / 4 || mask_words.size() != (length + 63) / 64)
    throw std::runtime_error("corrupt index");
  PackedReference ref;
  ref.name_ = std::move(name);
  ref.length_ = length;
  ref.packed_ = std::move(packed);
  ref.mask_words_ = std::move(mask_words);
  return ref;
}

bool PackedReference::window_masked(std::size_t begin, std::size_t len) const {
  for (std::size_t i = begin; i < begin + len; ++i)
    if (masked(i)) return true;
  return false;
}

std::string PackedReference::to_string() const { return substr(0, length_); }

std::string PackedReference::substr(std::size_t begin, std::size_t len) const {
  std::string out(len, '\0');
  for (std::size_t i = 0; i < len; ++i)
    out[i] = masked(begin + i) ? 'N' : char_at(begin + i);
  return out;
}

PackedReference parse_fasta(std::istream& in, std::string fallback_name) {
  std::string name = std::move(fallback_name);
  bool named = false;
  std::string sequence;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '>') {
      if (!named) {
        name = line.substr(1, line.find_first_of(" \t") - 1);
        named = true;
      }
      continue;
    }
    sequence += line;
  }
  if (sequence.empty()) throw std::runtime_error("empty reference");
  return PackedReference(std::move(name), sequence);
}

PackedReference load_fasta(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open FASTA file: " + path.string());
  return parse_fasta(in, path.stem().string());
}

}  // namespace oss
