#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "oss/dna.hpp"

namespace oss {

// 2-bit packed DNA text with an N-mask. Positions whose source character was
// not one of {A,C,G,T,a,c,g,t} decode to 'A' but are flagged in the mask;
// no pattern match may succeed across a masked position.
class PackedReference {
 public:
  PackedReference() = default;
  PackedReference(std::string name, std::string_view sequence);

  static PackedReference from_parts(std::string name, std::size_t length,
                                    std::vector<std::uint8_t> packed,
                                    std::vector<std::uint64_t> mask_words);

  const std::string& name() const { return name_; }
  std::size_t size() const { return length_; }

  int code_at(std::size_t i) const {
    return (packed_[i >> 2] >> ((i & 3u) * 2)) & 3u;
  }
  bool masked(std::size_t i) const {
    return (mask_words_[i >> 6] >> (i & 63u)) & 1u;
  }
  char char_at(std::size_t i) const { return base_char(code_at(i)); }

  // Symbol used for suffix ordering and pattern matching: 1..4 for A..T,
  // 0 for masked positions (a sentinel no pattern character equals).
  int symbol(std::size_t i) const { return masked(i) ? 0 : code_at(i) + 1; }

  bool window_masked(std::size_t begin, std::size_t len) const;

  // Masked positions render as 'N'.
  std::string to_string() const;
  std::string substr(std::size_t begin, std::size_t len) const;

  const std::vector<std::uint8_t>& packed_bases() const { return packed_; }
  const std::vector<std::uint64_t>& mask_words() const { return mask_words_; }

 private:
  std::string name_;
  std::size_t length_ = 0;
  std::vector<std::uint8_t> packed_;       // 4 bases per byte, LSB first
  std::vector<std::uint64_t> mask_words_;  // 64 positions per word
};

// All records of the file are concatenated in file order; the name is taken
// from the first header. Throws std::runtime_error on I/O failure or when
// the file holds no residues ("empty reference").
PackedReference load_fasta(const std::filesystem::path& path);
PackedReference parse_fasta(std::istream& in, std::string fallback_name = "reference");

}  // namespace oss
