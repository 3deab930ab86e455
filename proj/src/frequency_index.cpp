#include "oss/frequency_index.hpp"

#include <array>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace oss {
namespace {

constexpr char kMagic[8] = {'O', 'S', 'S', 'I', 'D', 'X', '0', '1'};
constexpr std::uint32_t kVersion = 1;

void write_u32(std::ostream& out, std::uint32_t v) {
  std::array<unsigned char, 4> b;
  for (int i = 0; i < 4; ++i) b[i] = (v >> (8 * i)) & 0xff;
  out.write(reinterpret_cast<const char*>(b.data()), b.size());
}

void write_u64(std::ostream& out, std::uint64_t v) {
  std::array<unsigned char, 8> b;
  for (int i = 0; i < 8; ++i) b[i] = (v >> (8 * i)) & 0xff;
  out.write(reinterpret_cast<const char*>(b.data()), b.size());
}

std::uint32_t read_u32(std::istream& in) {
  std::array<unsigned char, 4> b;
  if (!in.read(reinterpret_cast<char*>(b.data()), b.size()))
    throw std::runtime_error("corrupt index");
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t{b[i]} << (8 * i);
  return v;
}

std::uint64_t read_u64(std::istream& in) {
  std::array<unsigned char, 8> b;
  if (!in.read(reinterpret_cast<char*>(b.data()), b.size()))
    throw std::runtime_error("corrupt index");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t{b[i]} << (8 * i);
  return v;
}

void read_exact(std::istream& in, char* dst, std::size_t n) {
  if (!in.read(dst, static_cast<std::streamsize>(n)))
    throw std::runtime_error("corrupt index");
}

}  // namespace

FrequencyIndex build_index(PackedReference ref, std::string_view spaced_mask) {
  FrequencyIndex index;
  index.suffixes = SuffixArray::build(ref);
  if (!spaced_mask.empty()) index.spaced = build_spaced_index(ref, spaced_mask);
  index.reference = std::move(ref);
  return index;
}

void save_index(const FrequencyIndex& index, std::ostream& out) {
  out.write(kMagic, sizeof(kMagic));
  write_u32(out, kVersion);
  const PackedReference& ref = index.reference;
  write_u64(out, ref.size());
  out.write(reinterpret_cast<const char*>(ref.packed_bases().data()),
            static_cast<std::streamsize>(ref.packed_bases().size()));
  for (std::uint64_t word : ref.mask_words()) write_u64(out, word);
  for (std::uint64_t pos : index.suffixes.positions()) write_u64(out, pos);
  write_u32(out, static_cast<std::uint32_t>(index.spaced.mask.size()));
  out.write(index.spaced.mask.data(),
            static_cast<std::streamsize>(index.spaced.mask.size()));
  for (const auto& [key, count] : index.spaced.table) {  // std::map: sorted
    out.write(key.data(), static_cast<std::streamsize>(key.size()));
    write_u64(out, count);
  }
  if (!out) throw std::runtime_error("index write failed");
}

void save_index(const FrequencyIndex& index, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open index file for writing: " + path.string());
  save_index(index, out);
}

FrequencyIndex load_index(std::istream& in) {
  char magic[8];
  if (!in.read(magic, sizeof(magic)) || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw std::runtime_error("incompatible index");
  if (read_u32(in) != kVersion) throw std::runtime_error("incompatible index");

  const std::uint64_t length = read_u64(in);
  if (length == 0) throw std::runtime_error("corrupt index");
  std::vector<std::uint8_t> packed((length + 3) / 4);
  read_exact(in, reinterpret_cast<char*>(packed.data()), packed.size());
  std::vector<std::uint64_t> mask_words((length + 63) / 64);
  for (auto& word : mask_words) word = read_u64(in);

  std::vector<std::uint64_t> sa(length);
  for (auto& pos : sa) {
    pos = read_u64(in);
    if (pos >= length) throw std::runtime_error("corrupt index");
  }

  FrequencyIndex index;
  index.reference = PackedReference::from_parts("", length, std::move(packed),
                                                std::move(mask_words));
  index.suffixes = SuffixArray::from_positions(std::move(sa));

  const std::uint32_t mask_len = read_u32(in);
  if (mask_len > 0) {
    index.spaced.mask.resize(mask_len);
    read_exact(in, index.spaced.mask.data(), mask_len);
    const int weight = index.spaced.weight();
    if (weight <= 0) throw std::runtime_error("corrupt index");
    std::string key(static_cast<std::size_t>(weight), '\0');
    while (in.peek() != std::char_traits<char>::eof()) {
      read_exact(in, key.data(), key.size());
      index.spaced.table.emplace(key, read_u64(in));
    }
  }
  return index;
}

FrequencyIndex load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open index file: " + path.string());
  return load_index(in);
}

}  // namespace oss
