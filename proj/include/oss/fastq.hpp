#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace oss {

struct FastqRecord {
  std::string id;
  std::string sequence;  // upcased
};

// 4-line-per-record FASTQ; quality values are ignored but the quality line
// must match the sequence length. Malformed records throw std::runtime_error
// naming the 1-based record index.
class FastqReader {
 public:
  explicit FastqReader(std::istream& in) : in_(&in) {}
  std::optional<FastqRecord> next();

 private:
  std::istream* in_;
  std::size_t record_ = 0;
};

std::vector<FastqRecord> parse_fastq(std::istream& in);
std::vector<FastqRecord> parse_fastq(const std::filesystem::path& path);

}  // namespace oss
