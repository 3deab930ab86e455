#include "oss/fastq.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <stdexcept>

namespace oss {
namespace {

bool get_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

[[noreturn]] void malformed(std::size_t record, const std::string& what) {
  throw std::runtime_error("malformed FASTQ record " + std::to_string(record) +
                           ": " + what);
}

}  // namespace

std::optional<FastqRecord> FastqReader::next() {
  std::string header;
  if (!get_line(*in_, header)) return std::nullopt;
  ++record_;
  if (header.empty() || header[0] != '@') malformed(record_, "missing '@' header");

  FastqRecord rec;
  rec.id = header.substr(1, header.find_first_of(" \t") - 1);

  std::string plus, quality;
  if (!get_line(*in_, rec.sequence)) malformed(record_, "missing sequence line");
  if (!get_line(*in_, plus)) malformed(record_, "missing '+' line");
  if (plus.empty() || plus[0] != '+') malformed(record_, "missing '+' line");
  if (!get_line(*in_, quality)) malformed(record_, "missing quality line");
  if (quality.size() != rec.sequence.size())
    malformed(record_, "sequence/quality length mismatch");

  std::transform(rec.sequence.begin(), rec.sequence.end(), rec.sequence.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  return rec;
}

std::vector<FastqRecord> parse_fastq(std::istream& in) {
  FastqReader reader(in);
  std::vector<FastqRecord> records;
  while (auto rec = reader.next()) records.push_back(std::move(*rec));
  return records;
}

std::vector<FastqRecord> parse_fastq(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open FASTQ file: " + path.string());
  return parse_fastq(in);
}

}  // namespace oss
