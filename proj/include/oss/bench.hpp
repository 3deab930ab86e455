#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "oss/fastq.hpp"
#include "oss/frequency_index.hpp"
#include "oss/read_profile.hpp"

namespace oss {

enum class SchemeKind { oss, naive, cks, ops, asf, spaced };

struct SchemeConfig {
  SchemeKind kind = SchemeKind::oss;
  int k = 12;                // naive / cks / ops
  std::uint64_t t = 10;      // asf threshold
  int fallback_k = 12;       // asf fallback CKS seed length
  std::string mask;          // spaced

  std::string label() const;
};

// Grammar: oss | naive:k=12 | cks:k=12 | ops:k=13 | asf:t=10,fallback_k=12 |
// spaced:mask=110100110010101111
SchemeConfig parse_scheme(std::string_view text);
// Comma-separated list; a key=value fragment that does not start a known
// scheme continues the previous spec (asf:t=10,fallback_k=12 parses as one).
std::vector<SchemeConfig> parse_scheme_list(std::string_view text);

struct ExperimentConfig {
  std::vector<SchemeConfig> schemes;
  std::vector<int> seed_counts;
  SeedBounds bounds{10, 30};
  std::size_t max_reads = std::numeric_limits<std::size_t>::max();
  bool skip_n_reads = false;
  int workers = 1;
};

// One per-(read, scheme, x) outcome. Placements render 1-based inclusive as
// "start-end:freq;...".
struct ReadRow {
  std::string read_id;
  std::string scheme;
  int x = 0;
  bool failed = false;
  bool fallback = false;
  std::uint64_t total_freq = 0;
  std::string placements;
  std::uint64_t lookups = 0;
  std::uint64_t divisions = 0;
  std::uint64_t substrings = 0;
};

// Runs every (scheme, x) over every read; deterministic for any worker
// count. Rows come back sorted by (read_id, scheme, x).
std::vector<ReadRow> run_experiment(const FrequencyIndex& index,
                                    const std::vector<FastqRecord>& reads,
                                    const ExperimentConfig& config);

void write_results_csv(const std::vector<ReadRow>& rows, std::ostream& out);
void write_aggregate_csv(const std::vector<ReadRow>& rows, std::ostream& out);

// Corpus-dependent figures (mean divisions per substring, ASF fallback rate);
// reported, not asserted.
void print_reported_metrics(const std::vector<ReadRow>& rows, std::ostream& out);

// Fig.1-style static histogram: (k, frequency, count of distinct k-mers at
// that frequency) for every k in [k_min, k_max].
void write_static_histogram(const FrequencyIndex& index, int k_min, int k_max,
                            std::ostream& out);

// Fig.2-style runtime histogram over the per-seed frequencies of a results
// CSV: exact buckets 0..9 plus power-of-ten decades.
void write_runtime_histogram(std::istream& results_csv, std::ostream& out);

std::string frequency_bucket(std::uint64_t freq);
std::string csv_escape(std::string_view field);

}  // namespace oss
