#include "oss/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "oss/baselines.hpp"
#include "oss/solver.hpp"

namespace oss {
namespace {

const std::map<std::string, SchemeKind, std::less<>> kSchemeNames = {
    {"oss", SchemeKind::oss},   {"naive", SchemeKind::naive},
    {"cks", SchemeKind::cks},   {"ops", SchemeKind::ops},
    {"asf", SchemeKind::asf},   {"spaced", SchemeKind::spaced},
};

bool is_scheme_name(std::string_view name) {
  return kSchemeNames.find(name) != kSchemeNames.end();
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string placements_string(const SeedSet& set) {
  std::string out;
  for (const Placement& p : set.seeds) {
    if (!out.empty()) out += ';';
    out += std::to_string(p.begin + 1) + "-" + std::to_string(p.end) + ":" +
           std::to_string(p.freq);
  }
  return out;
}

SelectionResult run_scheme(const SchemeConfig& scheme, const ReadProfile& profile,
                           const FrequencyIndex& index, int x) {
  switch (scheme.kind) {
    case SchemeKind::oss:
      return optimal_seed_solver(profile, x);
    case SchemeKind::naive:
      return naive_select(profile, x, scheme.k);
    case SchemeKind::cks:
      return cks_select(profile, x, scheme.k);
    case SchemeKind::ops:
      return ops_select(profile, x, scheme.k);
    case SchemeKind::asf:
      return asf_select(profile, x, scheme.t, scheme.fallback_k);
    case SchemeKind::spaced:
      return spaced_select(profile.read(), index.spaced, x);
  }
  throw std::logic_error("unreachable");
}

// Minimal RFC-4180 field splitter for our own CSV output.
std::vector<std::string> split_csv_line(const std::string& line, std::size_t line_no) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          fields.back() += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back() += c;
      }
    } else if (c == '"' && fields.back().empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted)
    throw std::runtime_error("CSV parse error at line " + std::to_string(line_no) +
                             ": unterminated quote");
  return fields;
}

}  // namespace

std::string SchemeConfig::label() const {
  switch (kind) {
    case SchemeKind::oss:
      return "oss";
    case SchemeKind::naive:
      return "naive:k=" + std::to_string(k);
    case SchemeKind::cks:
      return "cks:k=" + std::to_string(k);
    case SchemeKind::ops:
      return "ops:k=" + std::to_string(k);
    case SchemeKind::asf:
      return "asf:t=" + std::to_string(t) + ",fallback_k=" + std::to_string(fallback_k);
    case SchemeKind::spaced:
      return "spaced:mask=" + mask;
  }
  return {};
}

SchemeConfig parse_scheme(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  auto kind_it = kSchemeNames.find(name);
  if (kind_it == kSchemeNames.end())
    throw std::invalid_argument("unknown scheme: " + std::string(name));

  SchemeConfig config;
  config.kind = kind_it->second;
  std::string_view params =
      colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  while (!params.empty()) {
    const std::size_t comma = params.find(',');
    const std::string_view item = params.substr(0, comma);
    params = comma == std::string_view::npos ? std::string_view{} : params.substr(comma + 1);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos)
      throw std::invalid_argument("bad scheme parameter: " + std::string(item));
    const std::string key(item.substr(0, eq));
    const std::string value(item.substr(eq + 1));
    if (key == "k")
      config.k = std::stoi(value);
    else if (key == "t")
      config.t = std::stoull(value);
    else if (key == "fallback_k")
      config.fallback_k = std::stoi(value);
    else if (key == "mask")
      config.mask = value;
    else
      throw std::invalid_argument("bad scheme parameter: " + key);
  }
  if (config.kind == SchemeKind::spaced && config.mask.empty())
    throw std::invalid_argument("spaced scheme requires mask=");
  return config;
}

std::vector<SchemeConfig> parse_scheme_list(std::string_view text) {
  std::vector<std::string> specs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const std::string_view fragment = text.substr(pos, comma - pos);
    const std::string_view head = fragment.substr(0, fragment.find(':'));
    if (is_scheme_name(head)) {
      specs.emplace_back(fragment);
    } else if (!specs.empty() && fragment.find('=') != std::string_view::npos) {
      specs.back() += ',';
      specs.back() += fragment;
    } else {
      throw std::invalid_argument("bad scheme list near: " + std::string(fragment));
    }
    pos = comma + 1;
  }
  std::vector<SchemeConfig> schemes;
  schemes.reserve(specs.size());
  for (const std::string& spec : specs) schemes.push_back(parse_scheme(spec));
  return schemes;
}

std::vector<ReadRow> run_experiment(const FrequencyIndex& index,
                                    const std::vector<FastqRecord>& reads,
                                    const ExperimentConfig& config) {
  if (config.schemes.empty()) throw std::invalid_argument("no schemes configured");
  if (config.seed_counts.empty()) throw std::invalid_argument("no seed counts configured");

  std::vector<const FastqRecord*> selected;
  for (const FastqRecord& rec : reads) {
    if (selected.size() >= config.max_reads) break;
    if (config.skip_n_reads &&
        rec.sequence.find_first_not_of("ACGT") != std::string::npos)
      continue;
    selected.push_back(&rec);
  }

  const std::size_t per_read = config.schemes.size() * config.seed_counts.size();
  std::vector<ReadRow> rows(selected.size() * per_read);

  auto process_read = [&](std::size_t r) {
    const FastqRecord& rec = *selected[r];
    ReadRow* slot = rows.data() + r * per_read;
    const ReadProfile profile(rec.sequence, index, config.bounds);  // may throw
    for (const SchemeConfig& scheme : config.schemes) {
      for (int x : config.seed_counts) {
        ReadRow& row = *slot++;
        row.read_id = rec.id;
        row.scheme = scheme.label();
        row.x = x;
        try {
          const SelectionResult result = run_scheme(scheme, profile, index, x);
          row.total_freq = result.seeds.total_freq;
          row.placements = placements_string(result.seeds);
          row.lookups = result.counters.lookups;
          row.divisions = result.counters.divisions_examined;
          row.substrings = result.counters.substrings_processed;
          row.fallback = result.fallback;
        } catch (const std::exception&) {
          row.failed = true;
        }
      }
    }
  };

  auto process_read_or_fail = [&](std::size_t r) {
    try {
      process_read(r);
    } catch (const std::exception&) {
      // Profile construction failed (e.g. read shorter than s_min): every
      // row of this read is marked failed.
      ReadRow* slot = rows.data() + r * per_read;
      for (const SchemeConfig& scheme : config.schemes) {
        for (int x : config.seed_counts) {
          ReadRow& row = *slot++;
          row.read_id = selected[r]->id;
          row.scheme = scheme.label();
          row.x = x;
          row.failed = true;
        }
      }
    }
  };

  const int workers = std::max(1, config.workers);
  if (workers == 1 || selected.size() <= 1) {
    for (std::size_t r = 0; r < selected.size(); ++r) process_read_or_fail(r);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        for (std::size_t r = next.fetch_add(1); r < selected.size();
             r = next.fetch_add(1))
          process_read_or_fail(r);
      });
    }
    for (std::thread& thread : pool) thread.join();
  }

  std::stable_sort(rows.begin(), rows.end(), [](const ReadRow& a, const ReadRow& b) {
    return std::tie(a.read_id, a.scheme, a.x) < std::tie(b.read_id, b.scheme, b.x);
  });
  return rows;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\n") == std::string_view::npos)
    return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_results_csv(const std::vector<ReadRow>& rows, std::ostream& out) {
  out << "read_id,scheme,x,total_freq,placements,lookups,divisions,fallback,failed\n";
  for (const ReadRow& row : rows) {
    out << csv_escape(row.read_id) << ',' << csv_escape(row.scheme) << ','
        << row.x << ',';
    if (row.failed) {
      out << ",,,,," << 1 << '\n';
      continue;
    }
    out << row.total_freq << ',' << csv_escape(row.placements) << ','
        << row.lookups << ',' << row.divisions << ',' << (row.fallback ? 1 : 0)
        << ",0\n";
  }
}

void write_aggregate_csv(const std::vector<ReadRow>& rows, std::ostream& out) {
  struct Bucket {
    std::uint64_t processed = 0, failed = 0;
    std::uint64_t total_freq = 0, lookups = 0, divisions = 0, substrings = 0;
  };
  std::map<std::pair<std::string, int>, Bucket> buckets;
  for (const ReadRow& row : rows) {
    Bucket& b = buckets[{row.scheme, row.x}];
    if (row.failed) {
      ++b.failed;
      continue;
    }
    ++b.processed;
    b.total_freq += row.total_freq;
    b.lookups += row.lookups;
    b.divisions += row.divisions;
    b.substrings += row.substrings;
  }

  out << "scheme,x,reads_processed,reads_failed,mean_seed_freq,"
         "mean_total_freq,mean_divisions_per_substring,mean_lookups\n";
  for (const auto& [key, b] : buckets) {
    out << csv_escape(key.first) << ',' << key.second << ',' << b.processed
        << ',' << b.failed << ',';
    if (b.processed > 0) {
      out << format_double(static_cast<double>(b.total_freq) /
                           (static_cast<double>(b.processed) * key.second))
          << ','
          << format_double(static_cast<double>(b.total_freq) /
                           static_cast<double>(b.processed))
          << ',';
      if (b.substrings > 0)
        out << format_double(static_cast<double>(b.divisions) /
                             static_cast<double>(b.substrings));
      out << ','
          << format_double(static_cast<double>(b.lookups) /
                           static_cast<double>(b.processed));
    } else {
      out << ",,,";
    }
    out << '\n';
  }
}

void print_reported_metrics(const std::vector<ReadRow>& rows, std::ostream& out) {
  std::uint64_t divisions = 0, substrings = 0;
  std::uint64_t asf_rows = 0, asf_fallbacks = 0;
  for (const ReadRow& row : rows) {
    if (row.failed) continue;
    divisions += row.divisions;
    substrings += row.substrings;
    if (row.scheme.rfind("asf", 0) == 0) {
      ++asf_rows;
      if (row.fallback) ++asf_fallbacks;
    }
  }
  out << "# corpus-dependent figures (reported, not asserted):\n";
  if (substrings > 0)
    out << "mean divisions per substring (oss): "
        << format_double(static_cast<double>(divisions) /
                         static_cast<double>(substrings))
        << '\n';
  if (asf_rows > 0)
    out << "asf fallback rate: "
        << format_double(100.0 * static_cast<double>(asf_fallbacks) /
                         static_cast<double>(asf_rows))
        << "% (" << asf_fallbacks << '/' << asf_rows << ")\n";
}

void write_static_histogram(const FrequencyIndex& index, int k_min, int k_max,
                            std::ostream& out) {
  if (k_min < 1 || k_min > k_max) throw std::invalid_argument("bad k range");
  const PackedReference& ref = index.reference;
  out << "k,frequency,distinct_seeds\n";
  for (int k = k_min; k <= k_max; ++k) {
    if (static_cast<std::size_t>(k) > ref.size()) break;
    std::map<std::string, std::uint64_t> kmers;
    for (std::size_t p = 0; p + k <= ref.size(); ++p) {
      if (ref.window_masked(p, static_cast<std::size_t>(k))) continue;
      ++kmers[ref.substr(p, static_cast<std::size_t>(k))];
    }
    std::map<std::uint64_t, std::uint64_t> by_freq;
    for (const auto& [kmer, freq] : kmers) ++by_freq[freq];
    for (const auto& [freq, distinct] : by_freq)
      out << k << ',' << freq << ',' << distinct << '\n';
  }
}

std::string frequency_bucket(std::uint64_t freq) {
  if (freq < 10) return std::to_string(freq);
  std::uint64_t lo = 10;
  while (freq >= lo * 10) lo *= 10;
  return std::to_string(lo) + "-" + std::to_string(lo * 10 - 1);
}

void write_runtime_histogram(std::istream& results_csv, std::ostream& out) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(results_csv, line))
    throw std::runtime_error("CSV parse error at line 1: empty file");
  ++line_no;

  // Buckets keyed by lower bound so decades order numerically.
  std::map<std::uint64_t, std::pair<std::string, std::uint64_t>> buckets;
  while (std::getline(results_csv, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line, line_no);
    if (fields.size() != 9)
      throw std::runtime_error("CSV parse error at line " + std::to_string(line_no) +
                               ": expected 9 fields");
    if (fields[8] == "1") continue;  // failed row
    const std::string& placements = fields[4];
    std::size_t pos = 0;
    while (pos < placements.size()) {
      std::size_t semi = placements.find(';', pos);
      if (semi == std::string::npos) semi = placements.size();
      const std::string item = placements.substr(pos, semi - pos);
      const std::size_t colon = item.find(':');
      if (colon == std::string::npos)
        throw std::runtime_error("CSV parse error at line " + std::to_string(line_no) +
                                 ": bad placement " + item);
      std::uint64_t freq = 0;
      try {
        freq = std::stoull(item.substr(colon + 1));
      } catch (const std::exception&) {
        throw std::runtime_error("CSV parse error at line " + std::to_string(line_no) +
                                 ": bad placement " + item);
      }
      const std::uint64_t key = freq < 10 ? freq : [&] {
        std::uint64_t lo = 10;
        while (freq >= lo * 10) lo *= 10;
        return lo;
      }();
      auto& bucket = buckets[key];
      bucket.first = frequency_bucket(freq);
      ++bucket.second;
      pos = semi + 1;
    }
  }

  out << "frequency_bucket,selected_seeds\n";
  for (const auto& [key, bucket] : buckets)
    out << bucket.first << ',' << bucket.second << '\n';
}

}  // namespace oss
