#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oss/bench.hpp"
#include "oss/fastq.hpp"
#include "oss/frequency_index.hpp"
#include "oss/packed_reference.hpp"

namespace {

// "1..6" or "1,3,5".
std::vector<int> parse_seed_counts(const std::string& text) {
  std::vector<int> counts;
  const std::size_t dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo < 1 || hi < lo) throw CLI::ValidationError("--seeds", "bad range");
    for (int x = lo; x <= hi; ++x) counts.push_back(x);
    return counts;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    counts.push_back(std::stoi(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return counts;
}

int cmd_index(const std::string& ref_path, const std::string& out_path,
              const std::string& mask) {
  oss::PackedReference ref = oss::load_fasta(ref_path);
  oss::FrequencyIndex index = oss::build_index(std::move(ref), mask);
  oss::save_index(index, out_path);
  std::cerr << "indexed " << index.reference.size() << " bp -> " << out_path << '\n';
  return 0;
}

int cmd_run(const std::string& idx_path, const std::string& reads_path,
            const std::string& schemes, const std::string& seeds, int smin,
            int smax, std::size_t max_reads, bool skip_n, int workers,
            const std::string& out_dir) {
  oss::ExperimentConfig config;
  config.schemes = oss::parse_scheme_list(schemes);
  config.seed_counts = parse_seed_counts(seeds);
  config.bounds = {smin, smax};
  config.max_reads = max_reads;
  config.skip_n_reads = skip_n;
  config.workers = workers;

  const oss::FrequencyIndex index = oss::load_index(idx_path);
  const std::vector<oss::FastqRecord> reads = oss::parse_fastq(reads_path);
  const std::vector<oss::ReadRow> rows = oss::run_experiment(index, reads, config);

  std::filesystem::create_directories(out_dir);
  const auto results_path = std::filesystem::path(out_dir) / "results.csv";
  const auto aggregate_path = std::filesystem::path(out_dir) / "aggregate.csv";
  {
    std::ofstream out(results_path);
    if (!out) throw std::runtime_error("cannot write " + results_path.string());
    oss::write_results_csv(rows, out);
  }
  {
    std::ofstream out(aggregate_path);
    if (!out) throw std::runtime_error("cannot write " + aggregate_path.string());
    oss::write_aggregate_csv(rows, out);
  }
  oss::print_reported_metrics(rows, std::cerr);
  std::cerr << "wrote " << results_path.string() << " and "
            << aggregate_path.string() << '\n';
  return 0;
}

int cmd_hist(const std::string& mode, const std::string& idx_path,
             const std::string& results_path, int k_min, int k_max,
             const std::string& out_path) {
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  if (mode == "static") {
    if (idx_path.empty()) throw CLI::ValidationError("--idx", "required for static mode");
    oss::write_static_histogram(oss::load_index(idx_path), k_min, k_max, out);
  } else if (mode == "runtime") {
    if (results_path.empty())
      throw CLI::ValidationError("--results", "required for runtime mode");
    std::ifstream in(results_path);
    if (!in) throw std::runtime_error("cannot open " + results_path);
    oss::write_runtime_histogram(in, out);
  } else {
    throw CLI::ValidationError("--mode", "must be static or runtime");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"seed-selection benchmark over a reference-genome frequency index"};
  app.require_subcommand(1);

  auto* index_cmd = app.add_subcommand("index", "build and persist a reference index");
  std::string ref_path, index_out, mask;
  index_cmd->add_option("--ref", ref_path, "reference FASTA")->required();
  index_cmd->add_option("--out", index_out, "output index file")->required();
  index_cmd->add_option("--mask", mask, "spaced-seed bit mask (e.g. 110100110010101111)");

  auto* run_cmd = app.add_subcommand("run", "run selection schemes over a read set");
  std::string idx_path, reads_path, schemes, seeds = "1..6", out_dir;
  int smin = 10, smax = 30, workers = 1;
  std::size_t max_reads = std::numeric_limits<std::size_t>::max();
  bool skip_n = false;
  run_cmd->add_option("--idx", idx_path, "index file")->required();
  run_cmd->add_option("--reads", reads_path, "reads FASTQ")->required();
  run_cmd->add_option("--schemes", schemes,
                      "comma list: oss, naive:k=12, cks:k=12, ops:k=13, "
                      "asf:t=10,fallback_k=12, spaced:mask=...")
      ->required();
  run_cmd->add_option("--seeds", seeds, "seed counts, '1..6' or '1,2,3'");
  run_cmd->add_option("--smin", smin, "minimum seed length");
  run_cmd->add_option("--smax", smax, "maximum seed length");
  run_cmd->add_option("--max-reads", max_reads, "process at most N reads");
  run_cmd->add_flag("--skip-n-reads", skip_n, "drop reads containing N");
  run_cmd->add_option("--workers", workers, "worker thread count");
  run_cmd->add_option("--out", out_dir, "output directory")->required();

  auto* hist_cmd = app.add_subcommand("hist", "frequency-distribution histograms");
  std::string mode, hist_idx, hist_results, hist_out;
  int k_min = 10, k_max = 14;
  hist_cmd->add_option("--mode", mode, "static | runtime")->required();
  hist_cmd->add_option("--idx", hist_idx, "index file (static mode)");
  hist_cmd->add_option("--results", hist_results, "results CSV (runtime mode)");
  hist_cmd->add_option("--kmin", k_min, "smallest seed length (static mode)");
  hist_cmd->add_option("--kmax", k_max, "largest seed length (static mode)");
  hist_cmd->add_option("--out", hist_out, "output CSV")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (index_cmd->parsed()) return cmd_index(ref_path, index_out, mask);
    if (run_cmd->parsed())
      return cmd_run(idx_path, reads_path, schemes, seeds, smin, smax, max_reads,
                     skip_n, workers, out_dir);
    if (hist_cmd->parsed())
      return cmd_hist(mode, hist_idx, hist_results, k_min, k_max, hist_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
