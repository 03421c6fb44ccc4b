#ifndef SVRCAST_REPORT_HPP
#define SVRCAST_REPORT_HPP

#include <filesystem>
#include <string>

#include "svrcast/csv.hpp"
#include "svrcast/pipeline.hpp"

namespace svrcast {

// Metadata that makes a run reproducible: effective config, seed, software
// version, input identity, timestamps, fitted scaler/embedding, and the
// wall-clock cost of each algorithm. Timing lives here (and in the derived
// report column), never in the deterministic result files.
struct RunInfo {
  std::string version;
  std::string created_utc;
  std::uint64_t seed = 0;
  std::string input_path;
  std::string input_sha256;
  std::size_t input_rows = 0;
};

// Writes report.tsv, dm_matrix.tsv, predictions.tsv, results.json and
// manifest.json into output_dir. Everything except manifest.json and the
// report's Cost time column is a deterministic function of (config, input,
// seed).
void write_outputs(const std::filesystem::path& output_dir, const PriceSeries& input,
                   const ExperimentConfig& config, const ComparisonReport& report,
                   const RunInfo& info);

std::string sha256_file(const std::filesystem::path& path);

// Shortest-width formatting that round-trips a double exactly.
std::string format_double(double v);

std::string utc_timestamp();

}  // namespace svrcast

#endif  // SVRCAST_REPORT_HPP
