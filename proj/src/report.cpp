#include "svrcast/report.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <vector>

#include <json.hpp>
#include <openssl/evp.h>

#include "svrcast/config.hpp"
#include "svrcast/errors.hpp"

namespace svrcast {

namespace {

using json = nlohmann::ordered_json;

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // binary: identical bytes everywhere
  if (!out) fail(errc::io_error, "cannot write " + path.string());
  return out;
}

void write_report_tsv(const std::filesystem::path& path, const ComparisonReport& report) {
  auto out = open_for_write(path);
  out << "Models\tC\tgamma\tepsilon\tMSE\tMAPE\tCost time\n";
  for (const auto& o : report.outcomes) {
    out << algorithm_model_label(o.algorithm) << '\t';
    if (o.failed) {
      out << "NA\tNA\tNA\tNA\tNA\t" << format_double(0.0) << '\n';
      continue;
    }
    out << format_double(o.params.c) << '\t' << format_double(o.params.gamma) << '\t'
        << format_double(o.params.epsilon) << '\t' << format_double(o.mse) << '\t'
        << (o.mape ? format_double(*o.mape) : std::string("NA")) << '\t'
        << format_double(o.elapsed_seconds) << '\n';
  }
}

void write_dm_tsv(const std::filesystem::path& path, const ComparisonReport& report) {
  auto out = open_for_write(path);
  out << "Models";
  for (const auto& o : report.outcomes) out << '\t' << algorithm_model_label(o.algorithm);
  out << '\n';
  for (std::size_t a = 0; a < report.outcomes.size(); ++a) {
    out << algorithm_model_label(report.outcomes[a].algorithm);
    for (std::size_t b = 0; b < report.outcomes.size(); ++b) {
      out << '\t';
      const DmCell& cell = report.dm[a][b];
      if (a == b) {
        out << '-';
      } else if (!cell.available) {
        out << "NA";
      } else if (cell.degenerate) {
        out << "DegenerateVariance";
      } else {
        out << format_double(cell.statistic);
      }
    }
    out << '\n';
  }
}

void write_predictions_tsv(const std::filesystem::path& path, const PriceSeries& input,
                           const ComparisonReport& report) {
  auto out = open_for_write(path);
  out << "date\tactual";
  for (const auto& o : report.outcomes) out << '\t' << algorithm_model_label(o.algorithm);
  out << '\n';
  const auto& idx = report.data.test_target_index;
  for (std::size_t t = 0; t < idx.size(); ++t) {
    out << input.dates[idx[t]] << '\t' << format_double(input.series.values[idx[t]]);
    for (const auto& o : report.outcomes) {
      out << '\t' << (o.failed ? std::string("NA") : format_double(o.predictions_price[t]));
    }
    out << '\n';
  }
}

void write_results_json(const std::filesystem::path& path, const ComparisonReport& report) {
  json root;
  root["embedding"] = {{"m", report.data.spec.m},
                       {"tau", report.data.spec.tau},
                       {"delay_local_minimum", report.data.delay_local_minimum},
                       {"fnn_converged", report.data.fnn_converged}};
  root["normalization"] = {{"min", report.data.scaler.min}, {"max", report.data.scaler.max}};
  root["train_rows"] = report.data.train.rows();
  root["test_rows"] = report.data.test.rows();

  json outcomes = json::array();
  for (const auto& o : report.outcomes) {
    json entry;
    entry["model"] = algorithm_model_label(o.algorithm);
    entry["algorithm"] = algorithm_name(o.algorithm);
    if (o.failed) {
      entry["failed"] = true;
      entry["error"] = o.error;
    } else {
      entry["params"] = {{"c", o.params.c}, {"gamma", o.params.gamma},
                         {"epsilon", o.params.epsilon}};
      entry["mse"] = o.mse;
      if (o.mape) {
        entry["mape"] = *o.mape;
      } else {
        entry["mape"] = nullptr;
      }
      entry["best_fitness"] = o.best_fitness;
      entry["evaluations"] = o.evaluations;
      entry["solver_converged"] = o.model.converged;
      entry["optimizer_history"] = o.optimizer_history;
    }
    outcomes.push_back(std::move(entry));
  }
  root["outcomes"] = std::move(outcomes);

  root["dm_loss"] = "squared-error";
  json dm = json::array();
  for (std::size_t a = 0; a < report.outcomes.size(); ++a) {
    for (std::size_t b = 0; b < report.outcomes.size(); ++b) {
      if (a == b || !report.dm[a][b].available) continue;
      json cell = {{"a", algorithm_name(report.outcomes[a].algorithm)},
                   {"b", algorithm_name(report.outcomes[b].algorithm)}};
      if (report.dm[a][b].degenerate) {
        cell["degenerate"] = true;
      } else {
        cell["statistic"] = report.dm[a][b].statistic;
        cell["significant"] = report.dm[a][b].significant;
      }
      dm.push_back(std::move(cell));
    }
  }
  root["dm"] = std::move(dm);

  auto out = open_for_write(path);
  out << root.dump(2) << '\n';
}

void write_manifest_json(const std::filesystem::path& path, const ExperimentConfig& config,
                         const ComparisonReport& report, const RunInfo& info) {
  json root;
  root["tool"] = "svrcast";
  root["version"] = info.version;
  root["created_utc"] = info.created_utc;
  root["seed"] = info.seed;
  root["input"] = {{"path", info.input_path},
                   {"sha256", info.input_sha256},
                   {"rows", info.input_rows}};
  root["config"] = json::parse(config_to_json(config));
  root["normalization"] = {{"min", report.data.scaler.min}, {"max", report.data.scaler.max}};
  root["embedding"] = {{"m", report.data.spec.m}, {"tau", report.data.spec.tau}};
  json timings;
  for (const auto& o : report.outcomes) {
    timings[algorithm_name(o.algorithm)] = o.failed ? 0.0 : o.elapsed_seconds;
  }
  root["cost_time_seconds"] = std::move(timings);
  auto out = open_for_write(path);
  out << root.dump(2) << '\n';
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string sha256_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open " + path.string());

  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  char buf[1 << 16];
  while (in.good()) {
    in.read(buf, sizeof(buf));
    EVP_DigestUpdate(ctx, buf, static_cast<std::size_t>(in.gcount()));
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_DigestFinal_ex(ctx, digest, &len);
  EVP_MD_CTX_free(ctx);

  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xF]);
  }
  return out;
}

void write_outputs(const std::filesystem::path& output_dir, const PriceSeries& input,
                   const ExperimentConfig& config, const ComparisonReport& report,
                   const RunInfo& info) {
  std::error_code ec;
  std::filesystem::create_directories(output_dir, ec);
  if (ec) fail(errc::io_error, "cannot create " + output_dir.string());

  write_report_tsv(output_dir / "report.tsv", report);
  write_dm_tsv(output_dir / "dm_matrix.tsv", report);
  write_predictions_tsv(output_dir / "predictions.tsv", input, report);
  write_results_json(output_dir / "results.json", report);
  write_manifest_json(output_dir / "manifest.json", config, report, info);
}

}  // namespace svrcast
