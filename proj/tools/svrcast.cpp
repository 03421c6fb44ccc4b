// Command-line front end: CSV in, calibrated forecasts and comparison tables
// out.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "svrcast/config.hpp"
#include "svrcast/csv.hpp"
#include "svrcast/errors.hpp"
#include "svrcast/pipeline.hpp"
#include "svrcast/report.hpp"

namespace {

int exit_code_for(svrcast::errc code) {
  using svrcast::errc;
  switch (code) {
    case errc::invalid_config:
    case errc::unsupported_algorithm:
    case errc::invalid_space:
      return 3;  // configuration problems
    case errc::parse_error:
    case errc::non_monotonic_dates:
    case errc::non_positive_price:
    case errc::io_error:
    case errc::empty_input:
      return 4;  // input problems
    default:
      return 5;  // pipeline/runtime problems
  }
}

std::vector<svrcast::Algorithm> parse_algorithm_list(const std::string& csv) {
  std::vector<svrcast::Algorithm> out;
  std::string token;
  for (std::size_t i = 0; i <= csv.size(); ++i) {
    if (i == csv.size() || csv[i] == ',') {
      if (!token.empty()) out.push_back(svrcast::algorithm_from_string(token));
      token.clear();
    } else if (!std::isspace(static_cast<unsigned char>(csv[i]))) {
      token.push_back(csv[i]);
    }
  }
  if (out.empty()) svrcast::fail(svrcast::errc::invalid_config, "empty algorithm list");
  return out;
}

int run_command(const std::string& config_path, const std::string& input_path,
                const std::string& output_dir, const std::string& algorithms,
                bool seed_set, std::uint64_t seed) {
  svrcast::ExperimentConfig config;
  if (!config_path.empty()) config = svrcast::load_config(config_path);
  if (seed_set) config.seed = seed;

  std::vector<svrcast::Algorithm> algs{config.algorithm};
  if (!algorithms.empty()) algs = parse_algorithm_list(algorithms);
  if (!algorithms.empty()) config.algorithm = algs.front();

  const svrcast::PriceSeries input = svrcast::load_price_csv(input_path);
  std::cerr << "svrcast: " << input.series.name << ", " << input.series.size()
            << " observations, " << algs.size() << " algorithm(s)\n";

  const svrcast::ComparisonReport report =
      svrcast::compare_optimizers(input.series, config, algs);

  svrcast::RunInfo info;
  info.version = SVRCAST_VERSION;
  info.created_utc = svrcast::utc_timestamp();
  info.seed = config.seed;
  info.input_path = input_path;
  info.input_sha256 = svrcast::sha256_file(input_path);
  info.input_rows = input.series.size();
  svrcast::write_outputs(output_dir, input, config, report, info);

  bool any_failed = false;
  for (const auto& o : report.outcomes) {
    if (o.failed) {
      any_failed = true;
      std::cerr << "svrcast: " << svrcast::algorithm_model_label(o.algorithm)
                << " failed: " << o.error << '\n';
    } else {
      std::cout << svrcast::algorithm_model_label(o.algorithm) << "  mse="
                << svrcast::format_double(o.mse)
                << "  mape=" << (o.mape ? svrcast::format_double(*o.mape) : "NA")
                << "  time=" << o.elapsed_seconds << "s\n";
    }
  }
  std::cout << "outputs written to " << output_dir << '\n';
  return any_failed ? 5 : 0;
}

int embed_info_command(const std::string& input_path, int max_tau, int max_m) {
  const svrcast::PriceSeries input = svrcast::load_price_csv(input_path);
  const auto delay = svrcast::select_delay(input.series.values, max_tau);
  const auto dim =
      svrcast::select_dimension(input.series.values, delay.tau, max_m);
  std::cout << "series: " << input.series.name << " (n=" << input.series.size() << ")\n";
  std::cout << "tau: " << delay.tau
            << (delay.local_minimum ? " (first MI minimum)" : " (no local minimum, argmin)")
            << '\n';
  std::cout << "m: " << dim.m
            << (dim.converged ? " (FNN converged)" : " (FNN did not converge, max_m)") << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SVR forecasting with metaheuristic hyperparameter calibration"};
  app.require_subcommand(1);

  std::string config_path, input_path, output_dir, algorithms;
  std::uint64_t seed = 0;
  bool seed_set = false;

  auto* run = app.add_subcommand("run", "calibrate, forecast and write reports");
  run->add_option("--config", config_path, "JSON experiment config");
  run->add_option("--input", input_path, "input CSV (date,close)")->required();
  run->add_option("--out", output_dir, "output directory")->required();
  run->add_option("--seed", seed, "override the config seed")
      ->each([&seed_set](const std::string&) { seed_set = true; });
  run->add_option("--algorithms", algorithms,
                  "comma-separated list (boa,pso,ga,abc,fa,sca)");

  int max_tau = 20, max_m = 16;
  auto* embed_info = app.add_subcommand("embed-info", "print estimated tau and m");
  embed_info->add_option("--input", input_path, "input CSV (date,close)")->required();
  embed_info->add_option("--max-tau", max_tau, "delay scan upper bound");
  embed_info->add_option("--max-m", max_m, "dimension scan upper bound");

  auto* version = app.add_subcommand("version", "print the tool version");

  CLI11_PARSE(app, argc, argv);

  try {
    if (version->parsed()) {
      std::cout << "svrcast " << SVRCAST_VERSION << '\n';
      return 0;
    }
    if (embed_info->parsed()) {
      return embed_info_command(input_path, max_tau, max_m);
    }
    return run_command(config_path, input_path, output_dir, algorithms, seed_set, seed);
  } catch (const svrcast::Error& e) {
    std::cerr << "error: " << e.what() << '\n';  // what() carries the stable code name
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 5;
  }
}
