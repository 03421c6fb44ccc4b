#include "svrcast/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <string>

#include "svrcast/errors.hpp"
#include "svrcast/eval_stats.hpp"

namespace svrcast {

SearchSpace default_hyperparam_space() {
  const double lo = std::pow(4.0, -10.0);
  return SearchSpace{{lo, lo, lo}, {std::pow(4.0, 4.0), std::pow(4.0, 4.0), 0.25}};
}

namespace {

void check_config(const ExperimentConfig& config) {
  if (!(config.train_fraction > 0.0 && config.train_fraction < 1.0)) {
    fail(errc::invalid_config, "train_fraction must be in (0, 1)");
  }
  if (config.search_space.dims() != 3) {
    fail(errc::invalid_space, "hyperparameter search space must have 3 dimensions (C, gamma, epsilon)");
  }
  config.search_space.validate();
}

SvrHyperParams params_from_position(std::span<const double> v, bool log_scale) {
  if (log_scale) {
    return {std::pow(4.0, v[0]), std::pow(4.0, v[1]), std::pow(4.0, v[2])};
  }
  return {v[0], v[1], v[2]};
}

SearchSpace optimizer_space(const ExperimentConfig& config) {
  if (!config.log_scale_search) return config.search_space;
  SearchSpace space;
  const auto log4 = [](double v) { return std::log2(v) / 2.0; };
  for (std::size_t d = 0; d < 3; ++d) {
    space.lower.push_back(log4(config.search_space.lower[d]));
    space.upper.push_back(log4(config.search_space.upper[d]));
  }
  return space;
}

// Rethrows pipeline-stage failures with the failing step named.
template <typename Fn>
auto at_step(const char* step, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.code(), std::string("[") + step + "] " + e.what());
  }
}

}  // namespace

double fitness(const SvrHyperParams& candidate, const EmbeddedDataset& train,
               const EmbeddedDataset& eval, const SvrTrainControl& control) {
  const SvrModel model = svrcast::train(train.X, train.Y, candidate, control);
  const std::vector<double> predicted = predict(model, eval.X);
  return mse(eval.Y, predicted);
}

PreparedData prepare(const TimeSeries& series, const ExperimentConfig& config) {
  check_config(config);
  PreparedData data;

  // Step 1: delay and dimension, estimated on the raw series (both estimators
  // are invariant to the affine rescaling applied next).
  if (config.embedding.auto_select) {
    const DelaySelection delay = at_step("embedding estimation", [&] {
      return select_delay(series.values, config.embedding.max_tau, config.embedding.mi_bins);
    });
    const DimensionSelection dim = at_step("embedding estimation", [&] {
      return select_dimension(series.values, delay.tau, config.embedding.max_m,
                              config.embedding.fnn);
    });
    data.spec = EmbeddingSpec{dim.m, delay.tau};
    data.delay_local_minimum = delay.local_minimum;
    data.fnn_converged = dim.converged;
  } else {
    data.spec = config.embedding.fixed;
  }

  // Step 2: scale to [0,1], embed, then split chronologically. The scaler is
  // fitted on the full series by default; the train-only mode restricts the
  // fit to the raw values that can appear in training rows.
  TimeSeries scaled;
  if (config.fit_scaler_on_train_only) {
    const EmbeddedDataset probe =
        at_step("preprocessing", [&] { return embed(series, data.spec); });
    const std::size_t train_rows = static_cast<std::size_t>(
        std::floor(static_cast<double>(probe.rows()) * config.train_fraction));
    if (train_rows == 0 || train_rows == probe.rows()) {
      fail(errc::empty_partition, "train fraction leaves an empty side");
    }
    const std::size_t last_train_raw =
        (train_rows - 1) + static_cast<std::size_t>(data.spec.m - 1) * data.spec.tau + 1;
    TimeSeries head{series.name,
                    {series.values.begin(),
                     series.values.begin() + static_cast<std::ptrdiff_t>(last_train_raw) + 1}};
    data.scaler = at_step("preprocessing", [&] { return normalize(head).second; });
    scaled.name = series.name;
    scaled.values.reserve(series.size());
    for (double v : series.values) {
      scaled.values.push_back((v - data.scaler.min) / data.scaler.width());
    }
  } else {
    auto [s, params] = at_step("preprocessing", [&] { return normalize(series); });
    scaled = std::move(s);
    data.scaler = params;
  }

  const EmbeddedDataset dataset =
      at_step("preprocessing", [&] { return embed(scaled, data.spec); });
  auto [train_set, test_set] =
      at_step("preprocessing", [&] { return split(dataset, config.train_fraction); });
  data.train = std::move(train_set);
  data.test = std::move(test_set);

  const std::size_t offset = static_cast<std::size_t>(data.spec.m - 1) * data.spec.tau + 1;
  for (std::size_t i = 0; i < data.test.rows(); ++i) {
    data.test_target_index.push_back(data.train.rows() + i + offset);
  }

  if (config.fitness_target == FitnessTarget::test) {
    data.fit_train = data.train;
    data.fit_eval = data.test;
  } else {
    auto [inner_train, holdout] = split(data.train, 0.8);
    data.fit_train = std::move(inner_train);
    data.fit_eval = std::move(holdout);
  }
  return data;
}

CalibrationOutcome calibrate(const PreparedData& data, const ExperimentConfig& config,
                             Algorithm algorithm, std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();

  CalibrationOutcome out;
  out.algorithm = algorithm;

  const SvrTrainer trainer(data.fit_train.X, data.fit_train.Y);
  const Objective objective = [&](std::span<const double> v) {
    const SvrHyperParams candidate = params_from_position(v, config.log_scale_search);
    const SvrModel model = trainer.fit(candidate, config.solver);
    return mse(data.fit_eval.Y, predict(model, data.fit_eval.X));
  };

  BoaConfig opt_config = config.optimizer;
  opt_config.seed = seed;
  const OptimizationResult result = at_step("calibration", [&] {
    return run_optimizer(algorithm, objective, optimizer_space(config), opt_config);
  });

  out.params = params_from_position(result.best_position, config.log_scale_search);
  out.best_fitness = result.best_fitness;
  out.optimizer_history = result.history;
  out.evaluations = result.evaluations;

  // Step 7: final fit on the full training rows, one-step-ahead forecast of
  // the test rows (feature vectors hold actual lagged observations only).
  out.model = at_step("final fit", [&] {
    return svrcast::train(data.train.X, data.train.Y, out.params, config.solver);
  });
  out.predictions = predict(out.model, data.test.X);
  out.mse = mse(data.test.Y, out.predictions);
  const bool zero_actual =
      std::any_of(data.test.Y.begin(), data.test.Y.end(), [](double v) { return v == 0.0; });
  if (!zero_actual) {
    out.mape = mape(data.test.Y, out.predictions);
  }
  out.predictions_price = denormalize(out.predictions, data.scaler);

  out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

CalibrationOutcome run_experiment(const TimeSeries& series, const ExperimentConfig& config) {
  const PreparedData data = prepare(series, config);
  return calibrate(data, config, config.algorithm,
                   child_seed(config.seed, algorithm_name(config.algorithm)));
}

ComparisonReport compare_optimizers(const TimeSeries& series, const ExperimentConfig& config,
                                    const std::vector<Algorithm>& algorithms) {
  if (algorithms.empty()) fail(errc::invalid_config, "no algorithms requested");
  for (std::size_t i = 0; i < algorithms.size(); ++i) {
    for (std::size_t j = i + 1; j < algorithms.size(); ++j) {
      if (algorithms[i] == algorithms[j]) {
        fail(errc::invalid_config,
             std::string("algorithm '") + algorithm_name(algorithms[i]) + "' listed twice");
      }
    }
  }

  ComparisonReport report;
  report.data = prepare(series, config);

  for (Algorithm algorithm : algorithms) {
    try {
      report.outcomes.push_back(calibrate(report.data, config, algorithm,
                                          child_seed(config.seed, algorithm_name(algorithm))));
    } catch (const Error& e) {
      CalibrationOutcome failed;
      failed.algorithm = algorithm;
      failed.failed = true;
      failed.error = e.what();
      report.outcomes.push_back(std::move(failed));
    }
  }

  // Pairwise DM statistics on the normalized test-set errors.
  const std::size_t count = report.outcomes.size();
  report.dm.assign(count, std::vector<DmCell>(count));
  std::vector<std::vector<double>> errors(count);
  for (std::size_t a = 0; a < count; ++a) {
    if (report.outcomes[a].failed) continue;
    const auto& pred = report.outcomes[a].predictions;
    errors[a].resize(pred.size());
    for (std::size_t t = 0; t < pred.size(); ++t) {
      errors[a][t] = report.data.test.Y[t] - pred[t];
    }
  }
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = 0; b < count; ++b) {
      if (a == b || report.outcomes[a].failed || report.outcomes[b].failed) continue;
      DmCell& cell = report.dm[a][b];
      try {
        const DmResult dm = dm_test(errors[a], errors[b]);
        cell.available = true;
        cell.statistic = dm.statistic;
        cell.significant = dm.significant;
      } catch (const Error& e) {
        if (e.code() != errc::degenerate_variance) throw;
        cell.available = true;
        cell.degenerate = true;
      }
    }
  }
  return report;
}

}  // namespace svrcast
