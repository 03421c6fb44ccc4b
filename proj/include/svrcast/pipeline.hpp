#ifndef SVRCAST_PIPELINE_HPP
#define SVRCAST_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "svrcast/optimizer.hpp"
#include "svrcast/phase_space.hpp"
#include "svrcast/svr.hpp"

namespace svrcast {

struct EmbeddingChoice {
  bool auto_select = true;
  EmbeddingSpec fixed{1, 1};  // used when auto_select is false
  // auto-selection knobs
  int max_tau = 20;
  int max_m = 16;
  int mi_bins = 0;  // 0 = sqrt heuristic
  FnnOptions fnn{};
};

enum class FitnessTarget {
  test,        // score candidates on the test set (the procedure reproduced here)
  validation,  // score candidates on a holdout carved from the training rows
};

SearchSpace default_hyperparam_space();  // C, gamma in [4^-10, 4^4], eps in [4^-10, 4^-1]

struct ExperimentConfig {
  EmbeddingChoice embedding;
  double train_fraction = 0.8;
  SearchSpace search_space = default_hyperparam_space();
  Algorithm algorithm = Algorithm::boa;
  BoaConfig optimizer;  // population/iterations/seed shared by every algorithm
  FitnessTarget fitness_target = FitnessTarget::test;
  bool fit_scaler_on_train_only = false;
  bool log_scale_search = false;  // optimize base-4 exponents instead of raw values
  std::uint64_t seed = 42;
  // Calibration budget per candidate fit; hopeless corners of the search box
  // stop at the pass cap and still score (flagged), which keeps the
  // optimizer loop responsive.
  SvrTrainControl solver{1e-3, 100'000, false};
};

// Everything the calibration loop needs, computed once so that every
// algorithm in a comparison sees byte-identical datasets.
struct PreparedData {
  NormalizationParams scaler;
  EmbeddingSpec spec;
  bool delay_local_minimum = true;
  bool fnn_converged = true;
  EmbeddedDataset train, test;          // chronological split of the embedding
  EmbeddedDataset fit_train, fit_eval;  // what the fitness function sees
  std::vector<std::size_t> test_target_index;  // raw series index of each test target
};

PreparedData prepare(const TimeSeries& series, const ExperimentConfig& config);

// Trains on `train` with the candidate parameters and returns the MSE of
// one-step-ahead predictions on `eval`. Non-converged fits still score.
double fitness(const SvrHyperParams& candidate, const EmbeddedDataset& train,
               const EmbeddedDataset& eval, const SvrTrainControl& control = {});

struct CalibrationOutcome {
  Algorithm algorithm = Algorithm::boa;
  SvrHyperParams params;
  SvrModel model;
  std::vector<double> predictions;        // test set, normalized scale
  std::vector<double> predictions_price;  // test set, original units
  double mse = 0.0;                       // normalized scale
  std::optional<double> mape;             // absent when a test target is exactly 0
  double best_fitness = 0.0;              // optimizer's best objective value
  std::vector<double> optimizer_history;
  long long evaluations = 0;
  double elapsed_seconds = 0.0;  // calibration + final fit + prediction
  bool failed = false;
  std::string error;
};

CalibrationOutcome calibrate(const PreparedData& data, const ExperimentConfig& config,
                             Algorithm algorithm, std::uint64_t seed);

CalibrationOutcome run_experiment(const TimeSeries& series, const ExperimentConfig& config);

struct DmCell {
  bool available = false;   // false on the diagonal or when a run failed
  bool degenerate = false;  // identical losses, statistic undefined
  double statistic = 0.0;
  bool significant = false;
};

struct ComparisonReport {
  PreparedData data;
  std::vector<CalibrationOutcome> outcomes;      // one per algorithm, run order
  std::vector<std::vector<DmCell>> dm;           // dm[a][b], row vs column
};

// Runs each algorithm on identical preprocessed data (child seeds derive from
// config.seed by algorithm name) and fills the pairwise DM matrix from the
// normalized test-set errors. A failing algorithm is reported, not fatal.
ComparisonReport compare_optimizers(const TimeSeries& series, const ExperimentConfig& config,
                                    const std::vector<Algorithm>& algorithms);

}  // namespace svrcast

#endif  // SVRCAST_PIPELINE_HPP
