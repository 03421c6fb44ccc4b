#ifndef SVRCAST_PHASE_SPACE_HPP
#define SVRCAST_PHASE_SPACE_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "svrcast/matrix.hpp"

namespace svrcast {

struct TimeSeries {
  std::string name;
  std::vector<double> values;

  std::size_t size() const { return values.size(); }
};

struct NormalizationParams {
  double min = 0.0;
  double max = 1.0;

  double width() const { return max - min; }
};

// Min-max scaling to [0, 1]. Rejects constant series and non-finite values.
std::pair<TimeSeries, NormalizationParams> normalize(const TimeSeries& series);

double denormalize(double value, const NormalizationParams& params);
std::vector<double> denormalize(std::span<const double> values,
                                const NormalizationParams& params);

struct EmbeddingSpec {
  int m = 1;    // embedding dimension
  int tau = 1;  // time delay, in samples
};

// Delay embedding with a one-step-ahead target. For a series of length n the
// design matrix has n - 1 - (m-1)*tau rows; row i (0-based) is
//   [ x[i], x[i+tau], ..., x[i+(m-1)tau] ]
// and its target is x[i + (m-1)tau + 1].
struct EmbeddedDataset {
  Matrix X;
  std::vector<double> Y;
  EmbeddingSpec spec;

  std::size_t rows() const { return X.rows; }
};

EmbeddedDataset embed(std::span<const double> values, EmbeddingSpec spec);
EmbeddedDataset embed(const TimeSeries& series, EmbeddingSpec spec);

// Chronological split: first floor(rows * train_fraction) rows train, rest test.
std::pair<EmbeddedDataset, EmbeddedDataset> split(const EmbeddedDataset& dataset,
                                                  double train_fraction);

// Mutual information (bits) between the series and its tau-lagged copy,
// estimated with an equal-width 2-d histogram over the n-tau lagged pairs.
// bins == 0 picks max(2, floor(sqrt(n - tau))). tau == 0 is allowed and pairs
// each sample with itself (used as the left edge of the delay scan).
double mutual_information(std::span<const double> values, int tau, int bins = 0);

// First-local-minimum rule on a curve indexed 0..len-1: smallest t >= 1 with
// curve[t] < curve[t-1] and curve[t] <= curve[t+1]. Exposed for testing.
struct CurveMinimum {
  int index = 0;
  bool is_local_minimum = false;
};
CurveMinimum first_local_minimum(std::span<const double> curve);

struct DelaySelection {
  int tau = 1;
  bool local_minimum = true;       // false means the argmin fallback was used
  std::vector<double> mi_curve;    // MI(t) for t = 0..max_tau
};

// Delay from the first minimum of mutual information. Falls back to the
// argmin over [1, max_tau] when the curve has no interior local minimum.
DelaySelection select_delay(std::span<const double> values, int max_tau, int bins = 0);

struct FnnOptions {
  double rtol = 15.0;      // distance-ratio threshold
  double atol = 2.0;       // attractor-size threshold
  double threshold = 0.01; // acceptable false-neighbor fraction
};

struct DimensionSelection {
  int m = 1;
  bool converged = true;              // false: no m reached the threshold
  std::vector<double> fnn_fractions;  // fraction for m = 1..max_m
};

// Embedding dimension by false nearest neighbors (Kennel test, brute-force
// neighbor search). Returns the smallest m whose FNN fraction is at or below
// options.threshold, or max_m flagged not-converged.
DimensionSelection select_dimension(std::span<const double> values, int tau,
                                    int max_m, FnnOptions options = {});

}  // namespace svrcast

#endif  // SVRCAST_PHASE_SPACE_HPP
