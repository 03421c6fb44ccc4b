#include "svrcast/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <string>

#include "svrcast/errors.hpp"

namespace svrcast {

namespace {

void check_finite(std::span<const double> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      fail(errc::non_finite, "value at index " + std::to_string(i) + " is not finite");
    }
  }
}

// Equal-width bin index over [lo, hi]; the maximum maps into the last bin.
int bin_index(double v, double lo, double hi, int bins) {
  if (hi <= lo) return 0;
  int idx = static_cast<int>((v - lo) / (hi - lo) * bins);
  return std::clamp(idx, 0, bins - 1);
}

double population_stddev(std::span<const double> values) {
  const double n = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  return std::sqrt(var / n);
}

}  // namespace

std::pair<TimeSeries, NormalizationParams> normalize(const TimeSeries& series) {
  if (series.size() < 2) {
    fail(errc::series_too_short, "normalization needs at least 2 observations");
  }
  check_finite(series.values);
  const auto [lo_it, hi_it] = std::minmax_element(series.values.begin(), series.values.end());
  NormalizationParams params{*lo_it, *hi_it};
  if (params.max <= params.min) {
    fail(errc::degenerate_range, "series is constant, min-max range is zero");
  }
  TimeSeries out{series.name, {}};
  out.values.reserve(series.size());
  for (double v : series.values) {
    out.values.push_back((v - params.min) / params.width());
  }
  return {std::move(out), params};
}

double denormalize(double value, const NormalizationParams& params) {
  if (!(params.max > params.min)) {
    fail(errc::degenerate_range, "invalid normalization params");
  }
  return value * params.width() + params.min;
}

std::vector<double> denormalize(std::span<const double> values,
                                const NormalizationParams& params) {
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(denormalize(v, params));
  return out;
}

double mutual_information(std::span<const double> values, int tau, int bins) {
  if (tau < 0) fail(errc::invalid_config, "tau must be non-negative");
  const std::size_t n = values.size();
  if (n <= static_cast<std::size_t>(tau)) {
    fail(errc::series_too_short,
         "series length " + std::to_string(n) + " <= tau " + std::to_string(tau));
  }
  check_finite(values);
  const std::size_t pairs = n - static_cast<std::size_t>(tau);
  if (bins == 0) {
    bins = std::max(2, static_cast<int>(std::floor(std::sqrt(static_cast<double>(pairs)))));
  }
  if (bins < 2) fail(errc::invalid_config, "bins must be >= 2");

  // Lagged pairs (x_j, x_{j+tau}); each coordinate gets its own equal-width
  // grid over its observed range.
  double lo_a = values[0], hi_a = values[0];
  double lo_b = values[tau], hi_b = values[tau];
  for (std::size_t j = 0; j < pairs; ++j) {
    lo_a = std::min(lo_a, values[j]);
    hi_a = std::max(hi_a, values[j]);
    lo_b = std::min(lo_b, values[j + tau]);
    hi_b = std::max(hi_b, values[j + tau]);
  }

  std::vector<double> joint(static_cast<std::size_t>(bins) * bins, 0.0);
  for (std::size_t j = 0; j < pairs; ++j) {
    const int a = bin_index(values[j], lo_a, hi_a, bins);
    const int b = bin_index(values[j + tau], lo_b, hi_b, bins);
    joint[static_cast<std::size_t>(a) * bins + b] += 1.0;
  }

  std::vector<double> pa(bins, 0.0), pb(bins, 0.0);
  for (int a = 0; a < bins; ++a) {
    for (int b = 0; b < bins; ++b) {
      pa[a] += joint[static_cast<std::size_t>(a) * bins + b];
      pb[b] += joint[static_cast<std::size_t>(a) * bins + b];
    }
  }

  const double total = static_cast<double>(pairs);
  // Terms are accumulated in sorted order so the estimate is bit-identical
  // under histogram transposition (the swapped-pairs symmetry).
  std::vector<double> terms;
  terms.reserve(joint.size());
  for (int a = 0; a < bins; ++a) {
    for (int b = 0; b < bins; ++b) {
      const double c = joint[static_cast<std::size_t>(a) * bins + b];
      if (c == 0.0) continue;  // empty joint bins contribute nothing
      const double pj = c / total;
      terms.push_back(pj * std::log2(pj * total * total / (pa[a] * pb[b])));
    }
  }
  std::sort(terms.begin(), terms.end());
  double mi = std::accumulate(terms.begin(), terms.end(), 0.0);
  return std::max(mi, 0.0);  // clamp estimator round-off
}

CurveMinimum first_local_minimum(std::span<const double> curve) {
  if (curve.size() < 2) fail(errc::empty_input, "curve needs at least 2 points");
  for (std::size_t t = 1; t + 1 < curve.size(); ++t) {
    if (curve[t] < curve[t - 1] && curve[t] <= curve[t + 1]) {
      return {static_cast<int>(t), true};
    }
  }
  // No interior minimum: argmin over t >= 1.
  CurveMinimum out{1, false};
  for (std::size_t t = 1; t < curve.size(); ++t) {
    if (curve[t] < curve[out.index]) out.index = static_cast<int>(t);
  }
  return out;
}

DelaySelection select_delay(std::span<const double> values, int max_tau, int bins) {
  if (max_tau < 2) fail(errc::invalid_config, "max_tau must be >= 2");
  DelaySelection out;
  out.mi_curve.reserve(static_cast<std::size_t>(max_tau) + 1);
  for (int t = 0; t <= max_tau; ++t) {
    out.mi_curve.push_back(mutual_information(values, t, bins));
  }
  const CurveMinimum m = first_local_minimum(out.mi_curve);
  out.tau = m.index;
  out.local_minimum = m.is_local_minimum;
  return out;
}

DimensionSelection select_dimension(std::span<const double> values, int tau,
                                    int max_m, FnnOptions options) {
  if (max_m < 2) fail(errc::invalid_config, "max_m must be >= 2");
  if (tau < 1) fail(errc::invalid_config, "tau must be >= 1");
  check_finite(values);

  const double attractor_size = population_stddev(values);
  DimensionSelection out;
  out.m = max_m;
  out.converged = false;

  for (int m = 1; m <= max_m; ++m) {
    // Delay vectors carrying m+1 coordinates; the first m are the dimension-m
    // embedding of the same time points, the last is the candidate coordinate.
    const std::size_t span_len = static_cast<std::size_t>(m) * tau;
    if (values.size() < span_len + 2) {
      fail(errc::series_too_short,
           "series too short for FNN at m=" + std::to_string(m + 1));
    }
    const std::size_t count = values.size() - 1 - span_len;
    if (count < 2) {
      fail(errc::series_too_short,
           "fewer than 2 delay vectors for FNN at m=" + std::to_string(m + 1));
    }

    std::size_t false_neighbors = 0;
    for (std::size_t i = 0; i < count; ++i) {
      // Brute-force nearest neighbor in the first m coordinates.
      std::size_t nn = count;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < count; ++j) {
        if (j == i) continue;
        double d2 = 0.0;
        for (int c = 0; c < m; ++c) {
          const double d = values[i + static_cast<std::size_t>(c) * tau] -
                           values[j + static_cast<std::size_t>(c) * tau];
          d2 += d * d;
          if (d2 >= best) break;
        }
        if (d2 < best) {
          best = d2;
          nn = j;
        }
      }

      const double dist_m = std::sqrt(best);
      const double extra = values[i + span_len] - values[nn + span_len];
      // Floor guards exact-duplicate neighbors (periodic orbits) where the
      // ratio would compare two rounding residues.
      const double denom = std::max(dist_m, 1e-10 * attractor_size);
      const bool ratio_fail = std::fabs(extra) / denom > options.rtol;
      const bool size_fail =
          std::sqrt(dist_m * dist_m + extra * extra) / attractor_size > options.atol;
      if (ratio_fail || size_fail) ++false_neighbors;
    }

    const double fraction = static_cast<double>(false_neighbors) / static_cast<double>(count);
    out.fnn_fractions.push_back(fraction);
    if (fraction <= options.threshold) {
      out.m = m;
      out.converged = true;
      break;
    }
  }
  return out;
}

EmbeddedDataset embed(std::span<const double> values, EmbeddingSpec spec) {
  if (spec.m < 1 || spec.tau < 1) {
    fail(errc::invalid_config, "embedding needs m >= 1 and tau >= 1");
  }
  check_finite(values);
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(values.size());
  const std::ptrdiff_t rows =
      n - 1 - static_cast<std::ptrdiff_t>(spec.m - 1) * spec.tau;
  if (rows < 1) {
    fail(errc::series_too_short,
         "embedding (m=" + std::to_string(spec.m) + ", tau=" + std::to_string(spec.tau) +
             ") leaves no rows for a series of length " + std::to_string(n));
  }

  EmbeddedDataset out;
  out.spec = spec;
  out.X = Matrix(static_cast<std::size_t>(rows), static_cast<std::size_t>(spec.m));
  out.Y.resize(static_cast<std::size_t>(rows));
  const std::size_t last_offset = static_cast<std::size_t>(spec.m - 1) * spec.tau;
  for (std::size_t i = 0; i < static_cast<std::size_t>(rows); ++i) {
    for (int j = 0; j < spec.m; ++j) {
      out.X[i][j] = values[i + static_cast<std::size_t>(j) * spec.tau];
    }
    out.Y[i] = values[i + last_offset + 1];
  }
  return out;
}

EmbeddedDataset embed(const TimeSeries& series, EmbeddingSpec spec) {
  return embed(std::span<const double>(series.values), spec);
}

std::pair<EmbeddedDataset, EmbeddedDataset> split(const EmbeddedDataset& dataset,
                                                  double train_fraction) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    fail(errc::invalid_config, "train_fraction must be in (0, 1)");
  }
  const std::size_t rows = dataset.rows();
  const std::size_t train_rows =
      static_cast<std::size_t>(std::floor(static_cast<double>(rows) * train_fraction));
  if (train_rows == 0 || train_rows == rows) {
    fail(errc::empty_partition,
         "split of " + std::to_string(rows) + " rows at " + std::to_string(train_fraction) +
             " leaves an empty side");
  }

  auto take = [&](std::size_t begin, std::size_t end) {
    EmbeddedDataset part;
    part.spec = dataset.spec;
    part.X = Matrix(end - begin, dataset.X.cols);
    part.Y.assign(dataset.Y.begin() + static_cast<std::ptrdiff_t>(begin),
                  dataset.Y.begin() + static_cast<std::ptrdiff_t>(end));
    std::copy(dataset.X.data.begin() + static_cast<std::ptrdiff_t>(begin * dataset.X.cols),
              dataset.X.data.begin() + static_cast<std::ptrdiff_t>(end * dataset.X.cols),
              part.X.data.begin());
    return part;
  };

  return {take(0, train_rows), take(train_rows, rows)};
}

}  // namespace svrcast
