#include "svrcast/eval_stats.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "svrcast/errors.hpp"

namespace svrcast {

namespace {

void check_pair(std::span<const double> actual, std::span<const double> predicted) {
  if (actual.size() != predicted.size()) {
    fail(errc::length_mismatch, "actual has " + std::to_string(actual.size()) +
                                    " values, predicted has " +
                                    std::to_string(predicted.size()));
  }
  if (actual.empty()) {
    fail(errc::empty_input, "forecast pair is empty");
  }
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if (!std::isfinite(actual[i]) || !std::isfinite(predicted[i])) {
      fail(errc::non_finite, "non-finite value at index " + std::to_string(i));
    }
  }
}

}  // namespace

double mse(std::span<const double> actual, std::span<const double> predicted) {
  check_pair(actual, predicted);
  double sum = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    const double e = actual[i] - predicted[i];
    sum += e * e;
  }
  return sum / static_cast<double>(actual.size());
}

double mape(std::span<const double> actual, std::span<const double> predicted) {
  check_pair(actual, predicted);
  double sum = 0.0;
  for (std::size_t i = 0; i < actual.size(); ++i) {
    if (actual[i] == 0.0) {
      fail(errc::zero_actual, "actual value is zero at index " + std::to_string(i));
    }
    sum += std::fabs((actual[i] - predicted[i]) / actual[i]);
  }
  return sum / static_cast<double>(actual.size());
}

DmResult dm_test(std::span<const double> errors_a, std::span<const double> errors_b) {
  check_pair(errors_a, errors_b);
  const std::size_t n = errors_a.size();
  if (n < 2) {
    fail(errc::empty_input, "dm_test needs at least 2 observations");
  }

  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    d[i] = errors_a[i] * errors_a[i] - errors_b[i] * errors_b[i];
  }

  double mean = 0.0;
  for (double v : d) mean += v;
  mean /= static_cast<double>(n);

  double var = 0.0;
  for (double v : d) {
    const double c = v - mean;
    var += c * c;
  }
  var /= static_cast<double>(n - 1);

  if (var == 0.0) {
    fail(errc::degenerate_variance, "loss differential has zero variance");
  }

  DmResult out;
  out.statistic = mean / std::sqrt(var / static_cast<double>(n));
  out.significant = std::fabs(out.statistic) > 1.96;
  return out;
}

}  // namespace svrcast
