#ifndef SVRCAST_EVAL_STATS_HPP
#define SVRCAST_EVAL_STATS_HPP

#include <span>

namespace svrcast {

// Mean squared error of a forecast against actuals.
double mse(std::span<const double> actual, std::span<const double> predicted);

// Mean absolute fractional error (no x100). Rejects zero actuals.
double mape(std::span<const double> actual, std::span<const double> predicted);

struct DmResult {
  double statistic = 0.0;
  bool significant = false;  // |statistic| > 1.96
};

// Diebold-Mariano test on squared-error loss for one-step-ahead forecasts.
// Inputs are the two methods' forecast error series e_t = y_t - f_t.
// The loss differential is d_t = errors_a[t]^2 - errors_b[t]^2 and the
// statistic is mean(d) / sqrt(var(d)/N) with the unbiased sample variance
// standing in for the long-run variance (lag 0, horizon 1). Negative values
// mean the first method's squared errors are smaller.
DmResult dm_test(std::span<const double> errors_a, std::span<const double> errors_b);

}  // namespace svrcast

#endif  // SVRCAST_EVAL_STATS_HPP
