#include "svrcast/svr.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "svrcast/errors.hpp"

namespace svrcast {

namespace {

constexpr std::size_t kGramCacheLimit = 2000;  // full Gram kept when n <= limit
constexpr double kQuadFloor = 1e-12;           // degenerate 2x2 subproblem guard

void check_problem(const Matrix& x, std::span<const double> y) {
  if (x.rows == 0 || x.cols == 0) {
    fail(errc::empty_input, "training set is empty");
  }
  if (y.size() != x.rows) {
    fail(errc::length_mismatch, "X has " + std::to_string(x.rows) + " rows, y has " +
                                    std::to_string(y.size()));
  }
  for (double v : x.data) {
    if (!std::isfinite(v)) fail(errc::non_finite, "training input contains NaN/Inf");
  }
  for (double v : y) {
    if (!std::isfinite(v)) fail(errc::non_finite, "training target contains NaN/Inf");
  }
}

void check_params(const SvrHyperParams& p) {
  if (!(p.c > 0.0) || !std::isfinite(p.c)) fail(errc::invalid_config, "C must be > 0");
  if (!(p.gamma > 0.0) || !std::isfinite(p.gamma)) fail(errc::invalid_config, "gamma must be > 0");
  if (!(p.epsilon >= 0.0) || !std::isfinite(p.epsilon)) {
    fail(errc::invalid_config, "epsilon must be >= 0");
  }
}

// Kernel rows for the dual solver: precomputed when the training set is small
// enough, recomputed on demand otherwise.
class GramSource {
 public:
  GramSource(const Matrix& sqdist, double gamma) : sqdist_(sqdist), gamma_(gamma) {
    n_ = sqdist.rows;
    if (n_ <= kGramCacheLimit) {
      cache_.assign(n_ * n_, 0.0);
      for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
          cache_[i * n_ + j] = std::exp(-gamma_ * sqdist_[i][j]);
        }
      }
    } else {
      scratch_a_.assign(n_, 0.0);
      scratch_b_.assign(n_, 0.0);
      scratch_row_a_ = scratch_row_b_ = n_;
    }
  }

  std::span<const double> row(std::size_t r) {
    if (!cache_.empty()) return {cache_.data() + r * n_, n_};
    if (scratch_row_a_ == r) return {scratch_a_.data(), n_};
    if (scratch_row_b_ == r) return {scratch_b_.data(), n_};
    auto& buf = (fill_b_ = !fill_b_) ? scratch_b_ : scratch_a_;
    for (std::size_t j = 0; j < n_; ++j) buf[j] = std::exp(-gamma_ * sqdist_[r][j]);
    (fill_b_ ? scratch_row_b_ : scratch_row_a_) = r;
    return {buf.data(), n_};
  }

 private:
  const Matrix& sqdist_;
  double gamma_;
  std::size_t n_;
  std::vector<double> cache_;
  std::vector<double> scratch_a_, scratch_b_;
  std::size_t scratch_row_a_ = 0, scratch_row_b_ = 0;
  bool fill_b_ = false;
};

}  // namespace

double rbf_kernel(std::span<const double> a, std::span<const double> b, double gamma) {
  if (a.size() != b.size()) {
    fail(errc::dimension_mismatch, "kernel arguments have dimensions " +
                                       std::to_string(a.size()) + " and " +
                                       std::to_string(b.size()));
  }
  if (!(gamma > 0.0)) fail(errc::invalid_config, "gamma must be > 0");
  return std::exp(-gamma * squared_distance(a, b));
}

SvrTrainer::SvrTrainer(const Matrix& x, std::span<const double> y)
    : x_(x), y_(y.begin(), y.end()) {
  check_problem(x_, y_);
  sqdist_ = Matrix(x_.rows, x_.rows);
  for (std::size_t i = 0; i < x_.rows; ++i) {
    sqdist_[i][i] = 0.0;
    for (std::size_t j = i + 1; j < x_.rows; ++j) {
      const double d2 = squared_distance(x_.row(i), x_.row(j));
      sqdist_[i][j] = d2;
      sqdist_[j][i] = d2;
    }
  }
}

// Solves the box-constrained dual of the soft-margin problem:
//   min_alpha  1/2 alpha^T Q alpha + p^T alpha
//   s.t.       sum_t s_t alpha_t = 0,  0 <= alpha_t <= C
// over 2n variables, where t < n carries beta_i (sign +1), t >= n carries
// beta_i^* (sign -1), p_t = eps -/+ y, and Q(t,u) = s_t s_u K(t%n, u%n).
// Each step picks the maximal violating pair and solves the two-variable
// subproblem exactly, so the dual objective never decreases.
SvrModel SvrTrainer::fit(SvrHyperParams params, SvrTrainControl control) const {
  check_params(params);
  if (!(control.tol > 0.0)) fail(errc::invalid_config, "tol must be > 0");

  const std::size_t n = x_.rows;
  const std::size_t vars = 2 * n;
  const double cap = params.c;

  GramSource gram(sqdist_, params.gamma);

  auto sign = [n](std::size_t t) { return t < n ? 1.0 : -1.0; };

  std::vector<double> alpha(vars, 0.0);
  std::vector<double> lin(vars);   // linear term p
  std::vector<double> grad(vars);  // Q alpha + p
  for (std::size_t t = 0; t < n; ++t) {
    lin[t] = params.epsilon - y_[t];
    lin[t + n] = params.epsilon + y_[t];
  }
  grad = lin;

  SvrModel model;
  model.params = params;

  auto objective = [&]() {
    // f = 1/2 alpha^T (grad + p); reported maximization value is -f
    double f = 0.0;
    for (std::size_t t = 0; t < vars; ++t) f += alpha[t] * (grad[t] + lin[t]);
    return -0.5 * f;
  };

  // Maximal violating pair over the up/low index sets.
  auto select = [&](std::size_t& up, std::size_t& low, double& up_val, double& low_val) {
    up_val = -std::numeric_limits<double>::infinity();
    low_val = std::numeric_limits<double>::infinity();
    up = low = vars;
    for (std::size_t t = 0; t < vars; ++t) {
      const double s = sign(t);
      const double v = -s * grad[t];
      const bool in_up = (s > 0.0) ? (alpha[t] < cap) : (alpha[t] > 0.0);
      const bool in_low = (s > 0.0) ? (alpha[t] > 0.0) : (alpha[t] < cap);
      if (in_up && v > up_val) {
        up_val = v;
        up = t;
      }
      if (in_low && v < low_val) {
        low_val = v;
        low = t;
      }
    }
  };

  long long passes = 0;
  double gap = 0.0;
  bool converged = false;
  if (control.track_objective) model.objective_trace.push_back(objective());

  std::size_t i, j;
  double up_val, low_val;
  select(i, j, up_val, low_val);

  while (true) {
    gap = up_val - low_val;
    if (gap <= control.tol) {
      converged = true;
      break;
    }
    if (passes >= control.max_passes) {
      break;  // best-so-far model, flagged below
    }

    const std::span<const double> ki = gram.row(i % n);
    const std::span<const double> kj = gram.row(j % n);
    const double si = sign(i), sj = sign(j);
    const double qii = ki[i % n];                 // diagonal kernel value is 1 for RBF
    const double qjj = kj[j % n];
    const double qij = si * sj * ki[j % n];

    const double old_i = alpha[i], old_j = alpha[j];
    if (si != sj) {
      double quad = qii + qjj + 2.0 * qij;
      if (quad <= 0.0) quad = kQuadFloor;
      const double delta = (-grad[i] - grad[j]) / quad;
      const double diff = alpha[i] - alpha[j];
      alpha[i] += delta;
      alpha[j] += delta;
      if (diff > 0.0) {
        if (alpha[j] < 0.0) {
          alpha[j] = 0.0;
          alpha[i] = diff;
        }
        if (alpha[i] > cap) {
          alpha[i] = cap;
          alpha[j] = cap - diff;
        }
      } else {
        if (alpha[i] < 0.0) {
          alpha[i] = 0.0;
          alpha[j] = -diff;
        }
        if (alpha[j] > cap) {
          alpha[j] = cap;
          alpha[i] = cap + diff;
        }
      }
    } else {
      double quad = qii + qjj - 2.0 * qij;
      if (quad <= 0.0) quad = kQuadFloor;
      const double delta = (grad[i] - grad[j]) / quad;
      const double sum = alpha[i] + alpha[j];
      alpha[i] -= delta;
      alpha[j] += delta;
      if (sum > cap) {
        if (alpha[i] > cap) {
          alpha[i] = cap;
          alpha[j] = sum - cap;
        }
        if (alpha[j] > cap) {
          alpha[j] = cap;
          alpha[i] = sum - cap;
        }
      } else {
        if (alpha[j] < 0.0) {
          alpha[j] = 0.0;
          alpha[i] = sum;
        }
        if (alpha[i] < 0.0) {
          alpha[i] = 0.0;
          alpha[j] = sum;
        }
      }
    }

    // Fused gradient update and next-pair selection. The signed Q structure
    // collapses to one shared term per training row: dG[m] = +u, dG[m+n] = -u.
    const double ci = si * (alpha[i] - old_i);
    const double cj = sj * (alpha[j] - old_j);
    const double* kirow = ki.data();
    const double* kjrow = kj.data();
    up_val = -std::numeric_limits<double>::infinity();
    low_val = std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < n; ++m) {
      const double u = ci * kirow[m] + cj * kjrow[m];
      const double g_beta = grad[m] + u;
      const double g_star = grad[m + n] - u;
      grad[m] = g_beta;
      grad[m + n] = g_star;

      const double a_beta = alpha[m];
      if (a_beta < cap && -g_beta > up_val) {
        up_val = -g_beta;
        i = m;
      }
      if (a_beta > 0.0 && -g_beta < low_val) {
        low_val = -g_beta;
        j = m;
      }
      const double a_star = alpha[m + n];
      if (a_star > 0.0 && g_star > up_val) {
        up_val = g_star;
        i = m + n;
      }
      if (a_star < cap && g_star < low_val) {
        low_val = g_star;
        j = m + n;
      }
    }
    ++passes;
    if (control.track_objective) model.objective_trace.push_back(objective());
  }

  // Pair complementarity: shifting both sides of a pair down by their minimum
  // keeps beta - beta^* (and the gradient) unchanged and never lowers the
  // dual objective, so the returned multipliers satisfy min(b, b*) = 0.
  for (std::size_t t = 0; t < n; ++t) {
    const double shift = std::min(alpha[t], alpha[t + n]);
    if (shift > 0.0) {
      alpha[t] -= shift;
      alpha[t + n] -= shift;
    }
  }

  // Bias from interior (free) multipliers; KKT-interval midpoint otherwise.
  // Bound membership is tolerant here: a multiplier a rounding error away
  // from the box edge classifies as being on it, so that the reported bias is
  // reproducible when the optimal bias is a whole interval.
  const double edge = 1e-10 * cap;
  double free_sum = 0.0;
  std::size_t free_count = 0;
  for (std::size_t t = 0; t < vars; ++t) {
    if (alpha[t] > edge && alpha[t] < cap - edge) {
      free_sum += -sign(t) * grad[t];
      ++free_count;
    }
  }
  if (free_count > 0) {
    model.bias = free_sum / static_cast<double>(free_count);
  } else {
    double up_val = -std::numeric_limits<double>::infinity();
    double low_val = std::numeric_limits<double>::infinity();
    for (std::size_t t = 0; t < vars; ++t) {
      const double s = sign(t);
      const double v = -s * grad[t];
      const bool in_up = (s > 0.0) ? (alpha[t] < cap - edge) : (alpha[t] > edge);
      const bool in_low = (s > 0.0) ? (alpha[t] > edge) : (alpha[t] < cap - edge);
      if (in_up) up_val = std::max(up_val, v);
      if (in_low) low_val = std::min(low_val, v);
    }
    model.bias = 0.5 * (up_val + low_val);
  }

  model.train_x = x_;
  model.dual_coef.resize(n);
  for (std::size_t t = 0; t < n; ++t) model.dual_coef[t] = alpha[t] - alpha[t + n];
  model.converged = converged;
  model.passes = passes;
  model.kkt_gap = gap;
  model.dual_objective = objective();
  return model;
}

SvrModel train(const Matrix& x, std::span<const double> y, SvrHyperParams params,
               SvrTrainControl control) {
  return SvrTrainer(x, y).fit(params, control);
}

double predict_one(const SvrModel& model, std::span<const double> x) {
  if (!model.train_x.empty() && x.size() != model.train_x.cols) {
    fail(errc::dimension_mismatch,
         "query has dimension " + std::to_string(x.size()) + ", model expects " +
             std::to_string(model.train_x.cols));
  }
  double f = model.bias;
  for (std::size_t i = 0; i < model.dual_coef.size(); ++i) {
    if (model.dual_coef[i] == 0.0) continue;
    f += model.dual_coef[i] *
         std::exp(-model.params.gamma * squared_distance(model.train_x.row(i), x));
  }
  return f;
}

std::vector<double> predict(const SvrModel& model, const Matrix& x) {
  std::vector<double> out;
  out.reserve(x.rows);
  for (std::size_t r = 0; r < x.rows; ++r) out.push_back(predict_one(model, x.row(r)));
  return out;
}

}  // namespace svrcast
