#ifndef SVRCAST_SVR_HPP
#define SVRCAST_SVR_HPP

#include <span>
#include <vector>

#include "svrcast/matrix.hpp"

namespace svrcast {

struct SvrHyperParams {
  double c = 1.0;        // penalty factor, > 0
  double gamma = 1.0;    // RBF width, > 0
  double epsilon = 0.1;  // insensitive-tube radius, >= 0
};

struct SvrTrainControl {
  double tol = 1e-3;                  // max KKT violation at convergence
  long long max_passes = 10'000'000;  // cap on two-variable updates
  bool track_objective = false;       // record the dual objective per update
};

// epsilon-SVR model in dual form. dual_coef[i] is beta_i - beta_i^* for
// training row i; prediction is sum_i dual_coef[i] * K(x_i, x) + bias.
struct SvrModel {
  Matrix train_x;
  std::vector<double> dual_coef;
  double bias = 0.0;
  SvrHyperParams params;

  bool converged = true;
  long long passes = 0;       // two-variable updates performed
  double kkt_gap = 0.0;       // max violating-pair gap at termination
  double dual_objective = 0.0;
  std::vector<double> objective_trace;  // filled when track_objective is set
};

// exp(-gamma * ||a - b||^2); symmetric, in (0, 1], underflows to 0 for very
// distant points.
double rbf_kernel(std::span<const double> a, std::span<const double> b, double gamma);

// Trains an epsilon-SVR on (x, y) by SMO-style maximal-violating-pair updates
// on the 2n-variable box dual of the soft-margin problem. Caches the distance
// and kernel matrices for desk-scale inputs. Reaching max_passes before tol
// returns the best-so-far model with converged = false.
class SvrTrainer {
 public:
  SvrTrainer(const Matrix& x, std::span<const double> y);

  SvrModel fit(SvrHyperParams params, SvrTrainControl control = {}) const;

  const Matrix& squared_distances() const { return sqdist_; }

 private:
  Matrix x_;
  std::vector<double> y_;
  Matrix sqdist_;  // pairwise squared distances, gamma-independent
};

SvrModel train(const Matrix& x, std::span<const double> y, SvrHyperParams params,
               SvrTrainControl control = {});

std::vector<double> predict(const SvrModel& model, const Matrix& x);
double predict_one(const SvrModel& model, std::span<const double> x);

}  // namespace svrcast

#endif  // SVRCAST_SVR_HPP
