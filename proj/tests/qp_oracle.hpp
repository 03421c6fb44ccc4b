#ifndef SVRCAST_TESTS_QP_ORACLE_HPP
#define SVRCAST_TESTS_QP_ORACLE_HPP

#include <span>
#include <vector>

#include "svrcast/matrix.hpp"
#include "svrcast/svr.hpp"

namespace svrcast::testing {

// Reference solution of the epsilon-SVR dual, independent of the production
// solver: dense projected-gradient descent on the same 2n-variable problem,
// with the feasible-set projection done by bisection on the equality
// multiplier. Slow and simple on purpose.
struct OracleModel {
  std::vector<double> alpha;      // 2n box variables
  std::vector<double> dual_coef;  // beta - beta*
  double bias = 0.0;
  double objective = 0.0;  // maximization value, comparable to SvrModel::dual_objective
  long long iterations = 0;
};

OracleModel solve_dual_reference(const Matrix& x, std::span<const double> y,
                                 SvrHyperParams params, long long max_iterations = 400000);

std::vector<double> oracle_predict(const OracleModel& model, const Matrix& train_x,
                                   double gamma, const Matrix& queries);

}  // namespace svrcast::testing

#endif  // SVRCAST_TESTS_QP_ORACLE_HPP
