#ifndef SVRCAST_OPTIMIZER_INTERNAL_HPP
#define SVRCAST_OPTIMIZER_INTERNAL_HPP

#include "svrcast/optimizer.hpp"

namespace svrcast {

// Evaluates the objective and rejects NaN/Inf results.
double checked_eval(const Objective& objective, std::span<const double> x);

}  // namespace svrcast

#endif  // SVRCAST_OPTIMIZER_INTERNAL_HPP
