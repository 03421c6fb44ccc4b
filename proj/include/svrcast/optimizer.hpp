#ifndef SVRCAST_OPTIMIZER_HPP
#define SVRCAST_OPTIMIZER_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "svrcast/rng.hpp"

namespace svrcast {

// Box-constrained continuous minimization. Lower is better everywhere.
using Objective = std::function<double(std::span<const double>)>;

struct SearchSpace {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t dims() const { return lower.size(); }
  void validate() const;
  void clip(std::span<double> x) const;
  bool contains(std::span<const double> x) const;
};

enum class Algorithm { boa, pso, ga, abc, fa, sca };

// Parses an algorithm id; names of the known-but-not-built metaheuristics
// (ssa, bbo, hso, iwo, tlbo, csa) and anything unrecognized raise
// UnsupportedAlgorithm.
Algorithm algorithm_from_string(const std::string& name);
const char* algorithm_name(Algorithm a);
const char* algorithm_model_label(Algorithm a);  // e.g. "BOA-SVR"

struct CommonConfig {
  int population = 20;
  int max_iterations = 50;
  std::uint64_t seed = 0;
};

// How a butterfly's stimulus intensity I is derived from its objective value.
// inverse_fitness maps smaller (better) objectives to stronger stimulus and
// assumes non-negative objectives; absolute_fitness matches the benchmark
// convention I = |f|.
enum class StimulusMap { inverse_fitness, absolute_fitness };

struct BoaConfig : CommonConfig {
  double switch_probability = 0.8;  // p: chance of a global move
  double sensory_modality = 0.01;   // c, grows over iterations
  double power_exponent = 0.1;      // a, fixed
  StimulusMap stimulus = StimulusMap::inverse_fitness;
};

struct OptimizationResult {
  std::vector<double> best_position;
  double best_fitness = 0.0;
  std::vector<double> history;  // best-so-far after init and each iteration
  long long evaluations = 0;
  double elapsed_seconds = 0.0;
  long long global_moves = 0;  // BOA move counters, zero for other algorithms
  long long local_moves = 0;
};

// One coordinate of the uniform box initialization: lb + (ub - lb) * u.
double sample_coordinate(double lower, double upper, double u);

std::vector<std::vector<double>> initialize_population(const SearchSpace& space,
                                                       int count, Rng& rng);

// Fragrance f = c * I^a; zero stimulus gives zero fragrance.
double fragrance(double intensity, double sensory_modality, double power_exponent);

// Deterministic move kernels (r supplied) plus rng-drawing wrappers.
std::vector<double> boa_global_step(std::span<const double> x,
                                    std::span<const double> g_star, double frag,
                                    double r, const SearchSpace& space);
std::vector<double> boa_local_step(std::span<const double> x,
                                   std::span<const double> x_j,
                                   std::span<const double> x_k, double frag,
                                   double r, const SearchSpace& space);
std::vector<double> boa_global_move(std::span<const double> x,
                                    std::span<const double> g_star, double frag,
                                    const SearchSpace& space, Rng& rng);
std::vector<double> boa_local_move(std::span<const double> x,
                                   std::span<const double> x_j,
                                   std::span<const double> x_k, double frag,
                                   const SearchSpace& space, Rng& rng);

OptimizationResult boa_optimize(const Objective& objective, const SearchSpace& space,
                                const BoaConfig& config);

OptimizationResult baseline_optimize(Algorithm algorithm, const Objective& objective,
                                     const SearchSpace& space, const CommonConfig& config);

// Dispatches to boa_optimize or baseline_optimize.
OptimizationResult run_optimizer(Algorithm algorithm, const Objective& objective,
                                 const SearchSpace& space, const BoaConfig& config);

}  // namespace svrcast

#endif  // SVRCAST_OPTIMIZER_HPP
