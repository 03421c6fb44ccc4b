#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "optimizer_internal.hpp"
#include "svrcast/errors.hpp"
#include "svrcast/optimizer.hpp"

namespace svrcast {

namespace {

double stimulus_intensity(double fitness, StimulusMap map) {
  if (map == StimulusMap::absolute_fitness) return std::fabs(fitness);
  // Better (smaller) objectives give a stronger stimulus; objectives here are
  // non-negative (MSE), negative values are clamped.
  return 1.0 / (1.0 + std::max(fitness, 0.0));
}

void check_config(const BoaConfig& cfg) {
  if (cfg.population < 1) fail(errc::invalid_config, "population must be >= 1");
  if (cfg.max_iterations < 1) fail(errc::invalid_config, "max_iterations must be >= 1");
  if (cfg.switch_probability < 0.0 || cfg.switch_probability > 1.0) {
    fail(errc::invalid_config, "switch_probability must be in [0, 1]");
  }
  if (!(cfg.sensory_modality > 0.0)) fail(errc::invalid_config, "sensory_modality must be > 0");
  if (!(cfg.power_exponent > 0.0 && cfg.power_exponent <= 1.0)) {
    fail(errc::invalid_config, "power_exponent must be in (0, 1]");
  }
}

}  // namespace

std::vector<double> boa_global_step(std::span<const double> x,
                                    std::span<const double> g_star, double frag,
                                    double r, const SearchSpace& space) {
  std::vector<double> out(x.begin(), x.end());
  const double r2 = r * r;
  for (std::size_t d = 0; d < out.size(); ++d) {
    out[d] += (r2 * g_star[d] - x[d]) * frag;
  }
  space.clip(out);
  return out;
}

std::vector<double> boa_local_step(std::span<const double> x,
                                   std::span<const double> x_j,
                                   std::span<const double> x_k, double frag,
                                   double r, const SearchSpace& space) {
  std::vector<double> out(x.begin(), x.end());
  const double r2 = r * r;
  for (std::size_t d = 0; d < out.size(); ++d) {
    out[d] += (r2 * x_j[d] - x_k[d]) * frag;
  }
  space.clip(out);
  return out;
}

std::vector<double> boa_global_move(std::span<const double> x,
                                    std::span<const double> g_star, double frag,
                                    const SearchSpace& space, Rng& rng) {
  return boa_global_step(x, g_star, frag, rng.unit(), space);
}

std::vector<double> boa_local_move(std::span<const double> x,
                                   std::span<const double> x_j,
                                   std::span<const double> x_k, double frag,
                                   const SearchSpace& space, Rng& rng) {
  return boa_local_step(x, x_j, x_k, frag, rng.unit(), space);
}

// Batch-synchronous butterfly loop: every move in an iteration sees the
// positions and best-so-far from the end of the previous iteration, then the
// whole population is re-evaluated. Per butterfly the draw order is fixed:
// switch roll, then r, then (j, k) when the move is local.
OptimizationResult boa_optimize(const Objective& objective, const SearchSpace& space,
                                const BoaConfig& config) {
  space.validate();
  check_config(config);
  const auto t0 = std::chrono::steady_clock::now();

  Rng rng(config.seed);
  const std::size_t pop = static_cast<std::size_t>(config.population);

  OptimizationResult result;
  auto positions = initialize_population(space, config.population, rng);
  std::vector<double> fitness(pop);
  for (std::size_t i = 0; i < pop; ++i) {
    fitness[i] = checked_eval(objective, positions[i]);
  }
  result.evaluations = static_cast<long long>(pop);

  std::size_t best_idx = 0;
  for (std::size_t i = 1; i < pop; ++i) {
    if (fitness[i] < fitness[best_idx]) best_idx = i;
  }
  std::vector<double> g_star = positions[best_idx];
  double best_fitness = fitness[best_idx];
  result.history.push_back(best_fitness);

  double sensory_modality = config.sensory_modality;
  std::vector<std::vector<double>> moved(pop);

  for (int iter = 0; iter < config.max_iterations; ++iter) {
    for (std::size_t i = 0; i < pop; ++i) {
      const double intensity = stimulus_intensity(fitness[i], config.stimulus);
      const double frag = fragrance(intensity, sensory_modality, config.power_exponent);
      const double roll = rng.unit();
      const double r = rng.unit();
      if (roll < config.switch_probability) {
        moved[i] = boa_global_step(positions[i], g_star, frag, r, space);
        ++result.global_moves;
      } else {
        const std::size_t j = rng.index(pop);
        const std::size_t k = rng.index(pop);
        moved[i] = boa_local_step(positions[i], positions[j], positions[k], frag, r, space);
        ++result.local_moves;
      }
    }
    positions.swap(moved);

    for (std::size_t i = 0; i < pop; ++i) {
      fitness[i] = checked_eval(objective, positions[i]);
      if (fitness[i] < best_fitness) {
        best_fitness = fitness[i];
        g_star = positions[i];
      }
    }
    result.evaluations += static_cast<long long>(pop);
    result.history.push_back(best_fitness);

    sensory_modality += 0.025 / (sensory_modality * config.max_iterations);
  }

  result.best_position = g_star;
  result.best_fitness = best_fitness;
  result.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

}  // namespace svrcast
