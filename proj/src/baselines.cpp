// Canonical textbook forms of the five comparison metaheuristics. The paper
// trail for each is its original source; constants follow those sources and
// are fixed on purpose (only population, iteration budget and seed vary).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>

#include "optimizer_internal.hpp"
#include "svrcast/errors.hpp"
#include "svrcast/optimizer.hpp"

namespace svrcast {

namespace {

struct Tracker {
  std::vector<double> best_position;
  double best_fitness = std::numeric_limits<double>::infinity();

  void offer(std::span<const double> x, double f) {
    if (f < best_fitness) {
      best_fitness = f;
      best_position.assign(x.begin(), x.end());
    }
  }
};

void check_common(const CommonConfig& cfg) {
  if (cfg.population < 2) fail(errc::invalid_config, "population must be >= 2");
  if (cfg.max_iterations < 1) fail(errc::invalid_config, "max_iterations must be >= 1");
}

OptimizationResult finish(Tracker& best, std::vector<double> history, long long evals,
                          std::chrono::steady_clock::time_point t0) {
  OptimizationResult out;
  out.best_position = std::move(best.best_position);
  out.best_fitness = best.best_fitness;
  out.history = std::move(history);
  out.evaluations = evals;
  out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

// ---------------------------------------------------------------------------
// PSO: inertia 0.729, cognitive = social = 1.49445, zero initial velocity,
// synchronous global-best updates.
// ---------------------------------------------------------------------------
OptimizationResult pso(const Objective& obj, const SearchSpace& space,
                       const CommonConfig& cfg) {
  constexpr double kInertia = 0.729;
  constexpr double kCognitive = 1.49445;
  constexpr double kSocial = 1.49445;

  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(cfg.seed);
  const std::size_t pop = static_cast<std::size_t>(cfg.population);
  const std::size_t dim = space.dims();

  auto pos = initialize_population(space, cfg.population, rng);
  std::vector<std::vector<double>> vel(pop, std::vector<double>(dim, 0.0));
  std::vector<double> fit(pop);
  Tracker best;
  for (std::size_t i = 0; i < pop; ++i) {
    fit[i] = checked_eval(obj, pos[i]);
    best.offer(pos[i], fit[i]);
  }
  long long evals = static_cast<long long>(pop);

  auto pbest = pos;
  auto pbest_fit = fit;
  std::vector<double> history{best.best_fitness};

  for (int t = 0; t < cfg.max_iterations; ++t) {
    const std::vector<double> gbest = best.best_position;
    for (std::size_t i = 0; i < pop; ++i) {
      for (std::size_t d = 0; d < dim; ++d) {
        const double r1 = rng.unit();
        const double r2 = rng.unit();
        vel[i][d] = kInertia * vel[i][d] + kCognitive * r1 * (pbest[i][d] - pos[i][d]) +
                    kSocial * r2 * (gbest[d] - pos[i][d]);
        pos[i][d] += vel[i][d];
      }
      space.clip(pos[i]);
    }
    for (std::size_t i = 0; i < pop; ++i) {
      fit[i] = checked_eval(obj, pos[i]);
      if (fit[i] < pbest_fit[i]) {
        pbest_fit[i] = fit[i];
        pbest[i] = pos[i];
      }
      best.offer(pos[i], fit[i]);
    }
    evals += static_cast<long long>(pop);
    history.push_back(best.best_fitness);
  }
  return finish(best, std::move(history), evals, t0);
}

// ---------------------------------------------------------------------------
// GA: tournament selection (k=2), blend crossover (alpha=0.5), Gaussian
// mutation sigma = 0.1 * range at rate 1/dim, one elite carried over.
// ---------------------------------------------------------------------------
OptimizationResult ga(const Objective& obj, const SearchSpace& space,
                      const CommonConfig& cfg) {
  constexpr double kBlendAlpha = 0.5;
  constexpr double kMutationScale = 0.1;

  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(cfg.seed);
  const std::size_t pop = static_cast<std::size_t>(cfg.population);
  const std::size_t dim = space.dims();
  const double mutation_rate = 1.0 / static_cast<double>(dim);

  auto pos = initialize_population(space, cfg.population, rng);
  std::vector<double> fit(pop);
  Tracker best;
  for (std::size_t i = 0; i < pop; ++i) {
    fit[i] = checked_eval(obj, pos[i]);
    best.offer(pos[i], fit[i]);
  }
  long long evals = static_cast<long long>(pop);
  std::vector<double> history{best.best_fitness};

  auto tournament = [&]() -> std::size_t {
    const std::size_t a = rng.index(pop);
    const std::size_t b = rng.index(pop);
    return fit[b] < fit[a] ? b : a;
  };

  for (int t = 0; t < cfg.max_iterations; ++t) {
    std::size_t elite = 0;
    for (std::size_t i = 1; i < pop; ++i) {
      if (fit[i] < fit[elite]) elite = i;
    }
    std::vector<std::vector<double>> next;
    next.reserve(pop);
    next.push_back(pos[elite]);

    while (next.size() < pop) {
      const auto& pa = pos[tournament()];
      const auto& pb = pos[tournament()];
      std::vector<double> child(dim);
      for (std::size_t d = 0; d < dim; ++d) {
        const double lo = std::min(pa[d], pb[d]);
        const double hi = std::max(pa[d], pb[d]);
        const double spread = hi - lo;
        child[d] = (lo - kBlendAlpha * spread) +
                   (1.0 + 2.0 * kBlendAlpha) * spread * rng.unit();
      }
      for (std::size_t d = 0; d < dim; ++d) {
        if (rng.unit() < mutation_rate) {
          child[d] += rng.gauss() * kMutationScale * (space.upper[d] - space.lower[d]);
        }
      }
      space.clip(child);
      next.push_back(std::move(child));
    }

    pos = std::move(next);
    for (std::size_t i = 0; i < pop; ++i) {
      fit[i] = checked_eval(obj, pos[i]);
      best.offer(pos[i], fit[i]);
    }
    evals += static_cast<long long>(pop);
    history.push_back(best.best_fitness);
  }
  return finish(best, std::move(history), evals, t0);
}

// ---------------------------------------------------------------------------
// ABC: one food source per member, employed + onlooker phases with the
// single-dimension neighbour operator, scout reset after limit = 0.5*pop*dim
// stale trials.
// ---------------------------------------------------------------------------
OptimizationResult abc(const Objective& obj, const SearchSpace& space,
                       const CommonConfig& cfg) {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(cfg.seed);
  const std::size_t pop = static_cast<std::size_t>(cfg.population);
  const std::size_t dim = space.dims();
  const double limit = 0.5 * static_cast<double>(pop) * static_cast<double>(dim);

  auto pos = initialize_population(space, cfg.population, rng);
  std::vector<double> fit(pop);
  std::vector<int> trial(pop, 0);
  Tracker best;
  for (std::size_t i = 0; i < pop; ++i) {
    fit[i] = checked_eval(obj, pos[i]);
    best.offer(pos[i], fit[i]);
  }
  long long evals = static_cast<long long>(pop);
  std::vector<double> history{best.best_fitness};

  auto try_neighbour = [&](std::size_t i) {
    const std::size_t d = rng.index(dim);
    std::size_t k = rng.index(pop - 1);
    if (k >= i) ++k;  // partner distinct from i
    const double phi = 2.0 * rng.unit() - 1.0;
    std::vector<double> cand = pos[i];
    cand[d] += phi * (pos[i][d] - pos[k][d]);
    space.clip(cand);
    const double f = checked_eval(obj, cand);
    ++evals;
    best.offer(cand, f);
    if (f < fit[i]) {
      pos[i] = std::move(cand);
      fit[i] = f;
      trial[i] = 0;
    } else {
      ++trial[i];
    }
  };

  for (int t = 0; t < cfg.max_iterations; ++t) {
    for (std::size_t i = 0; i < pop; ++i) try_neighbour(i);

    // Onlookers: roulette over quality 1/(1+f) for f >= 0, 1+|f| otherwise.
    std::vector<double> quality(pop);
    double total = 0.0;
    for (std::size_t i = 0; i < pop; ++i) {
      quality[i] = fit[i] >= 0.0 ? 1.0 / (1.0 + fit[i]) : 1.0 + std::fabs(fit[i]);
      total += quality[i];
    }
    for (std::size_t n = 0; n < pop; ++n) {
      double pick = rng.unit() * total;
      std::size_t s = 0;
      for (; s + 1 < pop; ++s) {
        pick -= quality[s];
        if (pick <= 0.0) break;
      }
      try_neighbour(s);
    }

    // Scout: abandon the most exhausted source.
    std::size_t worst = 0;
    for (std::size_t i = 1; i < pop; ++i) {
      if (trial[i] > trial[worst]) worst = i;
    }
    if (static_cast<double>(trial[worst]) > limit) {
      for (std::size_t d = 0; d < dim; ++d) {
        pos[worst][d] = sample_coordinate(space.lower[d], space.upper[d], rng.open01());
      }
      fit[worst] = checked_eval(obj, pos[worst]);
      ++evals;
      trial[worst] = 0;
      best.offer(pos[worst], fit[worst]);
    }
    history.push_back(best.best_fitness);
  }
  return finish(best, std::move(history), evals, t0);
}

// ---------------------------------------------------------------------------
// FA: beta0 = 1, gamma = 1 on range-normalized distances, alpha = 0.2 decaying
// by 0.97 per iteration with the random walk scaled by each dimension's range.
// ---------------------------------------------------------------------------
OptimizationResult fa(const Objective& obj, const SearchSpace& space,
                      const CommonConfig& cfg) {
  constexpr double kBeta0 = 1.0;
  constexpr double kGamma = 1.0;
  constexpr double kAlphaDecay = 0.97;

  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(cfg.seed);
  const std::size_t pop = static_cast<std::size_t>(cfg.population);
  const std::size_t dim = space.dims();

  auto pos = initialize_population(space, cfg.population, rng);
  std::vector<double> fit(pop);
  Tracker best;
  for (std::size_t i = 0; i < pop; ++i) {
    fit[i] = checked_eval(obj, pos[i]);
    best.offer(pos[i], fit[i]);
  }
  long long evals = static_cast<long long>(pop);
  std::vector<double> history{best.best_fitness};
  double alpha = 0.2;

  for (int t = 0; t < cfg.max_iterations; ++t) {
    const auto snapshot = pos;
    const auto snapfit = fit;
    for (std::size_t i = 0; i < pop; ++i) {
      auto& x = pos[i];
      for (std::size_t j = 0; j < pop; ++j) {
        if (!(snapfit[j] < snapfit[i])) continue;
        double r2 = 0.0;
        for (std::size_t d = 0; d < dim; ++d) {
          const double nd = (x[d] - snapshot[j][d]) / (space.upper[d] - space.lower[d]);
          r2 += nd * nd;
        }
        const double beta = kBeta0 * std::exp(-kGamma * r2);
        for (std::size_t d = 0; d < dim; ++d) {
          x[d] += beta * (snapshot[j][d] - x[d]) +
                  alpha * (rng.unit() - 0.5) * (space.upper[d] - space.lower[d]);
        }
      }
      space.clip(x);
    }
    for (std::size_t i = 0; i < pop; ++i) {
      fit[i] = checked_eval(obj, pos[i]);
      best.offer(pos[i], fit[i]);
    }
    evals += static_cast<long long>(pop);
    history.push_back(best.best_fitness);
    alpha *= kAlphaDecay;
  }
  return finish(best, std::move(history), evals, t0);
}

// ---------------------------------------------------------------------------
// SCA: r1 = a - t*(a/T) with a = 2, per-dimension sine/cosine moves around the
// best-so-far destination.
// ---------------------------------------------------------------------------
OptimizationResult sca(const Objective& obj, const SearchSpace& space,
                       const CommonConfig& cfg) {
  constexpr double kA = 2.0;
  constexpr double kTwoPi = 6.283185307179586476925287;

  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(cfg.seed);
  const std::size_t pop = static_cast<std::size_t>(cfg.population);
  const std::size_t dim = space.dims();

  auto pos = initialize_population(space, cfg.population, rng);
  std::vector<double> fit(pop);
  Tracker best;
  for (std::size_t i = 0; i < pop; ++i) {
    fit[i] = checked_eval(obj, pos[i]);
    best.offer(pos[i], fit[i]);
  }
  long long evals = static_cast<long long>(pop);
  std::vector<double> history{best.best_fitness};

  for (int t = 1; t <= cfg.max_iterations; ++t) {
    const double r1 = kA - static_cast<double>(t) * (kA / cfg.max_iterations);
    const std::vector<double> dest = best.best_position;
    for (std::size_t i = 0; i < pop; ++i) {
      for (std::size_t d = 0; d < dim; ++d) {
        const double r2 = kTwoPi * rng.unit();
        const double r3 = 2.0 * rng.unit();
        const double r4 = rng.unit();
        const double pull = std::fabs(r3 * dest[d] - pos[i][d]);
        pos[i][d] += (r4 < 0.5 ? std::sin(r2) : std::cos(r2)) * r1 * pull;
      }
      space.clip(pos[i]);
    }
    for (std::size_t i = 0; i < pop; ++i) {
      fit[i] = checked_eval(obj, pos[i]);
      best.offer(pos[i], fit[i]);
    }
    evals += static_cast<long long>(pop);
    history.push_back(best.best_fitness);
  }
  return finish(best, std::move(history), evals, t0);
}

}  // namespace

OptimizationResult baseline_optimize(Algorithm algorithm, const Objective& objective,
                                     const SearchSpace& space, const CommonConfig& config) {
  space.validate();
  check_common(config);
  switch (algorithm) {
    case Algorithm::pso: return pso(objective, space, config);
    case Algorithm::ga: return ga(objective, space, config);
    case Algorithm::abc: return abc(objective, space, config);
    case Algorithm::fa: return fa(objective, space, config);
    case Algorithm::sca: return sca(objective, space, config);
    case Algorithm::boa: break;
  }
  fail(errc::unsupported_algorithm, "baseline_optimize does not run BOA");
}

}  // namespace svrcast
