#include <cmath>
#include <vector>

#include <doctest.h>

#include "svrcast/errors.hpp"
#include "svrcast/optimizer.hpp"
#include "svrcast/rng.hpp"

using namespace svrcast;

namespace {

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

SearchSpace cube(double lo, double hi, std::size_t dims) {
  return SearchSpace{std::vector<double>(dims, lo), std::vector<double>(dims, hi)};
}

const std::vector<Algorithm> kBaselines{Algorithm::pso, Algorithm::ga, Algorithm::abc,
                                        Algorithm::fa, Algorithm::sca};

bool same_result(const OptimizationResult& a, const OptimizationResult& b) {
  return a.best_position == b.best_position && a.best_fitness == b.best_fitness &&
         a.history == b.history && a.evaluations == b.evaluations &&
         a.global_moves == b.global_moves && a.local_moves == b.local_moves;
}

}  // namespace

TEST_CASE("box initialization formula endpoints") {
  const double lo = std::pow(4.0, -10.0);
  const double hi = std::pow(4.0, 4.0);
  CHECK(sample_coordinate(lo, hi, 0.0) == lo);
  CHECK(sample_coordinate(lo, hi, 1.0) == hi);
  CHECK(sample_coordinate(lo, hi, 0.5) == doctest::Approx(128.0000005).epsilon(1e-9));

  Rng rng(17);
  const SearchSpace space = cube(-3.0, 9.0, 4);
  for (const auto& pos : initialize_population(space, 50, rng)) {
    for (std::size_t d = 0; d < 4; ++d) {
      CHECK(pos[d] > space.lower[d]);
      CHECK(pos[d] < space.upper[d]);
    }
  }
}

TEST_CASE("fragrance formula") {
  CHECK(fragrance(1.0, 0.01, 0.1) == 0.01);
  CHECK(fragrance(0.0, 0.37, 0.5) == 0.0);
  // 1024^0.1 = 2
  CHECK(fragrance(1024.0, 0.01, 0.1) == doctest::Approx(0.02).epsilon(1e-12));

  Rng rng(21);
  for (int rep = 0; rep < 200; ++rep) {
    const double a = rng.range(0.05, 1.0);
    const double c = rng.range(0.001, 1.0);
    const double i1 = rng.range(0.0, 50.0);
    const double i2 = i1 + rng.range(0.0, 50.0);
    CHECK(fragrance(i1, c, a) >= 0.0);
    CHECK(fragrance(i2, c, a) >= fragrance(i1, c, a));
  }
}

TEST_CASE("global move formula") {
  const SearchSpace space = cube(-10.0, 10.0, 1);

  const std::vector<double> x{1.0};
  const std::vector<double> g{2.0};
  CHECK(boa_global_step(x, g, 0.0, 0.77, space) == x);          // zero fragrance
  CHECK(boa_global_step(g, g, 0.123, 1.0, space) == g);         // fixed point at the best
  CHECK(boa_global_step(x, g, 0.01, 0.5, space)[0] == doctest::Approx(0.995).epsilon(1e-15));

  // moves never leave the box
  Rng rng(5);
  const SearchSpace tight = cube(0.0, 1.0, 1);
  for (int rep = 0; rep < 100; ++rep) {
    const auto moved = boa_global_move(std::vector<double>{0.9}, std::vector<double>{0.95},
                                       5.0, tight, rng);
    CHECK(moved[0] >= 0.0);
    CHECK(moved[0] <= 1.0);
  }
}

TEST_CASE("local move formula") {
  const SearchSpace space = cube(-10.0, 10.0, 1);
  const std::vector<double> x{1.0};
  const std::vector<double> xj{2.0};
  const std::vector<double> xk{1.0};

  CHECK(boa_local_step(x, xj, xk, 0.0, 0.42, space) == x);
  CHECK(boa_local_step(x, xj, xj, 0.25, 1.0, space) == x);  // r=1 and x_j=x_k cancel
  CHECK(boa_local_step(x, xj, xk, 0.01, 0.5, space)[0] == doctest::Approx(0.995).epsilon(1e-15));
}

TEST_CASE("boa on a constant objective returns the constant") {
  BoaConfig cfg;
  cfg.population = 8;
  cfg.max_iterations = 10;
  cfg.seed = 3;
  const auto result = boa_optimize([](std::span<const double>) { return 7.0; },
                                   cube(-1.0, 1.0, 2), cfg);
  CHECK(result.best_fitness == 7.0);
  REQUIRE(result.history.size() == 11);
  for (double h : result.history) CHECK(h == 7.0);
  CHECK(result.evaluations == 8 * 11);
}

TEST_CASE("boa bookkeeping: monotone history, evaluation count, determinism") {
  BoaConfig cfg;
  cfg.population = 12;
  cfg.max_iterations = 30;
  cfg.seed = 99;
  const SearchSpace space = cube(-10.0, 10.0, 3);

  const auto a = boa_optimize(sphere, space, cfg);
  const auto b = boa_optimize(sphere, space, cfg);
  CHECK(same_result(a, b));

  REQUIRE(a.history.size() == 31);
  for (std::size_t i = 1; i < a.history.size(); ++i) CHECK(a.history[i] <= a.history[i - 1]);
  CHECK(a.best_fitness == a.history.back());
  CHECK(a.evaluations == 12 * 31);
  CHECK(a.best_fitness == sphere(a.best_position));
  CHECK(space.contains(a.best_position));
}

TEST_CASE("switch probability extremes select only one move kind") {
  BoaConfig cfg;
  cfg.population = 10;
  cfg.max_iterations = 20;
  cfg.seed = 7;

  cfg.switch_probability = 1.0;
  auto all_global = boa_optimize(sphere, cube(-10.0, 10.0, 3), cfg);
  CHECK(all_global.global_moves == 10 * 20);
  CHECK(all_global.local_moves == 0);

  cfg.switch_probability = 0.0;
  auto all_local = boa_optimize(sphere, cube(-10.0, 10.0, 3), cfg);
  CHECK(all_local.global_moves == 0);
  CHECK(all_local.local_moves == 10 * 20);
}

TEST_CASE("every evaluated position stays inside the bounds") {
  const SearchSpace space = cube(-2.5, 1.5, 3);
  bool violated = false;
  const Objective audit = [&](std::span<const double> x) {
    if (!space.contains(x)) violated = true;
    return sphere(x);
  };

  BoaConfig cfg;
  cfg.population = 10;
  cfg.max_iterations = 25;
  cfg.seed = 31;
  (void)boa_optimize(audit, space, cfg);
  CHECK_FALSE(violated);

  for (Algorithm alg : kBaselines) {
    violated = false;
    (void)baseline_optimize(alg, audit, space, cfg);
    CHECK_FALSE(violated);
  }
}

TEST_CASE("non-finite objectives abort with a diagnostic") {
  BoaConfig cfg;
  cfg.population = 4;
  cfg.max_iterations = 3;
  const Objective bad = [](std::span<const double>) {
    return std::numeric_limits<double>::quiet_NaN();
  };
  CHECK_THROWS_AS((void)boa_optimize(bad, cube(0.0, 1.0, 2), cfg), Error);
  CHECK_THROWS_AS((void)baseline_optimize(Algorithm::pso, bad, cube(0.0, 1.0, 2), cfg), Error);
}

TEST_CASE("baselines: constant objective, determinism, monotone history") {
  BoaConfig cfg;
  cfg.population = 8;
  cfg.max_iterations = 12;
  cfg.seed = 5;
  const SearchSpace space = cube(-4.0, 4.0, 2);

  for (Algorithm alg : kBaselines) {
    CAPTURE(algorithm_name(alg));
    const auto constant = baseline_optimize(
        alg, [](std::span<const double>) { return 7.0; }, space, cfg);
    CHECK(constant.best_fitness == 7.0);
    for (double h : constant.history) CHECK(h == 7.0);

    const auto a = baseline_optimize(alg, sphere, space, cfg);
    const auto b = baseline_optimize(alg, sphere, space, cfg);
    CHECK(same_result(a, b));
    for (std::size_t i = 1; i < a.history.size(); ++i) CHECK(a.history[i] <= a.history[i - 1]);
    CHECK(a.best_fitness == a.history.back());
    CHECK(space.contains(a.best_position));
    CHECK(a.best_fitness == sphere(a.best_position));
  }
}

TEST_CASE("unimplemented and unknown algorithm names are rejected") {
  CHECK_THROWS_AS((void)algorithm_from_string("tlbo"), Error);
  CHECK_THROWS_AS((void)algorithm_from_string("ssa"), Error);
  CHECK_THROWS_AS((void)algorithm_from_string("gradient"), Error);
  CHECK(algorithm_from_string("BOA") == Algorithm::boa);
  CHECK(algorithm_from_string("sca") == Algorithm::sca);
}

TEST_CASE("sphere sanity at experiment settings") {
  // Full 20-seed medians run in the acceptance suite; this is a quick check
  // that the defaults make progress on the sphere.
  BoaConfig cfg;  // population 20, 50 iterations, p=0.8, c=0.01, a=0.1
  cfg.seed = 1;
  const auto result = boa_optimize(sphere, cube(-10.0, 10.0, 3), cfg);
  CHECK(result.best_fitness < 1e-2);

  for (Algorithm alg : kBaselines) {
    CAPTURE(algorithm_name(alg));
    const auto r = baseline_optimize(alg, sphere, cube(-10.0, 10.0, 3), cfg);
    CHECK(r.best_fitness < 10.0);
  }
}
