#include "svrcast/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "svrcast/errors.hpp"

namespace svrcast {

void SearchSpace::validate() const {
  if (lower.empty() || lower.size() != upper.size()) {
    fail(errc::invalid_space, "bound vectors are empty or of different lengths");
  }
  for (std::size_t d = 0; d < lower.size(); ++d) {
    if (!std::isfinite(lower[d]) || !std::isfinite(upper[d]) || !(lower[d] < upper[d])) {
      fail(errc::invalid_space, "dimension " + std::to_string(d) + " has invalid bounds");
    }
  }
}

void SearchSpace::clip(std::span<double> x) const {
  for (std::size_t d = 0; d < x.size(); ++d) {
    x[d] = std::clamp(x[d], lower[d], upper[d]);
  }
}

bool SearchSpace::contains(std::span<const double> x) const {
  if (x.size() != lower.size()) return false;
  for (std::size_t d = 0; d < x.size(); ++d) {
    if (x[d] < lower[d] || x[d] > upper[d]) return false;
  }
  return true;
}

Algorithm algorithm_from_string(const std::string& name) {
  std::string id = name;
  std::transform(id.begin(), id.end(), id.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  if (id == "boa") return Algorithm::boa;
  if (id == "pso") return Algorithm::pso;
  if (id == "ga") return Algorithm::ga;
  if (id == "abc") return Algorithm::abc;
  if (id == "fa") return Algorithm::fa;
  if (id == "sca") return Algorithm::sca;
  if (id == "ssa" || id == "bbo" || id == "hso" || id == "iwo" || id == "tlbo" ||
      id == "csa") {
    fail(errc::unsupported_algorithm,
         "'" + name + "' is recognized but not implemented in this build");
  }
  fail(errc::unsupported_algorithm, "unknown algorithm '" + name + "'");
}

const char* algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::boa: return "boa";
    case Algorithm::pso: return "pso";
    case Algorithm::ga: return "ga";
    case Algorithm::abc: return "abc";
    case Algorithm::fa: return "fa";
    case Algorithm::sca: return "sca";
  }
  return "?";
}

const char* algorithm_model_label(Algorithm a) {
  switch (a) {
    case Algorithm::boa: return "BOA-SVR";
    case Algorithm::pso: return "PSO-SVR";
    case Algorithm::ga: return "GA-SVR";
    case Algorithm::abc: return "ABC-SVR";
    case Algorithm::fa: return "FA-SVR";
    case Algorithm::sca: return "SCA-SVR";
  }
  return "?";
}

double sample_coordinate(double lower, double upper, double u) {
  return lower + (upper - lower) * u;
}

std::vector<std::vector<double>> initialize_population(const SearchSpace& space,
                                                       int count, Rng& rng) {
  space.validate();
  if (count < 1) fail(errc::invalid_config, "population must be >= 1");
  std::vector<std::vector<double>> out(static_cast<std::size_t>(count));
  for (auto& pos : out) {
    pos.resize(space.dims());
    for (std::size_t d = 0; d < space.dims(); ++d) {
      pos[d] = sample_coordinate(space.lower[d], space.upper[d], rng.open01());
    }
  }
  return out;
}

double fragrance(double intensity, double sensory_modality, double power_exponent) {
  if (intensity < 0.0) fail(errc::invalid_config, "stimulus intensity must be >= 0");
  if (intensity == 0.0) return 0.0;
  return sensory_modality * std::pow(intensity, power_exponent);
}

double checked_eval(const Objective& objective, std::span<const double> x) {
  const double v = objective(x);
  if (!std::isfinite(v)) {
    std::string at = "[";
    for (std::size_t d = 0; d < x.size(); ++d) {
      at += (d ? ", " : "") + std::to_string(x[d]);
    }
    fail(errc::objective_non_finite, "objective returned a non-finite value at " + at + "]");
  }
  return v;
}

OptimizationResult run_optimizer(Algorithm algorithm, const Objective& objective,
                                 const SearchSpace& space, const BoaConfig& config) {
  if (algorithm == Algorithm::boa) return boa_optimize(objective, space, config);
  return baseline_optimize(algorithm, objective, space, config);
}

}  // namespace svrcast
