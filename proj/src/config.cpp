#include "svrcast/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "svrcast/errors.hpp"

namespace svrcast {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown_keys(const json& obj, const std::string& where,
                         const std::set<std::string>& allowed) {
  for (const auto& item : obj.items()) {
    if (!allowed.contains(item.key())) {
      fail(errc::invalid_config, "unknown key '" + item.key() + "' in " + where);
    }
  }
}

double get_number(const json& obj, const char* key, double fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number()) {
    fail(errc::invalid_config, std::string("'") + key + "' must be a number");
  }
  return obj[key].get<double>();
}

int get_int(const json& obj, const char* key, int fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_number_integer()) {
    fail(errc::invalid_config, std::string("'") + key + "' must be an integer");
  }
  return obj[key].get<int>();
}

bool get_bool(const json& obj, const char* key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_boolean()) {
    fail(errc::invalid_config, std::string("'") + key + "' must be a boolean");
  }
  return obj[key].get<bool>();
}

std::string get_string(const json& obj, const char* key, const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj[key].is_string()) {
    fail(errc::invalid_config, std::string("'") + key + "' must be a string");
  }
  return obj[key].get<std::string>();
}

void parse_embedding(const json& obj, EmbeddingChoice& out) {
  reject_unknown_keys(obj, "embedding",
                      {"mode", "m", "tau", "max_tau", "max_m", "mi_bins", "fnn_rtol",
                       "fnn_atol", "fnn_threshold"});
  const std::string mode = get_string(obj, "mode", "auto");
  if (mode == "auto") {
    out.auto_select = true;
  } else if (mode == "fixed") {
    out.auto_select = false;
    if (!obj.contains("m") || !obj.contains("tau")) {
      fail(errc::invalid_config, "fixed embedding requires 'm' and 'tau'");
    }
  } else {
    fail(errc::invalid_config, "embedding mode must be 'auto' or 'fixed'");
  }
  out.fixed.m = get_int(obj, "m", out.fixed.m);
  out.fixed.tau = get_int(obj, "tau", out.fixed.tau);
  out.max_tau = get_int(obj, "max_tau", out.max_tau);
  out.max_m = get_int(obj, "max_m", out.max_m);
  out.mi_bins = get_int(obj, "mi_bins", out.mi_bins);
  out.fnn.rtol = get_number(obj, "fnn_rtol", out.fnn.rtol);
  out.fnn.atol = get_number(obj, "fnn_atol", out.fnn.atol);
  out.fnn.threshold = get_number(obj, "fnn_threshold", out.fnn.threshold);
}

void parse_search_space(const json& obj, SearchSpace& out) {
  reject_unknown_keys(obj, "search_space",
                      {"c_min", "c_max", "gamma_min", "gamma_max", "epsilon_min",
                       "epsilon_max"});
  out.lower[0] = get_number(obj, "c_min", out.lower[0]);
  out.upper[0] = get_number(obj, "c_max", out.upper[0]);
  out.lower[1] = get_number(obj, "gamma_min", out.lower[1]);
  out.upper[1] = get_number(obj, "gamma_max", out.upper[1]);
  out.lower[2] = get_number(obj, "epsilon_min", out.lower[2]);
  out.upper[2] = get_number(obj, "epsilon_max", out.upper[2]);
}

void parse_optimizer(const json& obj, ExperimentConfig& out) {
  reject_unknown_keys(obj, "optimizer",
                      {"algorithm", "population", "max_iterations", "switch_probability",
                       "sensory_modality", "power_exponent", "stimulus", "log_scale"});
  out.algorithm = algorithm_from_string(get_string(obj, "algorithm", "boa"));
  out.optimizer.population = get_int(obj, "population", out.optimizer.population);
  out.optimizer.max_iterations = get_int(obj, "max_iterations", out.optimizer.max_iterations);
  out.optimizer.switch_probability =
      get_number(obj, "switch_probability", out.optimizer.switch_probability);
  out.optimizer.sensory_modality =
      get_number(obj, "sensory_modality", out.optimizer.sensory_modality);
  out.optimizer.power_exponent =
      get_number(obj, "power_exponent", out.optimizer.power_exponent);
  const std::string stim = get_string(obj, "stimulus", "inverse_fitness");
  if (stim == "inverse_fitness") {
    out.optimizer.stimulus = StimulusMap::inverse_fitness;
  } else if (stim == "absolute_fitness") {
    out.optimizer.stimulus = StimulusMap::absolute_fitness;
  } else {
    fail(errc::invalid_config, "stimulus must be 'inverse_fitness' or 'absolute_fitness'");
  }
  out.log_scale_search = get_bool(obj, "log_scale", out.log_scale_search);
}

void parse_solver(const json& obj, SvrTrainControl& out) {
  reject_unknown_keys(obj, "solver", {"tol", "max_passes"});
  out.tol = get_number(obj, "tol", out.tol);
  if (obj.contains("max_passes")) {
    if (!obj["max_passes"].is_number_integer()) {
      fail(errc::invalid_config, "'max_passes' must be an integer");
    }
    out.max_passes = obj["max_passes"].get<long long>();
  }
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(errc::parse_error, std::string("config is not valid JSON: ") + e.what());
  }
  if (!root.is_object()) fail(errc::invalid_config, "config root must be an object");

  reject_unknown_keys(root, "config",
                      {"embedding", "train_fraction", "search_space", "optimizer",
                       "fitness_target", "fit_scaler_on_train_only", "seed", "solver"});

  ExperimentConfig out;
  if (root.contains("embedding")) parse_embedding(root["embedding"], out.embedding);
  out.train_fraction = get_number(root, "train_fraction", out.train_fraction);
  if (root.contains("search_space")) parse_search_space(root["search_space"], out.search_space);
  if (root.contains("optimizer")) parse_optimizer(root["optimizer"], out);
  const std::string target = get_string(root, "fitness_target", "test");
  if (target == "test") {
    out.fitness_target = FitnessTarget::test;
  } else if (target == "validation") {
    out.fitness_target = FitnessTarget::validation;
  } else {
    fail(errc::invalid_config, "fitness_target must be 'test' or 'validation'");
  }
  out.fit_scaler_on_train_only =
      get_bool(root, "fit_scaler_on_train_only", out.fit_scaler_on_train_only);
  if (root.contains("seed")) {
    if (!root["seed"].is_number_integer()) fail(errc::invalid_config, "'seed' must be an integer");
    out.seed = root["seed"].get<std::uint64_t>();
  }
  if (root.contains("solver")) parse_solver(root["solver"], out.solver);
  return out;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(errc::io_error, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string config_to_json(const ExperimentConfig& config) {
  json root;
  json embedding;
  embedding["mode"] = config.embedding.auto_select ? "auto" : "fixed";
  if (config.embedding.auto_select) {
    embedding["max_tau"] = config.embedding.max_tau;
    embedding["max_m"] = config.embedding.max_m;
    embedding["mi_bins"] = config.embedding.mi_bins;
    embedding["fnn_rtol"] = config.embedding.fnn.rtol;
    embedding["fnn_atol"] = config.embedding.fnn.atol;
    embedding["fnn_threshold"] = config.embedding.fnn.threshold;
  } else {
    embedding["m"] = config.embedding.fixed.m;
    embedding["tau"] = config.embedding.fixed.tau;
  }
  root["embedding"] = embedding;
  root["train_fraction"] = config.train_fraction;
  root["search_space"] = {{"c_min", config.search_space.lower[0]},
                          {"c_max", config.search_space.upper[0]},
                          {"gamma_min", config.search_space.lower[1]},
                          {"gamma_max", config.search_space.upper[1]},
                          {"epsilon_min", config.search_space.lower[2]},
                          {"epsilon_max", config.search_space.upper[2]}};
  root["optimizer"] = {
      {"algorithm", algorithm_name(config.algorithm)},
      {"population", config.optimizer.population},
      {"max_iterations", config.optimizer.max_iterations},
      {"switch_probability", config.optimizer.switch_probability},
      {"sensory_modality", config.optimizer.sensory_modality},
      {"power_exponent", config.optimizer.power_exponent},
      {"stimulus", config.optimizer.stimulus == StimulusMap::inverse_fitness
                       ? "inverse_fitness"
                       : "absolute_fitness"},
      {"log_scale", config.log_scale_search}};
  root["fitness_target"] =
      config.fitness_target == FitnessTarget::test ? "test" : "validation";
  root["fit_scaler_on_train_only"] = config.fit_scaler_on_train_only;
  root["seed"] = config.seed;
  root["solver"] = {{"tol", config.solver.tol}, {"max_passes", config.solver.max_passes}};
  return root.dump(2);
}

}  // namespace svrcast
