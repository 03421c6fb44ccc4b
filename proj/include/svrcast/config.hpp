#ifndef SVRCAST_CONFIG_HPP
#define SVRCAST_CONFIG_HPP

#include <filesystem>
#include <string>

#include "svrcast/pipeline.hpp"

namespace svrcast {

// JSON config mirroring ExperimentConfig one key per field. Every key is
// optional; unknown keys are rejected.
ExperimentConfig parse_config(const std::string& json_text);
ExperimentConfig load_config(const std::filesystem::path& path);

// Effective-config snapshot, embeddable in run manifests.
std::string config_to_json(const ExperimentConfig& config);

}  // namespace svrcast

#endif  // SVRCAST_CONFIG_HPP
