#pragma once

#include <string>

#include <json.hpp>

#include "idnc/harness.hpp"
#include "idnc/model.hpp"

namespace idnc::json_io {

// Scenario schema: {"M": <int>, "has": [[ids...], ...], "p": [<double>, ...]}
nlohmann::json to_json(const SystemState& state);
SystemState system_state_from_json(const nlohmann::json& j);

nlohmann::json to_json(const harness::ExperimentConfig& config);
harness::ExperimentConfig config_from_json(const nlohmann::json& j);
harness::ExperimentConfig load_config_file(const std::string& path);

nlohmann::json to_json(const harness::RunRecord& record);

}  // namespace idnc::json_io
