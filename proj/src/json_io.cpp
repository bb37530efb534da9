#include "idnc/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace idnc::json_io {

using nlohmann::json;

json to_json(const SystemState& state) {
  json has = json::array();
  json p = json::array();
  for (const auto& u : state.users()) {
    json ids = json::array();
    for (MessageId m = 1; m <= state.num_messages(); ++m)
      if (u.has_message(m)) ids.push_back(m);
    has.push_back(ids);
    p.push_back(u.erasure_prob());
  }
  return json{{"M", state.num_messages()}, {"has", has}, {"p", p}};
}

SystemState system_state_from_json(const json& j) {
  const int m = j.at("M").get<int>();
  const auto has = j.at("has").get<std::vector<std::vector<MessageId>>>();
  const auto p = j.at("p").get<std::vector<double>>();
  return new_system(m, has, p);
}

json to_json(const harness::ExperimentConfig& config) {
  json j{{"U", config.num_users},
         {"M", config.num_messages},
         {"P", config.avg_erasure_prob},
         {"erasure_mode", std::string(channel::to_string(config.erasure_mode))},
         {"policies", config.policies},
         {"iterations", config.iterations},
         {"master_seed", config.master_seed},
         {"slot_cap", config.slot_cap}};
  if (config.scenario) {
    j["scenario"] = json{{"M", config.scenario->num_messages},
                         {"has", config.scenario->has_sets},
                         {"p", config.scenario->erasure_probs}};
  }
  return j;
}

harness::ExperimentConfig config_from_json(const json& j) {
  harness::ExperimentConfig config;
  if (j.contains("U")) config.num_users = j.at("U").get<int>();
  if (j.contains("M")) config.num_messages = j.at("M").get<int>();
  if (j.contains("P")) config.avg_erasure_prob = j.at("P").get<double>();
  if (j.contains("erasure_mode"))
    config.erasure_mode = channel::erasure_mode_from_string(j.at("erasure_mode").get<std::string>());
  if (j.contains("policies")) config.policies = j.at("policies").get<std::vector<std::string>>();
  if (j.contains("iterations")) config.iterations = j.at("iterations").get<int>();
  if (j.contains("master_seed")) config.master_seed = j.at("master_seed").get<std::uint64_t>();
  if (j.contains("slot_cap")) config.slot_cap = j.at("slot_cap").get<long long>();
  if (j.contains("scenario")) {
    const auto& s = j.at("scenario");
    harness::ScenarioSpec spec;
    spec.num_messages = s.at("M").get<int>();
    spec.has_sets = s.at("has").get<std::vector<std::vector<MessageId>>>();
    spec.erasure_probs = s.at("p").get<std::vector<double>>();
    config.scenario = std::move(spec);
  }
  config.validate();
  return config;
}

harness::ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("bad JSON in " + path + ": " + e.what());
  }
  return config_from_json(j);
}

json to_json(const harness::RunRecord& record) {
  json j{{"policy", record.policy},
         {"master_seed", record.master_seed},
         {"episode_index", record.episode_index},
         {"overall_delivery_time", record.overall_delivery_time},
         {"completion_time", record.completion_time},
         {"slots_used", record.slots_used},
         {"truncated", record.truncated},
         {"per_user_delivery", record.per_user_delivery},
         {"per_user_delay", record.per_user_delay},
         {"erasure_probs", record.erasure_probs}};
  if (!record.trace.empty()) {
    json trace = json::array();
    for (const auto& slot : record.trace) {
      json erased = json::array();
      for (bool e : slot.erased) erased.push_back(e);
      trace.push_back(json{{"combination", slot.combo.messages()},
                           {"erased", erased},
                           {"delivery_increments", slot.delivery_increments}});
    }
    j["trace"] = trace;
  }
  return j;
}

}  // namespace idnc::json_io
