#include "aif/harness/config_json.hpp"

#include <json.hpp>

#include <stdexcept>

namespace aif::harness {

using Json = nlohmann::ordered_json;

std::string config_to_json(const Config& c) {
  Json j;
  j["exp_name"] = c.exp_name;
  j["env_layout"] = to_string(c.env_layout);
  j["num_runs"] = c.num_runs;
  j["num_episodes"] = c.num_episodes;
  j["num_steps"] = c.num_steps;
  j["inf_steps"] = c.inf_steps;
  j["num_policies"] = c.num_policies;
  j["action_selection"] = to_string(c.action_selection);
  j["learn_B"] = c.learn_B;
  j["learn_A"] = c.learn_A;
  j["pref_loc"] = to_string(c.pref_loc);
  j["pref_precision"] = c.pref_precision;
  j["agent_kind"] = to_string(c.agent_kind);
  j["update_rule"] = to_string(c.update_rule);
  j["seed"] = c.seed;
  j["out_dir"] = c.out_dir;
  return j.dump(2);
}

Config config_from_json(const std::string& text) {
  const Json j = Json::parse(text);
  try {
    Config c;
    c.exp_name = j.at("exp_name").get<std::string>();
    c.env_layout = parse_layout(j.at("env_layout").get<std::string>());
    c.num_runs = j.at("num_runs").get<int>();
    c.num_episodes = j.at("num_episodes").get<int>();
    c.num_steps = j.at("num_steps").get<int>();
    c.inf_steps = j.at("inf_steps").get<int>();
    c.num_policies = j.at("num_policies").get<long>();
    c.action_selection = parse_action_selection(j.at("action_selection").get<std::string>());
    c.learn_B = j.at("learn_B").get<bool>();
    c.learn_A = j.at("learn_A").get<bool>();
    c.pref_loc = parse_pref_loc(j.at("pref_loc").get<std::string>());
    c.pref_precision = j.at("pref_precision").get<double>();
    c.agent_kind = parse_agent_kind(j.at("agent_kind").get<std::string>());
    c.update_rule = parse_update_rule(j.at("update_rule").get<std::string>());
    c.seed = j.at("seed").get<std::uint64_t>();
    c.out_dir = j.at("out_dir").get<std::string>();
    return c;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("config json: ") + e.what());
  }
}

}  // namespace aif::harness
