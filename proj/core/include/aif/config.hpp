#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace aif {

enum class LayoutId { tmaze4, gridw9 };
enum class ActionSelection { kd, greedy_max, greedy_sample };
enum class AgentKind { unaware, aware };
enum class UpdateRule { fixed_point, gradient };
enum class PrefLoc { all_goal };

std::string_view to_string(LayoutId v);
std::string_view to_string(ActionSelection v);
std::string_view to_string(AgentKind v);
std::string_view to_string(UpdateRule v);
std::string_view to_string(PrefLoc v);

// Each parser throws std::invalid_argument for unknown names.
LayoutId parse_layout(std::string_view s);
ActionSelection parse_action_selection(std::string_view s);
AgentKind parse_agent_kind(std::string_view s);
UpdateRule parse_update_rule(std::string_view s);
PrefLoc parse_pref_loc(std::string_view s);

struct Config {
  std::string exp_name = "aif_paths";
  LayoutId env_layout = LayoutId::tmaze4;
  int num_runs = 10;
  int num_episodes = 100;
  int num_steps = 4;
  int inf_steps = 10;
  // 0 means the full product set of action sequences.
  long num_policies = 0;
  ActionSelection action_selection = ActionSelection::kd;
  bool learn_B = true;
  bool learn_A = false;
  PrefLoc pref_loc = PrefLoc::all_goal;
  double pref_precision = 4.0;
  AgentKind agent_kind = AgentKind::unaware;
  UpdateRule update_rule = UpdateRule::fixed_point;
  std::uint64_t seed = 0;
  std::string out_dir = "results";

  int horizon() const { return num_steps - 1; }

  friend bool operator==(const Config&, const Config&) = default;
};

// Number of action sequences of length num_steps - 1 over num_actions actions.
long full_policy_count(int num_actions, int num_steps);

// Throws std::invalid_argument naming the offending field.
void validate(const Config& cfg, int num_actions);

}  // namespace aif
