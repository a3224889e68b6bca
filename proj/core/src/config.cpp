#include "aif/config.hpp"

#include <array>
#include <limits>
#include <stdexcept>
#include <utility>

namespace aif {
namespace {

template <typename E, std::size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

constexpr NameTable<LayoutId, 2> kLayouts{{{LayoutId::tmaze4, "tmaze4"}, {LayoutId::gridw9, "gridw9"}}};
constexpr NameTable<ActionSelection, 3> kSelections{{{ActionSelection::kd, "kd"},
                                                     {ActionSelection::greedy_max, "greedy_max"},
                                                     {ActionSelection::greedy_sample, "greedy_sample"}}};
constexpr NameTable<AgentKind, 2> kKinds{{{AgentKind::unaware, "unaware"}, {AgentKind::aware, "aware"}}};
constexpr NameTable<UpdateRule, 2> kRules{{{UpdateRule::fixed_point, "fixed_point"},
                                           {UpdateRule::gradient, "gradient"}}};
constexpr NameTable<PrefLoc, 1> kPrefLocs{{{PrefLoc::all_goal, "all_goal"}}};

template <typename E, std::size_t N>
std::string_view name_of(const NameTable<E, N>& table, E v) {
  for (const auto& [e, name] : table)
    if (e == v) return name;
  throw std::logic_error("unnamed enum value");
}

template <typename E, std::size_t N>
E value_of(const NameTable<E, N>& table, std::string_view s, const char* what) {
  std::string valid;
  for (const auto& [e, name] : table) {
    if (name == s) return e;
    valid += valid.empty() ? "" : ", ";
    valid += name;
  }
  throw std::invalid_argument(std::string("unknown ") + what + " '" + std::string(s) + "' (valid: " + valid + ")");
}

}  // namespace

std::string_view to_string(LayoutId v) { return name_of(kLayouts, v); }
std::string_view to_string(ActionSelection v) { return name_of(kSelections, v); }
std::string_view to_string(AgentKind v) { return name_of(kKinds, v); }
std::string_view to_string(UpdateRule v) { return name_of(kRules, v); }
std::string_view to_string(PrefLoc v) { return name_of(kPrefLocs, v); }

LayoutId parse_layout(std::string_view s) { return value_of(kLayouts, s, "env_layout"); }
ActionSelection parse_action_selection(std::string_view s) { return value_of(kSelections, s, "action_selection"); }
AgentKind parse_agent_kind(std::string_view s) { return value_of(kKinds, s, "agent_kind"); }
UpdateRule parse_update_rule(std::string_view s) { return value_of(kRules, s, "update_rule"); }
PrefLoc parse_pref_loc(std::string_view s) { return value_of(kPrefLocs, s, "pref_loc"); }

long full_policy_count(int num_actions, int num_steps) {
  long count = 1;
  for (int i = 0; i + 1 < num_steps; ++i) {
    if (count > std::numeric_limits<long>::max() / num_actions) {
      throw std::invalid_argument("num_steps: policy set too large to enumerate");
    }
    count *= num_actions;
  }
  return count;
}

void validate(const Config& cfg, int num_actions) {
  if (cfg.exp_name.empty()) throw std::invalid_argument("exp_name: must not be empty");
  if (cfg.num_runs < 1) throw std::invalid_argument("num_runs: must be >= 1");
  if (cfg.num_episodes < 1) throw std::invalid_argument("num_episodes: must be >= 1");
  if (cfg.num_steps < 2) throw std::invalid_argument("num_steps: must be >= 2");
  if (cfg.inf_steps < 1) throw std::invalid_argument("inf_steps: must be >= 1");
  if (!(cfg.pref_precision >= 0.0)) throw std::invalid_argument("pref_precision: must be >= 0");
  const long full = full_policy_count(num_actions, cfg.num_steps);
  if (cfg.num_policies < 0 || cfg.num_policies > full) {
    throw std::invalid_argument("num_policies: must be in [0, " + std::to_string(full) + "] (0: all)");
  }
}

}  // namespace aif
