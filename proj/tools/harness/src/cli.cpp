#include "aif/harness/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <memory>

#include "aif/environment.hpp"

namespace aif::harness {
namespace {

constexpr const char* kGymId = "gridworld-v1";

// Raw flag values shared by the two run subcommands.
struct RunFlags {
  std::string exp_name;
  std::string gym_id = kGymId;
  std::string env_layout = "tmaze4";
  int num_runs = 10;
  int num_episodes = 100;
  std::optional<int> num_steps;
  int inf_steps = 10;
  long num_policies = 0;
  std::string action_selection = "kd";
  bool learn_B = true;
  bool learn_A = false;
  std::string pref_loc = "all_goal";
  double pref_precision = 4.0;
  std::string update_rule = "fixed_point";
  std::uint64_t seed = 0;
  std::string out_dir = "results";
  unsigned threads = 0;
  bool no_charts = false;
};

RunFlags named(std::string exp_name) {
  RunFlags f;
  f.exp_name = std::move(exp_name);
  return f;
}

struct VisFlags {
  std::string run_dir;
  std::vector<int> select;
  bool aggregates_only = false;
};

struct Parser {
  CLI::App app{"Discrete active inference agents in small grid worlds", "aif"};
  CLI::App* paths = nullptr;
  CLI::App* plans = nullptr;
  CLI::App* vis = nullptr;
  RunFlags paths_flags = named("aif_paths");
  RunFlags plans_flags = named("aif_plans");
  VisFlags vis_flags;

  Parser() {
    app.require_subcommand(1);
    paths = app.add_subcommand("paths", "train action-unaware agents");
    plans = app.add_subcommand("plans", "train action-aware agents (policies pruned by executed prefix)");
    vis = app.add_subcommand("vis", "draw charts from a finished run directory");
    add_run_flags(*paths, paths_flags);
    add_run_flags(*plans, plans_flags);
    vis->add_option("--run_dir", vis_flags.run_dir, "directory holding manifest.json and metrics/")->required();
    vis->add_option("--select", vis_flags.select, "policy indices to draw (default: optimal plus fillers)");
    vis->add_flag("--aggregates_only", vis_flags.aggregates_only, "draw no per-policy lines");
  }

  static void add_run_flags(CLI::App& cmd, RunFlags& f) {
    cmd.add_option("--exp_name", f.exp_name, "experiment name")->capture_default_str();
    cmd.add_option("--gym_id", f.gym_id, "environment family")->capture_default_str();
    cmd.add_option("--env_layout", f.env_layout, "tmaze4 | gridw9")->capture_default_str();
    cmd.add_option("--num_runs", f.num_runs, "independent agents")->capture_default_str();
    cmd.add_option("--num_episodes", f.num_episodes, "episodes per agent")->capture_default_str();
    cmd.add_option("--num_steps", f.num_steps, "observations per episode (default: layout's)");
    cmd.add_option("--inf_steps", f.inf_steps, "belief update sweeps per step")->capture_default_str();
    cmd.add_option("--num_policies", f.num_policies, "policies to consider (0: all)")->capture_default_str();
    cmd.add_option("--action_selection", f.action_selection, "kd | greedy_max | greedy_sample")->capture_default_str();
    cmd.add_flag("--learn_B,!--no_learn_B", f.learn_B, "learn transition counts (-lB)");
    cmd.add_flag("--learn_A,!--no_learn_A", f.learn_A, "learn emission counts (-lA)");
    cmd.add_option("--pref_loc", f.pref_loc, "preference placement")->capture_default_str();
    cmd.add_option("--pref_precision", f.pref_precision, "log-preference of the goal")->capture_default_str();
    cmd.add_option("--update_rule", f.update_rule, "fixed_point | gradient")->capture_default_str();
    cmd.add_option("--seed", f.seed, "master seed; run r uses seed + r")->capture_default_str();
    cmd.add_option("--out_dir", f.out_dir, "output root")->capture_default_str();
    cmd.add_option("--threads", f.threads, "worker threads (0: hardware)")->capture_default_str();
    cmd.add_flag("--no_charts", f.no_charts, "skip chart emission");
  }
};

template <typename Fn>
auto field(const char* flag, Fn&& fn) {
  try {
    return fn();
  } catch (const std::invalid_argument& e) {
    throw CliExit(2, std::string(flag) + ": " + e.what());
  }
}

RunCommand to_run(const RunFlags& f, AgentKind kind) {
  if (f.gym_id != kGymId) throw CliExit(2, "--gym_id: only '" + std::string(kGymId) + "' is available");
  RunCommand cmd;
  Config& c = cmd.config;
  c.exp_name = f.exp_name;
  c.env_layout = field("--env_layout", [&] { return parse_layout(f.env_layout); });
  c.num_runs = f.num_runs;
  c.num_episodes = f.num_episodes;
  c.num_steps = f.num_steps.value_or(make_layout(c.env_layout).episode_length);
  c.inf_steps = f.inf_steps;
  c.num_policies = f.num_policies;
  c.action_selection = field("--action_selection", [&] { return parse_action_selection(f.action_selection); });
  c.learn_B = f.learn_B;
  c.learn_A = f.learn_A;
  c.pref_loc = field("--pref_loc", [&] { return parse_pref_loc(f.pref_loc); });
  c.pref_precision = f.pref_precision;
  c.agent_kind = kind;
  c.update_rule = field("--update_rule", [&] { return parse_update_rule(f.update_rule); });
  c.seed = f.seed;
  c.out_dir = f.out_dir;
  // validate() prefixes its messages with the field name, which is also the flag name.
  try {
    validate(c, kNumActions);
  } catch (const std::invalid_argument& e) {
    throw CliExit(2, std::string("--") + e.what());
  }
  if (c.num_steps != make_layout(c.env_layout).episode_length) {
    throw CliExit(2, "--num_steps: " + std::string(to_string(c.env_layout)) + " episodes have " +
                         std::to_string(make_layout(c.env_layout).episode_length) + " steps");
  }
  cmd.threads = f.threads;
  cmd.charts = !f.no_charts;
  return cmd;
}

void expand_short_flags(std::vector<std::string>& args) {
  for (auto& a : args) {
    if (a == "-lB") a = "--learn_B";
    if (a == "-lA") a = "--learn_A";
  }
}

}  // namespace

std::string usage() {
  Parser p;
  return p.app.help();
}

Command parse_cli(std::vector<std::string> args) {
  if (args.empty()) throw CliExit(2, usage());
  expand_short_flags(args);
  Parser p;
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    p.app.parse(args);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* sub = p.app.get_subcommands().empty() ? &p.app : p.app.get_subcommands().front();
    throw CliExit(0, sub->help());
  } catch (const CLI::ParseError& e) {
    throw CliExit(2, std::string(e.what()) + "\nRun with --help for usage.");
  }
  if (p.paths->parsed()) return to_run(p.paths_flags, AgentKind::unaware);
  if (p.plans->parsed()) return to_run(p.plans_flags, AgentKind::aware);
  VisCommand vis;
  vis.run_dir = p.vis_flags.run_dir;
  if (p.vis_flags.aggregates_only) {
    vis.selection = std::vector<int>{};
  } else if (!p.vis_flags.select.empty()) {
    vis.selection = p.vis_flags.select;
  }
  return vis;
}

}  // namespace aif::harness
