#include <fmt/format.h>

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "aif/agent.hpp"
#include "aif/harness/charts.hpp"
#include "aif/harness/cli.hpp"
#include "aif/harness/metrics.hpp"

namespace {

int run(const aif::harness::RunCommand& cmd) {
  const aif::Config& cfg = cmd.config;
  const auto dir = aif::harness::run_directory(cfg);
  const aif::ExperimentResult result = aif::run_experiment(cfg, cmd.threads);
  const auto manifest = aif::harness::write_metrics(result, dir);

  double last_quarter = 0.0;
  int counted = 0;
  for (const auto& r : result.runs) {
    for (std::size_t e = r.episodes.size() * 3 / 4; e < r.episodes.size(); ++e, ++counted) {
      last_quarter += r.episodes[e].success ? 1.0 : 0.0;
    }
  }
  fmt::print("{} {}: {} runs x {} episodes, success over last quarter {:.3f}\n", aif::to_string(cfg.agent_kind),
             aif::to_string(cfg.env_layout), cfg.num_runs, cfg.num_episodes, counted ? last_quarter / counted : 0.0);
  fmt::print("wrote {} files under {}\n", manifest.files.size() + 1, dir.string());
  if (cmd.charts) {
    const auto charts = aif::harness::emit_charts(dir);
    fmt::print("wrote {} charts under {}\n", charts.size(), (dir / "charts").string());
  }
  return 0;
}

int vis(const aif::harness::VisCommand& cmd) {
  const auto charts = aif::harness::emit_charts(cmd.run_dir, cmd.selection);
  for (const auto& c : charts) fmt::print("{}\n", c.string());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    const auto command = aif::harness::parse_cli(std::vector<std::string>(argv + 1, argv + argc));
    if (const auto* r = std::get_if<aif::harness::RunCommand>(&command)) return run(*r);
    return vis(std::get<aif::harness::VisCommand>(command));
  } catch (const aif::harness::CliExit& e) {
    std::fputs((e.text + "\n").c_str(), e.code == 0 ? stdout : stderr);
    return e.code;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
}
