#include <benchmark/benchmark.h>

#include "aif/agent.hpp"
#include "aif/planning.hpp"

namespace {

using namespace aif;

Config config_for(LayoutId layout, AgentKind kind) {
  Config c;
  c.env_layout = layout;
  c.agent_kind = kind;
  c.num_steps = make_layout(layout).episode_length;
  c.num_policies = 0;
  return c;
}

void BM_VmpSweep(benchmark::State& state) {
  const Config cfg = config_for(LayoutId::gridw9, AgentKind::unaware);
  const Layout layout = make_layout(cfg.env_layout);
  const Model model = init_model(cfg, layout, 1);
  const ModelLogs logs = make_logs(model);
  const std::vector<int> obs{layout.start_tile, layout.start_tile};
  const Policy& policy = model.policies[7];
  BeliefTrack track = uniform_track(model.num_steps, model.num_states());
  const ChainSegment seg{policy, obs, 0, model.num_steps};
  for (auto _ : state) {
    vmp_sweep(track, seg, logs, UpdateRule::fixed_point);
    benchmark::DoNotOptimize(track);
  }
}
BENCHMARK(BM_VmpSweep);

void BM_TotalEfe(benchmark::State& state) {
  const Config cfg = config_for(LayoutId::gridw9, AgentKind::unaware);
  const Model model = init_model(cfg, make_layout(cfg.env_layout), 1);
  const EfeCache cache = make_efe_cache(model);
  const BeliefTrack track = uniform_track(model.num_steps, model.num_states());
  for (auto _ : state) benchmark::DoNotOptimize(total_efe(track, model.policies[7], 1, model, cache));
}
BENCHMARK(BM_TotalEfe);

void BM_Episode(benchmark::State& state) {
  const auto layout_id = static_cast<LayoutId>(state.range(0));
  const auto kind = static_cast<AgentKind>(state.range(1));
  const Config cfg = config_for(layout_id, kind);
  const Layout layout = make_layout(layout_id);
  Agent agent(cfg, init_model(cfg, layout, 3), 3);
  Environment env(layout, 3);
  for (auto _ : state) benchmark::DoNotOptimize(agent.run_episode(env));
}
BENCHMARK(BM_Episode)
    ->ArgNames({"layout", "kind"})
    ->Args({static_cast<int>(LayoutId::tmaze4), static_cast<int>(AgentKind::unaware)})
    ->Args({static_cast<int>(LayoutId::tmaze4), static_cast<int>(AgentKind::aware)})
    ->Args({static_cast<int>(LayoutId::gridw9), static_cast<int>(AgentKind::unaware)})
    ->Args({static_cast<int>(LayoutId::gridw9), static_cast<int>(AgentKind::aware)})
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
