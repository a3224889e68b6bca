#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "aif/config.hpp"
#include "aif/environment.hpp"
#include "aif/model.hpp"
#include "aif/perception.hpp"
#include "aif/planning.hpp"

namespace aif {

// Everything captured at one step, after planning and before acting.
struct StepRecord {
  int step = 0;                    // 1-based number of observations so far
  FeRecord fe;
  std::vector<EfeBreakdown> efe;   // all zero at the final step
  SimplexVector q_pi;
  int action = -1;                 // action taken after this step; -1 at the final step
};

struct EpisodeTrace {
  std::vector<int> tiles;          // true tile at every step
  std::vector<int> observations;
  std::vector<int> actions;
  std::vector<StepRecord> steps;
  bool success = false;
  // Pseudo-counts added by this episode's learning phase.
  double alpha_added = 0.0;
  double beta_added = 0.0;
};

class Agent {
 public:
  Agent(const Config& cfg, Model model, std::uint64_t seed);

  // Runs one episode against the environment and learns from it at the end.
  EpisodeTrace run_episode(Environment& env);

  const Model& model() const noexcept { return model_; }
  AgentKind kind() const noexcept { return kind_; }

 private:
  void plan_unaware(int tau, const std::vector<int>& obs, StepRecord& rec);
  void plan_aware(int tau, const std::vector<int>& obs, const std::vector<int>& executed, StepRecord& rec);

  AgentKind kind_;
  ActionSelection selection_;
  UpdateRule rule_;
  int sweeps_;
  Model model_;
  std::mt19937_64 rng_;

  // Per-episode state.
  ModelLogs logs_;
  EfeCache cache_;
  std::vector<BeliefTrack> tracks_;
  BeliefTrack executed_track_;
};

struct RunResult {
  std::vector<EpisodeTrace> episodes;
  Model initial_model;
  Model final_model;
};

struct ExperimentResult {
  Config config;
  Layout layout;
  std::vector<RunResult> runs;
};

// Seed for run r of an experiment: master seed + r.
std::uint64_t run_seed(const Config& cfg, int run);

RunResult run_single(const Config& cfg, const Layout& layout, int run);

// Runs are independent and may execute on several threads; results are
// ordered by run index regardless of scheduling.
ExperimentResult run_experiment(const Config& cfg, unsigned threads = 0);

}  // namespace aif
