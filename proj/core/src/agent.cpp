#include "aif/agent.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>

#include "aif/action_selection.hpp"
#include "aif/learning.hpp"

namespace aif {
namespace {

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t stream_id) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream_id)};
  return std::mt19937_64(seq);
}

double transition_kl(const Model& after, const std::vector<DirichletCounts>& before) {
  double kl = 0.0;
  for (std::size_t a = 0; a < before.size(); ++a) kl += kl_dirichlet(after.beta[a], before[a]);
  return kl;
}

}  // namespace

Agent::Agent(const Config& cfg, Model model, std::uint64_t seed)
    : kind_(cfg.agent_kind),
      selection_(cfg.action_selection),
      rule_(cfg.update_rule),
      sweeps_(cfg.inf_steps),
      model_(std::move(model)),
      rng_(stream(seed, 2)) {
  if (sweeps_ < 1) throw std::invalid_argument("inf_steps: must be >= 1");
}

void Agent::plan_unaware(int tau, const std::vector<int>& obs, StepRecord& rec) {
  const int steps = model_.num_steps;
  const auto n_pol = model_.policies.size();
  std::vector<double> g(n_pol, 0.0);
  for (std::size_t k = 0; k < n_pol; ++k) {
    const Policy& p = model_.policies[k];
    rec.fe.policy_fe[k] = infer_policy(tracks_[k], p, obs, logs_, sweeps_, rule_);
    if (tau < steps) {
      rec.efe[k] = total_efe(tracks_[k], p, tau, model_, cache_);
      g[k] = rec.efe[k].total();
    }
  }
  rec.q_pi = policy_posterior(g, rec.fe.policy_fe);
}

void Agent::plan_aware(int tau, const std::vector<int>& obs, const std::vector<int>& executed, StepRecord& rec) {
  const int steps = model_.num_steps;
  const auto n_pol = model_.policies.size();
  const auto past = static_cast<std::size_t>(tau);

  // Shared beliefs over the observed steps, conditioned on the executed actions.
  const ChainSegment shared{executed, obs, 0, tau};
  for (int i = 0; i < sweeps_; ++i) vmp_sweep(executed_track_, shared, logs_, rule_);
  const double shared_fe = segment_free_energy(executed_track_, shared, logs_);

  std::vector<double> g(n_pol, 0.0);
  std::vector<std::uint8_t> alive(n_pol, 0);
  // Policies that agree on their remaining actions share one future computation.
  std::map<std::vector<int>, std::size_t> by_suffix;
  std::vector<int> actions(executed);
  for (std::size_t k = 0; k < n_pol; ++k) {
    const Policy& p = model_.policies[k];
    alive[k] = std::equal(executed.begin(), executed.end(), p.begin()) ? 1 : 0;
    std::vector<int> suffix(p.begin() + static_cast<std::ptrdiff_t>(executed.size()), p.end());
    if (auto it = by_suffix.find(suffix); it != by_suffix.end()) {
      const std::size_t rep = it->second;
      tracks_[k] = tracks_[rep];
      rec.fe.policy_fe[k] = rec.fe.policy_fe[rep];
      rec.efe[k] = rec.efe[rep];
      g[k] = g[rep];
      continue;
    }
    BeliefTrack& track = tracks_[k];
    std::copy(executed_track_.begin(), executed_track_.begin() + static_cast<std::ptrdiff_t>(past), track.begin());
    double future_fe = 0.0;
    if (tau < steps) {
      actions.resize(executed.size());
      actions.insert(actions.end(), suffix.begin(), suffix.end());
      const ChainSegment future{actions, obs, tau, steps};
      for (int i = 0; i < sweeps_; ++i) vmp_sweep(track, future, logs_, rule_);
      future_fe = segment_free_energy(track, future, logs_);
      rec.efe[k] = total_efe(track, actions, tau, model_, cache_);
      g[k] = rec.efe[k].total();
    }
    rec.fe.policy_fe[k] = shared_fe + future_fe;
    by_suffix.emplace(std::move(suffix), k);
  }
  rec.q_pi = policy_posterior(g, rec.fe.policy_fe, alive);
}

EpisodeTrace Agent::run_episode(Environment& env) {
  const int steps = model_.num_steps;
  const int n_states = model_.num_states();
  const auto n_pol = model_.policies.size();
  if (env.layout().episode_length != steps || env.layout().num_tiles != n_states) {
    throw std::invalid_argument("run_episode: environment does not match the model");
  }

  logs_ = make_logs(model_);
  cache_ = make_efe_cache(model_);
  tracks_.assign(n_pol, uniform_track(steps, n_states));
  executed_track_ = uniform_track(steps, n_states);

  EpisodeTrace trace;
  trace.observations.push_back(env.reset());
  trace.tiles.push_back(env.tile());

  for (int tau = 1; tau <= steps; ++tau) {
    StepRecord rec;
    rec.step = tau;
    rec.fe.policy_fe.assign(n_pol, 0.0);
    rec.efe.assign(n_pol, EfeBreakdown{});
    if (kind_ == AgentKind::unaware) {
      plan_unaware(tau, trace.observations, rec);
    } else {
      plan_aware(tau, trace.observations, trace.actions, rec);
    }
    rec.fe.marginal = marginal_free_energy(rec.q_pi, rec.fe.policy_fe);
    if (tau < steps) {
      rec.action = select_action(rec.q_pi, model_.policies, tau - 1, model_.num_actions(), selection_, rng_);
      const StepResult r = env.step(rec.action);
      trace.actions.push_back(rec.action);
      trace.observations.push_back(r.observation);
      trace.tiles.push_back(env.tile());
    }
    trace.steps.push_back(std::move(rec));
  }
  trace.success = env.tile() == env.layout().goal_tile;

  const std::vector<DirichletCounts> beta_before = model_.beta;
  const DirichletCounts alpha_before = model_.alpha;
  const StepRecord& last = trace.steps.back();
  EpisodeEvidence ev;
  ev.observations = trace.observations;
  ev.executed_actions = trace.actions;
  ev.q_pi = &last.q_pi;
  ev.policy_tracks = tracks_;
  ev.executed_track = &executed_track_;
  learn_from_episode(model_, ev, kind_);
  trace.alpha_added = model_.alpha.total() - alpha_before.total();
  for (std::size_t a = 0; a < beta_before.size(); ++a) trace.beta_added += model_.beta[a].total() - beta_before[a].total();

  // Parameter terms of the final-step free energy: posterior after this
  // episode against the counts it started from.
  FeRecord& fe = trace.steps.back().fe;
  if (model_.learn_B) fe.kl_B = transition_kl(model_, beta_before);
  if (model_.learn_A) fe.kl_A = kl_dirichlet(model_.alpha, alpha_before);
  fe.marginal += fe.kl_A + fe.kl_B;
  return trace;
}

std::uint64_t run_seed(const Config& cfg, int run) { return cfg.seed + static_cast<std::uint64_t>(run); }

RunResult run_single(const Config& cfg, const Layout& layout, int run) {
  const std::uint64_t seed = run_seed(cfg, run);
  RunResult result;
  result.initial_model = init_model(cfg, layout, seed);
  Agent agent(cfg, result.initial_model, seed);
  std::mt19937_64 env_seeds = stream(seed, 1);
  Environment env(layout, env_seeds());
  result.episodes.reserve(static_cast<std::size_t>(cfg.num_episodes));
  for (int e = 0; e < cfg.num_episodes; ++e) result.episodes.push_back(agent.run_episode(env));
  result.final_model = agent.model();
  return result;
}

ExperimentResult run_experiment(const Config& cfg, unsigned threads) {
  validate(cfg, kNumActions);
  ExperimentResult out;
  out.config = cfg;
  out.layout = make_layout(cfg.env_layout);
  out.runs.resize(static_cast<std::size_t>(cfg.num_runs));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(cfg.num_runs));

  if (threads <= 1) {
    for (int r = 0; r < cfg.num_runs; ++r) out.runs[static_cast<std::size_t>(r)] = run_single(cfg, out.layout, r);
    return out;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (int r = static_cast<int>(w); r < cfg.num_runs; r += static_cast<int>(threads)) {
            out.runs[static_cast<std::size_t>(r)] = run_single(cfg, out.layout, r);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace aif
