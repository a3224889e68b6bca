#include <gtest/gtest.h>

#include <algorithm>

#include "aif/agent.hpp"

namespace aif {
namespace {

Config tmaze(AgentKind kind) {
  Config c;
  c.agent_kind = kind;
  c.num_runs = 2;
  c.num_episodes = 3;
  return c;
}

bool same_trace(const EpisodeTrace& a, const EpisodeTrace& b) {
  if (a.tiles != b.tiles || a.actions != b.actions || a.success != b.success || a.steps.size() != b.steps.size()) return false;
  for (std::size_t s = 0; s < a.steps.size(); ++s) {
    if (a.steps[s].fe.policy_fe != b.steps[s].fe.policy_fe || a.steps[s].q_pi.probs() != b.steps[s].q_pi.probs()) return false;
    if (a.steps[s].fe.marginal != b.steps[s].fe.marginal) return false;
  }
  return true;
}

TEST(Agent, GroundTruthTransitionsSolveTheTmazeAtOnce) {
  const Layout l = make_layout(LayoutId::tmaze4);
  for (AgentKind kind : {AgentKind::unaware, AgentKind::aware}) {
    const Config c = tmaze(kind);
    Agent agent(c, init_model_with_true_transitions(c, l), 0);
    Environment env(l, 0);
    const EpisodeTrace tr = agent.run_episode(env);
    EXPECT_TRUE(tr.success) << to_string(kind);
    EXPECT_EQ(tr.actions, (std::vector<int>{kUp, kUp, kLeft}));
  }
}

TEST(Agent, TraceShape) {
  const Layout l = make_layout(LayoutId::tmaze4);
  const Config c = tmaze(AgentKind::unaware);
  Agent agent(c, init_model(c, l, 1), 1);
  Environment env(l, 1);
  const EpisodeTrace tr = agent.run_episode(env);
  EXPECT_EQ(tr.observations.size(), 4u);
  EXPECT_EQ(tr.actions.size(), 3u);
  EXPECT_EQ(tr.steps.size(), 4u);
  EXPECT_EQ(tr.steps.back().action, -1);
  for (const auto& s : tr.steps) {
    EXPECT_NEAR(s.q_pi.probs().sum(), 1.0, 1e-12);
    EXPECT_EQ(s.fe.policy_fe.size(), 64u);
  }
  for (const auto& e : tr.steps.back().efe) EXPECT_EQ(e.total(), 0.0);
}

TEST(Agent, EnvironmentMismatchThrows) {
  const Config c = tmaze(AgentKind::unaware);
  Agent agent(c, init_model(c, make_layout(LayoutId::tmaze4), 1), 1);
  Environment env(make_layout(LayoutId::gridw9), 1);
  EXPECT_THROW(agent.run_episode(env), std::invalid_argument);
}

TEST(Agent, KindsAgreeAtTheFirstStep) {
  for (LayoutId id : {LayoutId::tmaze4, LayoutId::gridw9}) {
    Config u = tmaze(AgentKind::unaware);
    u.env_layout = id;
    u.num_steps = make_layout(id).episode_length;
    Config a = u;
    a.agent_kind = AgentKind::aware;
    for (int run = 0; run < 3; ++run) {
      const Layout l = make_layout(id);
      Agent ua(u, init_model(u, l, run_seed(u, run)), run_seed(u, run));
      Agent aa(a, init_model(a, l, run_seed(a, run)), run_seed(a, run));
      Environment e1(l, 5), e2(l, 5);
      const auto t1 = ua.run_episode(e1), t2 = aa.run_episode(e2);
      EXPECT_LE((t1.steps[0].q_pi.probs() - t2.steps[0].q_pi.probs()).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Agent, AwarePruningKeepsPrefixConsistentPolicies) {
  const Layout l = make_layout(LayoutId::tmaze4);
  const Config c = tmaze(AgentKind::aware);
  Agent agent(c, init_model(c, l, 4), 4);
  Environment env(l, 4);
  const EpisodeTrace tr = agent.run_episode(env);
  const auto& pols = agent.model().policies;
  for (std::size_t s = 0; s < tr.steps.size(); ++s) {
    const auto& q = tr.steps[s].q_pi;
    int alive = 0;
    for (std::size_t k = 0; k < pols.size(); ++k) {
      const bool consistent = std::equal(tr.actions.begin(), tr.actions.begin() + static_cast<std::ptrdiff_t>(std::min(s, tr.actions.size())), pols[k].begin());
      if (consistent) {
        ++alive;
        EXPECT_GT(q[static_cast<Index>(k)], 0.0);
      } else {
        EXPECT_EQ(q[static_cast<Index>(k)], 0.0);
      }
    }
    const int expected[] = {64, 16, 4, 1};
    EXPECT_EQ(alive, expected[s]);
    EXPECT_NEAR(q.probs().sum(), 1.0, 1e-12);
  }
  // Every policy shares the executed past at the end, so their F coincide.
  const auto& fe = tr.steps.back().fe.policy_fe;
  EXPECT_LE(*std::max_element(fe.begin(), fe.end()) - *std::min_element(fe.begin(), fe.end()), 1e-9);
}

TEST(Agent, UnawareAgentWeighsEveryPolicy) {
  const Layout l = make_layout(LayoutId::tmaze4);
  const Config c = tmaze(AgentKind::unaware);
  Agent agent(c, init_model(c, l, 2), 2);
  Environment env(l, 2);
  const EpisodeTrace tr = agent.run_episode(env);
  for (const auto& s : tr.steps) EXPECT_GT(s.q_pi.probs().minCoeff(), 0.0);
}

TEST(Agent, UnawareExecutedPolicyExplainsADeterministicEpisodeBest) {
  for (LayoutId id : {LayoutId::tmaze4, LayoutId::gridw9}) {
    Config c = tmaze(AgentKind::unaware);
    c.env_layout = id;
    c.num_steps = make_layout(id).episode_length;
    c.action_selection = ActionSelection::greedy_sample;
    const Layout l = make_layout(id);
    Agent agent(c, init_model_with_true_transitions(c, l), 9);
    Environment env(l, 9);
    for (int e = 0; e < 5; ++e) {
      const EpisodeTrace tr = agent.run_episode(env);
      const auto& pols = agent.model().policies;
      const auto& fe = tr.steps.back().fe.policy_fe;
      const auto executed = std::find(pols.begin(), pols.end(), tr.actions) - pols.begin();
      EXPECT_LE(fe[static_cast<std::size_t>(executed)], *std::min_element(fe.begin(), fe.end()) + 1e-9);
    }
  }
}

TEST(Agent, LearningConservesMassAndKeepsModelValid) {
  const Layout l = make_layout(LayoutId::tmaze4);
  for (AgentKind kind : {AgentKind::unaware, AgentKind::aware}) {
    Config c = tmaze(kind);
    c.learn_A = true;
    Agent agent(c, init_model(c, l, 6), 6);
    Environment env(l, 6);
    for (int e = 0; e < 10; ++e) {
      const Model before = agent.model();
      agent.run_episode(env);
      const Model& after = agent.model();
      double delta_beta = 0.0;
      for (std::size_t a = 0; a < after.beta.size(); ++a) {
        delta_beta += after.beta[a].total() - before.beta[a].total();
        EXPECT_GE((after.beta[a].counts() - before.beta[a].counts()).minCoeff(), 0.0);
        for (Index j = 0; j < after.B[a].cols(); ++j) EXPECT_NEAR(after.B[a].col(j).sum(), 1.0, 1e-12);
      }
      EXPECT_NEAR(delta_beta, 3.0, 1e-9);
      EXPECT_NEAR(after.alpha.total() - before.alpha.total(), 4.0, 1e-9);
      for (Index j = 0; j < after.A.cols(); ++j) EXPECT_NEAR(after.A.col(j).sum(), 1.0, 1e-12);
    }
  }
}

TEST(Agent, FinalStepCarriesTheParameterKl) {
  const Layout l = make_layout(LayoutId::tmaze4);
  const Config c = tmaze(AgentKind::aware);
  Agent agent(c, init_model(c, l, 3), 3);
  Environment env(l, 3);
  const EpisodeTrace tr = agent.run_episode(env);
  const auto& last = tr.steps.back();
  EXPECT_GT(last.fe.kl_B, 0.0);
  EXPECT_EQ(last.fe.kl_A, 0.0);
  EXPECT_NEAR(last.fe.marginal, marginal_free_energy(last.q_pi, last.fe.policy_fe) + last.fe.kl_B, 1e-9);
}

TEST(Experiment, DeterministicAndThreadIndependent) {
  for (AgentKind kind : {AgentKind::unaware, AgentKind::aware}) {
    Config c = tmaze(kind);
    c.num_runs = 3;
    const auto a = run_experiment(c, 1);
    const auto b = run_experiment(c, 3);
    ASSERT_EQ(a.runs.size(), 3u);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t e = 0; e < a.runs[r].episodes.size(); ++e)
        EXPECT_TRUE(same_trace(a.runs[r].episodes[e], b.runs[r].episodes[e]));
  }
}

TEST(Experiment, SingleRunEqualsRunSingle) {
  Config c = tmaze(AgentKind::unaware);
  c.num_runs = 1;
  const auto all = run_experiment(c);
  const auto one = run_single(c, make_layout(c.env_layout), 0);
  ASSERT_EQ(all.runs.size(), 1u);
  for (std::size_t e = 0; e < one.episodes.size(); ++e) EXPECT_TRUE(same_trace(all.runs[0].episodes[e], one.episodes[e]));
}

TEST(Experiment, RunSeedsAreMasterPlusIndex) {
  Config c;
  c.seed = 100;
  EXPECT_EQ(run_seed(c, 0), 100u);
  EXPECT_EQ(run_seed(c, 7), 107u);
}

}  // namespace
}  // namespace aif
