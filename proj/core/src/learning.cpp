#include "aif/learning.hpp"

#include <stdexcept>

#include "aif/planning.hpp"

namespace aif {
namespace {

std::vector<Matrix> zero_increments(const Model& model) {
  const int n = model.num_states();
  return std::vector<Matrix>(static_cast<std::size_t>(model.num_actions()), Matrix::Zero(n, n));
}

void add_increments(Model& model, const std::vector<Matrix>& increments) {
  for (std::size_t a = 0; a < increments.size(); ++a) model.beta[a].add(increments[a]);
}

}  // namespace

void update_alpha(Model& model, std::span<const int> observations, const BeliefTrack& state_beliefs) {
  if (observations.size() != state_beliefs.size()) {
    throw std::invalid_argument("update_alpha: one belief per observation required");
  }
  Matrix inc = Matrix::Zero(model.alpha.rows(), model.alpha.cols());
  for (std::size_t t = 0; t < observations.size(); ++t) {
    const int o = observations[t];
    if (o < 0 || o >= inc.rows()) throw std::out_of_range("update_alpha: observation out of range");
    inc.row(o) += state_beliefs[t].probs().transpose();
  }
  model.alpha.add(inc);
}

void update_beta_from_policies(Model& model, const SimplexVector& q_pi, std::span<const BeliefTrack> tracks) {
  if (tracks.size() != model.policies.size() || static_cast<std::size_t>(q_pi.size()) != tracks.size()) {
    throw std::invalid_argument("update_beta: one track and one probability per policy required");
  }
  auto inc = zero_increments(model);
  for (std::size_t k = 0; k < tracks.size(); ++k) {
    const double w = q_pi[static_cast<Index>(k)];
    if (w <= 0.0) continue;
    const BeliefTrack& s = tracks[k];
    const Policy& p = model.policies[k];
    for (std::size_t t = 1; t < s.size(); ++t) {
      inc[static_cast<std::size_t>(p[t - 1])].noalias() += w * s[t].probs() * s[t - 1].probs().transpose();
    }
  }
  add_increments(model, inc);
}

void update_beta_from_actions(Model& model, std::span<const int> executed_actions, const BeliefTrack& track) {
  if (executed_actions.size() + 1 != track.size()) {
    throw std::invalid_argument("update_beta: track must be one longer than the action sequence");
  }
  auto inc = zero_increments(model);
  for (std::size_t t = 1; t < track.size(); ++t) {
    const int a = executed_actions[t - 1];
    if (a < 0 || a >= model.num_actions()) throw std::out_of_range("update_beta: action out of range");
    inc[static_cast<std::size_t>(a)].noalias() += track[t].probs() * track[t - 1].probs().transpose();
  }
  add_increments(model, inc);
}

void learn_from_episode(Model& model, const EpisodeEvidence& ev, AgentKind kind) {
  if (kind == AgentKind::aware) {
    if (ev.executed_track == nullptr) throw std::invalid_argument("learn: aware agent needs the executed track");
    if (model.learn_A) update_alpha(model, ev.observations, *ev.executed_track);
    if (model.learn_B) update_beta_from_actions(model, ev.executed_actions, *ev.executed_track);
  } else {
    if (ev.q_pi == nullptr) throw std::invalid_argument("learn: unaware agent needs q_pi");
    if (model.learn_A) {
      BeliefTrack marginal;
      for (std::size_t t = 0; t < ev.observations.size(); ++t) {
        marginal.push_back(marginal_state_belief(*ev.q_pi, ev.policy_tracks, static_cast<int>(t)));
      }
      update_alpha(model, ev.observations, marginal);
    }
    if (model.learn_B) update_beta_from_policies(model, *ev.q_pi, ev.policy_tracks);
  }
  model.refresh_from_counts();
}

}  // namespace aif
