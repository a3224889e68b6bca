#pragma once

#include <span>

#include "aif/config.hpp"
#include "aif/model.hpp"
#include "aif/perception.hpp"

namespace aif {

// What one finished episode leaves behind for parameter learning.
struct EpisodeEvidence {
  std::span<const int> observations;       // T outcomes
  std::span<const int> executed_actions;   // T - 1 actions
  const SimplexVector* q_pi = nullptr;     // final policy posterior
  std::span<const BeliefTrack> policy_tracks;  // per-policy beliefs (unaware agents)
  const BeliefTrack* executed_track = nullptr; // beliefs under the executed actions (aware agents)
};

// alpha[o_t, :] += belief at t, for every step of the episode.
void update_alpha(Model& model, std::span<const int> observations, const BeliefTrack& state_beliefs);

// beta^a += sum over policies with action a at t-1 of q_k s_t s_{t-1}^T.
void update_beta_from_policies(Model& model, const SimplexVector& q_pi, std::span<const BeliefTrack> tracks);

// beta^{a_{t-1}} += s_t s_{t-1}^T along the executed actions.
void update_beta_from_actions(Model& model, std::span<const int> executed_actions, const BeliefTrack& track);

// Applies the kind-specific updates enabled in the model, then refreshes A and B.
void learn_from_episode(Model& model, const EpisodeEvidence& evidence, AgentKind kind);

}  // namespace aif
