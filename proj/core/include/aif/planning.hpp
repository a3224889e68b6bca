#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "aif/math.hpp"
#include "aif/model.hpp"
#include "aif/perception.hpp"

namespace aif {

struct EfeBreakdown {
  double risk = 0.0;
  double ambiguity = 0.0;
  double a_novelty = 0.0;
  double b_novelty = 0.0;

  double total() const { return ambiguity - a_novelty + risk - b_novelty; }
  EfeBreakdown& operator+=(const EfeBreakdown& o);
};

// Per-entry novelty weights W = (1/c - 1/column_total) / 2.
Matrix novelty_weights(const DirichletCounts& counts);

// Model-dependent quantities shared by every policy, computed once per episode.
struct EfeCache {
  Vector ambiguity;                // entropy of each column of A
  std::vector<Matrix> transition;  // novelty weights; empty when B is not learned
  Matrix emission;                 // novelty weights; empty when A is not learned
};

EfeCache make_efe_cache(const Model& model);

// Expected free energy terms for arriving at `current` from `previous` via `action`.
EfeBreakdown efe_step(const SimplexVector& previous, const SimplexVector& current, int action, const Model& model,
                      const EfeCache& cache);

// Sum of efe_step over the future time steps tau .. T-1 (0-based) of a track,
// where tau observations have been made.
EfeBreakdown total_efe(const BeliefTrack& track, std::span<const int> actions, int tau, const Model& model,
                       const EfeCache& cache);

// softmax(-G - F) over the policies allowed by `mask`; masked-out entries get 0.
SimplexVector policy_posterior(std::span<const double> efe, std::span<const double> fe,
                               std::span<const std::uint8_t> mask = {});

// Belief at step t averaged over policies with weights q_pi.
SimplexVector marginal_state_belief(const SimplexVector& q_pi, std::span<const BeliefTrack> tracks, int t);

}  // namespace aif
