#pragma once

#include <span>
#include <vector>

#include "aif/config.hpp"
#include "aif/math.hpp"
#include "aif/model.hpp"

namespace aif {

// Beliefs over hidden states for each time step of an episode.
using BeliefTrack = std::vector<SimplexVector>;

BeliefTrack uniform_track(int num_steps, int num_states);

// Log-domain views of the model, computed once per episode.
struct ModelLogs {
  Matrix likelihood;               // ln A, or E[ln A] when A is learned
  std::vector<Matrix> transition;  // ln B per action
  Vector prior;                    // ln D
};

ModelLogs make_logs(const Model& model);

// Time steps [begin, end) of a belief chain. Beliefs before `begin` stay fixed
// and provide the forward message into `begin`; nothing after `end` is seen.
struct ChainSegment {
  std::span<const int> actions;       // actions[t] drives the transition t -> t + 1
  std::span<const int> observations;  // observed outcomes for t < observations.size()
  int begin = 0;
  int end = 0;
};

// One ascending pass of coordinate updates over the segment.
void vmp_sweep(BeliefTrack& track, const ChainSegment& seg, const ModelLogs& logs, UpdateRule rule);

// Free energy contribution of the segment's time steps, including the
// transition from the fixed belief at begin - 1.
double segment_free_energy(const BeliefTrack& track, const ChainSegment& seg, const ModelLogs& logs);

// Runs `sweeps` passes over the whole chain of one policy and returns F.
double infer_policy(BeliefTrack& track, std::span<const int> policy, std::span<const int> observations,
                    const ModelLogs& logs, int sweeps, UpdateRule rule);

struct FeRecord {
  std::vector<double> policy_fe;
  double marginal = 0.0;  // expected F under q_pi plus any parameter KL terms
  double kl_A = 0.0;
  double kl_B = 0.0;
};

double marginal_free_energy(const SimplexVector& q_pi, std::span<const double> policy_fe);

}  // namespace aif
