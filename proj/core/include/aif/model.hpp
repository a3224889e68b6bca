#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aif/config.hpp"
#include "aif/environment.hpp"
#include "aif/math.hpp"

namespace aif {

// One action per transition; a policy for T observations holds T - 1 actions.
using Policy = std::vector<int>;

// All action sequences of the given length in lexicographic order, truncated
// to the first `limit` entries when a limit is given.
std::vector<Policy> enumerate_policies(int num_actions, int horizon, std::optional<long> limit = std::nullopt);

// Softmax of a vector that is `precision` at the goal and 0 elsewhere.
SimplexVector preference_vector(int num_states, int goal, double precision);

struct Model {
  Matrix A;                                  // observations x states
  DirichletCounts alpha_prior;
  DirichletCounts alpha;                     // current emission counts
  std::vector<DirichletCounts> beta_prior;   // one per action
  std::vector<DirichletCounts> beta;         // current transition counts
  std::vector<Matrix> B;                     // normalized beta, next x current
  SimplexVector D;
  SimplexVector C;
  std::vector<Policy> policies;
  int num_steps = 0;
  bool learn_A = false;
  bool learn_B = false;

  int num_states() const { return static_cast<int>(D.size()); }
  int num_observations() const { return static_cast<int>(A.rows()); }
  int num_actions() const { return static_cast<int>(B.size()); }
  int num_policies() const { return static_cast<int>(policies.size()); }
  int horizon() const { return num_steps - 1; }

  // Recomputes B (and A when it is learned) from the current counts.
  void refresh_from_counts();
};

// Builds the agent's initial model. Transition counts are drawn uniformly from
// [0.1, 1.1) with the given seed; the emission is the diagonal ground truth.
Model init_model(const Config& cfg, const Layout& layout, std::uint64_t seed);

// Same as init_model but with transitions fixed to the layout's ground truth.
Model init_model_with_true_transitions(const Config& cfg, const Layout& layout);

}  // namespace aif
