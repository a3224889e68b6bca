#include "aif/model.hpp"

#include <random>
#include <stdexcept>

namespace aif {

std::vector<Policy> enumerate_policies(int num_actions, int horizon, std::optional<long> limit) {
  if (num_actions < 1) throw std::invalid_argument("enumerate_policies: num_actions must be >= 1");
  if (horizon < 1) throw std::invalid_argument("enumerate_policies: horizon must be >= 1");
  const long full = full_policy_count(num_actions, horizon + 1);
  if (limit && (*limit < 1 || *limit > full)) {
    throw std::invalid_argument("enumerate_policies: limit must be in [1, " + std::to_string(full) + "]");
  }
  const long count = limit.value_or(full);
  std::vector<Policy> out;
  out.reserve(static_cast<std::size_t>(count));
  Policy p(static_cast<std::size_t>(horizon), 0);
  for (long k = 0; k < count; ++k) {
    out.push_back(p);
    // Odometer increment, last position fastest.
    for (int i = horizon - 1; i >= 0; --i) {
      auto& digit = p[static_cast<std::size_t>(i)];
      if (++digit < num_actions) break;
      digit = 0;
    }
  }
  return out;
}

SimplexVector preference_vector(int num_states, int goal, double precision) {
  if (goal < 0 || goal >= num_states) throw std::out_of_range("preference_vector: goal out of range");
  Vector logits = Vector::Zero(num_states);
  logits[goal] = precision;
  return softmax(logits);
}

void Model::refresh_from_counts() {
  if (learn_B) {
    for (std::size_t a = 0; a < beta.size(); ++a) B[a] = beta[a].mean();
  }
  if (learn_A) A = alpha.mean();
}

namespace {

Model base_model(const Config& cfg, const Layout& layout) {
  validate(cfg, kNumActions);
  if (cfg.num_steps != layout.episode_length) {
    throw std::invalid_argument("num_steps: layout " + std::string(to_string(layout.id)) + " requires " +
                                std::to_string(layout.episode_length));
  }
  const GroundTruth truth = ground_truth(layout);
  const int n = layout.num_tiles;
  Model m;
  m.num_steps = cfg.num_steps;
  m.learn_A = cfg.learn_A;
  m.learn_B = cfg.learn_B;
  m.alpha_prior = DirichletCounts(truth.emission + Matrix::Constant(n, n, 0.1));
  m.alpha = m.alpha_prior;
  m.A = m.learn_A ? m.alpha.mean() : truth.emission;
  m.D = SimplexVector::one_hot(n, layout.start_tile);
  m.C = preference_vector(n, layout.goal_tile, cfg.pref_precision);
  std::optional<long> limit;
  if (cfg.num_policies > 0) limit = cfg.num_policies;
  m.policies = enumerate_policies(kNumActions, cfg.horizon(), limit);
  return m;
}

}  // namespace

Model init_model(const Config& cfg, const Layout& layout, std::uint64_t seed) {
  Model m = base_model(cfg, layout);
  const int n = layout.num_tiles;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> draw(0.1, 1.1);
  for (int a = 0; a < kNumActions; ++a) {
    Matrix counts(n, n);
    for (Index j = 0; j < n; ++j)
      for (Index i = 0; i < n; ++i) counts(i, j) = draw(rng);
    m.beta_prior.emplace_back(std::move(counts));
  }
  m.beta = m.beta_prior;
  for (const auto& b : m.beta) m.B.push_back(b.mean());
  return m;
}

Model init_model_with_true_transitions(const Config& cfg, const Layout& layout) {
  Model m = base_model(cfg, layout);
  m.learn_B = false;
  const GroundTruth truth = ground_truth(layout);
  const int n = layout.num_tiles;
  for (const Matrix& t : truth.transitions) {
    m.beta_prior.emplace_back(t * 1e3 + Matrix::Constant(n, n, 1e-3));
    m.B.push_back(t);
  }
  m.beta = m.beta_prior;
  return m;
}

}  // namespace aif
