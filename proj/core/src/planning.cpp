#include "aif/planning.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace aif {

EfeBreakdown& EfeBreakdown::operator+=(const EfeBreakdown& o) {
  risk += o.risk;
  ambiguity += o.ambiguity;
  a_novelty += o.a_novelty;
  b_novelty += o.b_novelty;
  return *this;
}

Matrix novelty_weights(const DirichletCounts& counts) {
  const Matrix& c = counts.counts();
  Matrix w(c.rows(), c.cols());
  for (Index j = 0; j < c.cols(); ++j) {
    const double inv_total = 1.0 / c.col(j).sum();
    w.col(j) = 0.5 * (c.col(j).array().inverse() - inv_total);
  }
  return w;
}

EfeCache make_efe_cache(const Model& model) {
  EfeCache w;
  w.ambiguity = column_entropies(model.A);
  if (model.learn_B)
    for (const auto& b : model.beta) w.transition.push_back(novelty_weights(b));
  if (model.learn_A) w.emission = novelty_weights(model.alpha);
  return w;
}

EfeBreakdown efe_step(const SimplexVector& previous, const SimplexVector& current, int action, const Model& model,
                      const EfeCache& cache) {
  if (previous.size() != model.num_states() || current.size() != model.num_states()) {
    throw std::invalid_argument("efe_step: belief size does not match the model");
  }
  if (action < 0 || action >= model.num_actions()) throw std::out_of_range("efe_step: action out of range");
  const Vector& q = current.probs();
  EfeBreakdown e;
  e.risk = kl_categorical(current, model.C);
  e.ambiguity = q.dot(cache.ambiguity);
  if (!cache.transition.empty()) {
    e.b_novelty = q.dot(cache.transition[static_cast<std::size_t>(action)] * previous.probs());
  }
  if (cache.emission.size() > 0) {
    // Joint of predicted outcome and state: A[o, s] q[s].
    e.a_novelty = (model.A.array() * cache.emission.array()).matrix().colwise().sum().dot(q);
  }
  return e;
}

EfeBreakdown total_efe(const BeliefTrack& track, std::span<const int> actions, int tau, const Model& model,
                       const EfeCache& cache) {
  const auto steps = static_cast<int>(track.size());
  if (tau < 1 || tau >= steps) throw std::out_of_range("total_efe: tau must lie in [1, T)");
  if (actions.size() + 1 < track.size()) throw std::invalid_argument("total_efe: too few actions");
  EfeBreakdown sum;
  for (int t = tau; t < steps; ++t) {
    const auto ut = static_cast<std::size_t>(t);
    sum += efe_step(track[ut - 1], track[ut], actions[ut - 1], model, cache);
  }
  return sum;
}

SimplexVector policy_posterior(std::span<const double> efe, std::span<const double> fe, std::span<const std::uint8_t> mask) {
  if (efe.size() != fe.size() || efe.empty()) throw std::invalid_argument("policy_posterior: size mismatch");
  if (!mask.empty() && mask.size() != efe.size()) throw std::invalid_argument("policy_posterior: mask size mismatch");
  const auto n = static_cast<Index>(efe.size());
  Vector logits(n);
  double top = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (Index k = 0; k < n; ++k) {
    const auto uk = static_cast<std::size_t>(k);
    logits[k] = -efe[uk] - fe[uk];
    if (!std::isfinite(logits[k])) throw std::domain_error("policy_posterior: non-finite G or F");
    if (mask.empty() || mask[uk] != 0) {
      top = std::max(top, logits[k]);
      any = true;
    }
  }
  if (!any) throw std::invalid_argument("policy_posterior: every policy is masked out");
  Vector weights(n);
  for (Index k = 0; k < n; ++k) {
    const bool alive = mask.empty() || mask[static_cast<std::size_t>(k)] != 0;
    weights[k] = alive ? std::exp(logits[k] - top) : 0.0;
  }
  return normalized(weights);
}

SimplexVector marginal_state_belief(const SimplexVector& q_pi, std::span<const BeliefTrack> tracks, int t) {
  if (static_cast<std::size_t>(q_pi.size()) != tracks.size() || tracks.empty()) {
    throw std::invalid_argument("marginal_state_belief: size mismatch");
  }
  const auto ut = static_cast<std::size_t>(t);
  Vector sum = Vector::Zero(tracks.front().at(ut).size());
  for (std::size_t k = 0; k < tracks.size(); ++k) {
    const double w = q_pi[static_cast<Index>(k)];
    if (w > 0.0) sum += w * tracks[k].at(ut).probs();
  }
  return normalized(sum);
}

}  // namespace aif
