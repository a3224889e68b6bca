#include "aif/action_selection.hpp"

#include <stdexcept>

namespace aif {
namespace {

void check(const SimplexVector& q_pi, std::span<const Policy> policies, int step) {
  if (policies.empty() || static_cast<std::size_t>(q_pi.size()) != policies.size()) {
    throw std::invalid_argument("select_action: q_pi size does not match the policy set");
  }
  if (step < 0 || static_cast<std::size_t>(step) >= policies.front().size()) {
    throw std::out_of_range("select_action: step beyond the policy horizon");
  }
}

int action_at(const Policy& p, int step) { return p[static_cast<std::size_t>(step)]; }

}  // namespace

Vector action_marginal(const SimplexVector& q_pi, std::span<const Policy> policies, int step, int num_actions) {
  check(q_pi, policies, step);
  Vector mass = Vector::Zero(num_actions);
  for (std::size_t k = 0; k < policies.size(); ++k) {
    const int a = action_at(policies[k], step);
    if (a < 0 || a >= num_actions) throw std::out_of_range("select_action: policy action out of range");
    mass[a] += q_pi[static_cast<Index>(k)];
  }
  return mass;
}

Index argmax_lowest(const Vector& v) {
  if (v.size() == 0) throw std::invalid_argument("argmax: empty vector");
  Index best = 0;
  for (Index i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

int select_action(const SimplexVector& q_pi, std::span<const Policy> policies, int step, int num_actions,
                  ActionSelection rule, std::mt19937_64& rng) {
  check(q_pi, policies, step);
  switch (rule) {
    case ActionSelection::kd:
      return static_cast<int>(argmax_lowest(action_marginal(q_pi, policies, step, num_actions)));
    case ActionSelection::greedy_max:
      return action_at(policies[static_cast<std::size_t>(argmax_lowest(q_pi.probs()))], step);
    case ActionSelection::greedy_sample: {
      const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      double cum = 0.0;
      for (std::size_t k = 0; k < policies.size(); ++k) {
        cum += q_pi[static_cast<Index>(k)];
        if (cum > u) return action_at(policies[k], step);
      }
      // Rounding left the cumulative sum just below u: take the last supported policy.
      for (std::size_t k = policies.size(); k-- > 0;)
        if (q_pi[static_cast<Index>(k)] > 0.0) return action_at(policies[k], step);
      break;
    }
  }
  throw std::logic_error("select_action: unreachable");
}

}  // namespace aif
