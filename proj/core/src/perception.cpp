#include "aif/perception.hpp"

#include <stdexcept>

namespace aif {
namespace {

void check_segment(const BeliefTrack& track, const ChainSegment& seg, const ModelLogs& logs) {
  if (seg.begin < 0 || seg.begin >= seg.end || static_cast<std::size_t>(seg.end) > track.size()) {
    throw std::out_of_range("chain segment: bad time range");
  }
  if (seg.observations.size() > track.size()) {
    throw std::out_of_range("chain segment: more observations than time steps");
  }
  if (seg.actions.size() + 1 < static_cast<std::size_t>(seg.end)) {
    throw std::invalid_argument("chain segment: too few actions for the time range");
  }
  const auto n_actions = static_cast<int>(logs.transition.size());
  for (int a : seg.actions)
    if (a < 0 || a >= n_actions) throw std::out_of_range("chain segment: action out of range");
  for (int o : seg.observations)
    if (o < 0 || o >= logs.likelihood.rows()) throw std::out_of_range("chain segment: observation out of range");
}

Vector message(const BeliefTrack& track, const ChainSegment& seg, const ModelLogs& logs, int t) {
  const auto ut = static_cast<std::size_t>(t);
  Vector m = t == 0 ? logs.prior : Vector(logs.transition[static_cast<std::size_t>(seg.actions[ut - 1])] *
                                          track[ut - 1].probs());
  if (ut < seg.observations.size()) m += logs.likelihood.row(seg.observations[ut]).transpose();
  if (t + 1 < seg.end) {
    m.noalias() += logs.transition[static_cast<std::size_t>(seg.actions[ut])].transpose() * track[ut + 1].probs();
  }
  return m;
}

}  // namespace

BeliefTrack uniform_track(int num_steps, int num_states) {
  return BeliefTrack(static_cast<std::size_t>(num_steps), SimplexVector::uniform(num_states));
}

ModelLogs make_logs(const Model& model) {
  ModelLogs logs;
  logs.likelihood = model.learn_A ? expected_log_dirichlet(model.alpha) : safe_log(model.A);
  for (const Matrix& b : model.B) logs.transition.push_back(safe_log(b));
  logs.prior = safe_log(model.D.probs());
  return logs;
}

void vmp_sweep(BeliefTrack& track, const ChainSegment& seg, const ModelLogs& logs, UpdateRule rule) {
  check_segment(track, seg, logs);
  for (int t = seg.begin; t < seg.end; ++t) {
    const Vector m = message(track, seg, logs, t);
    auto& s = track[static_cast<std::size_t>(t)];
    if (rule == UpdateRule::fixed_point) {
      s = softmax(m);
    } else {
      // Gradient of F with respect to s_t is 1 + ln s_t - m; unit step size.
      const Vector grad = Vector::Ones(m.size()) + safe_log(s.probs()) - m;
      s = softmax(s.probs() - grad);
    }
  }
}

double segment_free_energy(const BeliefTrack& track, const ChainSegment& seg, const ModelLogs& logs) {
  check_segment(track, seg, logs);
  double fe = 0.0;
  for (int t = seg.begin; t < seg.end; ++t) {
    const auto ut = static_cast<std::size_t>(t);
    const Vector& s = track[ut].probs();
    fe += s.dot(safe_log(s));
    if (ut < seg.observations.size()) fe -= logs.likelihood.row(seg.observations[ut]).dot(s);
    if (t == 0) {
      fe -= s.dot(logs.prior);
    } else {
      fe -= s.dot(logs.transition[static_cast<std::size_t>(seg.actions[ut - 1])] * track[ut - 1].probs());
    }
  }
  return fe;
}

double infer_policy(BeliefTrack& track, std::span<const int> policy, std::span<const int> observations,
                    const ModelLogs& logs, int sweeps, UpdateRule rule) {
  if (observations.empty()) throw std::invalid_argument("infer_policy: empty observation history");
  const ChainSegment seg{policy, observations, 0, static_cast<int>(track.size())};
  for (int i = 0; i < sweeps; ++i) vmp_sweep(track, seg, logs, rule);
  return segment_free_energy(track, seg, logs);
}

double marginal_free_energy(const SimplexVector& q_pi, std::span<const double> policy_fe) {
  if (static_cast<std::size_t>(q_pi.size()) != policy_fe.size()) {
    throw std::invalid_argument("marginal_free_energy: size mismatch");
  }
  double total = 0.0;
  for (std::size_t k = 0; k < policy_fe.size(); ++k) {
    const double w = q_pi[static_cast<Index>(k)];
    if (w > 0.0) total += w * policy_fe[k];
  }
  return total;
}

}  // namespace aif
