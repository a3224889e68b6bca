#include "aif/oracles/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace aif::oracles {
namespace {

constexpr double kFloor = 1e-16;

double fl(double p) { return std::max(p, kFloor); }

void check(const EnumerablePomdp& m, std::span<const int> policy, std::span<const int> obs) {
  const long n = m.D.size();
  const long steps = static_cast<long>(policy.size()) + 1;
  long sequences = 1;
  for (long t = 0; t < steps; ++t) {
    sequences *= n;
    if (sequences > kMaxSequences) throw std::length_error("oracle: too many state sequences");
  }
  if (m.A.cols() != n || m.B.empty()) throw std::invalid_argument("oracle: shape mismatch");
  if (static_cast<long>(obs.size()) > steps) throw std::invalid_argument("oracle: more observations than steps");
  for (int a : policy)
    if (a < 0 || a >= static_cast<int>(m.B.size())) throw std::out_of_range("oracle: action");
  for (int o : obs)
    if (o < 0 || o >= m.A.rows()) throw std::out_of_range("oracle: observation");
}

// Visits every state sequence with its floored joint probability.
template <typename Visit>
void enumerate(const EnumerablePomdp& m, std::span<const int> policy, std::span<const int> obs, Visit&& visit) {
  check(m, policy, obs);
  const int n = static_cast<int>(m.D.size());
  const std::size_t steps = policy.size() + 1;
  std::vector<int> s(steps, 0);
  while (true) {
    long double p = fl(m.D[s[0]]);
    for (std::size_t t = 1; t < steps; ++t) p *= fl(m.B[static_cast<std::size_t>(policy[t - 1])](s[t], s[t - 1]));
    for (std::size_t t = 0; t < obs.size(); ++t) p *= fl(m.A(obs[t], s[t]));
    visit(s, p);
    std::size_t i = steps;
    while (i > 0 && ++s[i - 1] == n) s[--i] = 0;
    if (i == 0) break;
  }
}

}  // namespace

std::vector<Eigen::VectorXd> exact_smoothing_posterior(const EnumerablePomdp& m, std::span<const int> policy,
                                                       std::span<const int> observations) {
  const std::size_t steps = policy.size() + 1;
  std::vector<Eigen::VectorXd> out(steps, Eigen::VectorXd::Zero(m.D.size()));
  double z = 0.0;
  enumerate(m, policy, observations, [&](const std::vector<int>& s, long double p) {
    for (std::size_t t = 0; t < steps; ++t) out[t][s[t]] += static_cast<double>(p);
    z += static_cast<double>(p);
  });
  for (auto& v : out) v /= z;
  return out;
}

double exact_log_evidence(const EnumerablePomdp& m, std::span<const int> policy, std::span<const int> observations) {
  double z = 0.0;
  enumerate(m, policy, observations, [&](const std::vector<int>&, long double p) { z += static_cast<double>(p); });
  return std::log(z);
}

long double extended_log_evidence(const EnumerablePomdp& m, std::span<const int> policy,
                                  std::span<const int> observations) {
  long double z = 0.0L;
  enumerate(m, policy, observations, [&](const std::vector<int>&, long double p) { z += p; });
  return std::log(z);
}

std::vector<Eigen::VectorXd> forward_backward_posterior(const EnumerablePomdp& m, std::span<const int> policy,
                                                        std::span<const int> observations) {
  check(m, policy, observations);
  const std::size_t steps = policy.size() + 1;
  const Eigen::Index n = m.D.size();
  auto likelihood = [&](std::size_t t) {
    Eigen::VectorXd l = Eigen::VectorXd::Ones(n);
    if (t < observations.size())
      for (Eigen::Index i = 0; i < n; ++i) l[i] = fl(m.A(observations[t], i));
    return l;
  };
  auto transition = [&](std::size_t t) {  // floored matrix for t -> t + 1
    return m.B[static_cast<std::size_t>(policy[t])].unaryExpr([](double p) { return fl(p); }).eval();
  };
  std::vector<Eigen::VectorXd> fwd(steps), bwd(steps, Eigen::VectorXd::Ones(n));
  fwd[0] = m.D.unaryExpr([](double p) { return fl(p); }).cwiseProduct(likelihood(0));
  for (std::size_t t = 1; t < steps; ++t) fwd[t] = (transition(t - 1) * fwd[t - 1]).cwiseProduct(likelihood(t));
  for (std::size_t t = steps - 1; t-- > 0;) bwd[t] = transition(t).transpose() * bwd[t + 1].cwiseProduct(likelihood(t + 1));
  std::vector<Eigen::VectorXd> out(steps);
  for (std::size_t t = 0; t < steps; ++t) {
    out[t] = fwd[t].cwiseProduct(bwd[t]);
    out[t] /= out[t].sum();
  }
  return out;
}

double digamma_series(double x) {
  if (!(x > 0.0)) throw std::domain_error("digamma_series: x must be positive");
  constexpr long kTerms = 2'000'000;
  const long double xm1 = static_cast<long double>(x) - 1.0L;
  long double sum = 0.0L;
  for (long n = kTerms - 1; n >= 0; --n) sum += xm1 / ((n + 1.0L) * (n + static_cast<long double>(x)));
  // Tail from kTerms on: integral of the summand plus the half-term endpoint correction.
  const long double N = kTerms;
  long double tail = std::log((N + x) / (N + 1.0L));
  tail += 0.5L * xm1 / ((N + 1.0L) * (N + x));
  return static_cast<double>(-0.57721566490153286060651209L + sum + tail);
}

double kl_beta_quadrature(double a1, double b1, double a2, double b2) {
  auto log_beta_fn = [](long double a, long double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); };
  const long double lp0 = -log_beta_fn(a1, b1), lq0 = -log_beta_fn(a2, b2);
  // Integrand with theta and 1 - theta passed separately to keep precision near both ends.
  auto f = [&](long double th, long double one_minus) {
    const long double lp = lp0 + (a1 - 1) * std::log(th) + (b1 - 1) * std::log(one_minus);
    const long double lq = lq0 + (a2 - 1) * std::log(th) + (b2 - 1) * std::log(one_minus);
    return std::exp(lp) * (lp - lq);
  };
  // tanh-sinh on (0, 1): theta = (1 + tanh(pi/2 sinh u)) / 2.
  const long double h = 1.0L / 64.0L;
  const long double half_pi = std::numbers::pi_v<long double> / 2.0L;
  long double sum = 0.0L;
  for (int k = -64 * 7; k <= 64 * 7; ++k) {
    const long double u = k * h;
    const long double s = half_pi * std::sinh(u);
    const long double e = std::exp(-2.0L * std::fabs(s));
    // 1 - tanh|s| = 2e / (1 + e), computed without cancellation.
    const long double small = e / (1.0L + e);
    const long double th = s >= 0 ? 1.0L - small : small;
    const long double om = s >= 0 ? small : 1.0L - small;
    if (th <= 0.0L || om <= 0.0L) continue;
    const long double w = half_pi * std::cosh(u) / (std::cosh(s) * std::cosh(s)) / 2.0L;
    sum += w * f(th, om);
  }
  return static_cast<double>(sum * h);
}

}  // namespace aif::oracles
