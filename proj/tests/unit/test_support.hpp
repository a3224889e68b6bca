#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "aif/math.hpp"
#include "aif/perception.hpp"
#include "aif/oracles/oracles.hpp"

namespace aif::test {

// Column-stochastic matrix with entries drawn from normalized exponentials.
inline Matrix random_stochastic(Index rows, Index cols, std::mt19937_64& rng) {
  std::exponential_distribution<double> draw(1.0);
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = draw(rng) + 1e-3;
    m.col(j) /= m.col(j).sum();
  }
  return m;
}

inline Vector random_simplex(Index n, std::mt19937_64& rng) { return random_stochastic(n, 1, rng).col(0); }

inline oracles::EnumerablePomdp random_pomdp(int states, int actions, std::mt19937_64& rng) {
  oracles::EnumerablePomdp m;
  m.A = random_stochastic(states, states, rng);
  for (int a = 0; a < actions; ++a) m.B.push_back(random_stochastic(states, states, rng));
  m.D = random_simplex(states, rng);
  return m;
}

// Log tables written out here rather than through make_logs, so the tests
// exercise the message passing against independently prepared inputs.
inline ModelLogs logs_of(const oracles::EnumerablePomdp& m) {
  auto ln = [](double p) { return std::log(std::max(p, 1e-16)); };
  ModelLogs logs;
  logs.likelihood = m.A.unaryExpr(ln);
  for (const auto& b : m.B) logs.transition.push_back(b.unaryExpr(ln));
  logs.prior = m.D.unaryExpr(ln);
  return logs;
}

inline std::vector<int> random_sequence(std::size_t n, int values, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, values - 1);
  std::vector<int> out(n);
  for (auto& v : out) v = pick(rng);
  return out;
}

}  // namespace aif::test
