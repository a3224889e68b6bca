#include "aif/math.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace aif {

SimplexVector SimplexVector::checked(Vector probs, double tol) {
  if (probs.size() == 0) throw std::invalid_argument("simplex vector: empty");
  if (!probs.allFinite()) throw std::invalid_argument("simplex vector: non-finite entry");
  if ((probs.array() < 0.0).any()) throw std::invalid_argument("simplex vector: negative entry");
  if (std::abs(probs.sum() - 1.0) > tol) {
    throw std::invalid_argument("simplex vector: sum " + std::to_string(probs.sum()) + " != 1");
  }
  return SimplexVector(std::move(probs));
}

SimplexVector SimplexVector::uniform(Index n) {
  if (n <= 0) throw std::invalid_argument("simplex vector: empty");
  return SimplexVector(Vector::Constant(n, 1.0 / static_cast<double>(n)));
}

SimplexVector SimplexVector::one_hot(Index n, Index hot) {
  if (hot < 0 || hot >= n) throw std::out_of_range("simplex vector: one-hot index out of range");
  Vector p = Vector::Zero(n);
  p[hot] = 1.0;
  return SimplexVector(std::move(p));
}

DirichletCounts::DirichletCounts(Matrix counts) : counts_(std::move(counts)) {
  if (counts_.size() == 0) throw std::invalid_argument("dirichlet counts: empty");
  if (!counts_.allFinite() || (counts_.array() <= 0.0).any()) {
    throw std::invalid_argument("dirichlet counts: entries must be finite and > 0");
  }
}

void DirichletCounts::add(const Matrix& increment) {
  if (increment.rows() != counts_.rows() || increment.cols() != counts_.cols()) {
    throw std::invalid_argument("dirichlet counts: increment shape mismatch");
  }
  if (!increment.allFinite() || (increment.array() < 0.0).any()) {
    throw std::invalid_argument("dirichlet counts: increment must be finite and >= 0");
  }
  counts_ += increment;
}

Matrix DirichletCounts::mean() const {
  Matrix m = counts_;
  for (Index j = 0; j < m.cols(); ++j) m.col(j) /= m.col(j).sum();
  return m;
}

SimplexVector softmax(const Vector& log_weights) {
  if (log_weights.size() == 0) throw std::invalid_argument("softmax: empty input");
  if (!log_weights.allFinite()) throw std::domain_error("softmax: non-finite input");
  Vector e = (log_weights.array() - log_weights.maxCoeff()).exp();
  e /= e.sum();
  return SimplexVector(std::move(e));
}

SimplexVector normalized(const Vector& weights) {
  if (weights.size() == 0) throw std::invalid_argument("normalize: empty input");
  if (!weights.allFinite() || (weights.array() < 0.0).any()) {
    throw std::domain_error("normalize: weights must be finite and >= 0");
  }
  const double total = weights.sum();
  if (total <= 0.0) throw std::domain_error("normalize: zero total weight");
  return SimplexVector(weights / total);
}

double safe_log(double p) { return std::log(std::max(p, kProbFloor)); }

Vector safe_log(const Vector& p) { return p.array().max(kProbFloor).log().matrix(); }

Matrix safe_log(const Matrix& p) { return p.array().max(kProbFloor).log().matrix(); }

double kl_categorical(const SimplexVector& q, const SimplexVector& p) {
  if (q.size() != p.size()) throw std::invalid_argument("kl_categorical: size mismatch");
  const Vector& qv = q.probs();
  return qv.dot(safe_log(qv) - safe_log(p.probs()));
}

double entropy(const SimplexVector& p) { return -p.probs().dot(safe_log(p.probs())); }

Vector column_entropies(const Matrix& columns) {
  return -(columns.array() * safe_log(columns).array()).colwise().sum().transpose();
}

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("digamma: requires finite x > 0");
  double shift = 0.0;
  while (x < 10.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Bernoulli-number asymptotic series, truncated after the x^-10 term.
  const double series =
      inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 * (1.0 / 132)))));
  return shift + std::log(x) - 0.5 * inv - series;
}

Matrix expected_log_dirichlet(const DirichletCounts& counts) {
  const Matrix& c = counts.counts();
  Matrix out(c.rows(), c.cols());
  for (Index j = 0; j < c.cols(); ++j) {
    const double col_term = digamma(c.col(j).sum());
    for (Index i = 0; i < c.rows(); ++i) out(i, j) = digamma(c(i, j)) - col_term;
  }
  return out;
}

double kl_dirichlet(const DirichletCounts& post, const DirichletCounts& prior) {
  if (post.rows() != prior.rows() || post.cols() != prior.cols()) {
    throw std::invalid_argument("kl_dirichlet: shape mismatch");
  }
  const Matrix& a = post.counts();
  const Matrix& b = prior.counts();
  double kl = 0.0;
  for (Index j = 0; j < a.cols(); ++j) {
    const double a0 = a.col(j).sum();
    const double b0 = b.col(j).sum();
    const double psi_a0 = digamma(a0);
    kl += std::lgamma(a0) - std::lgamma(b0);
    for (Index i = 0; i < a.rows(); ++i) {
      kl += std::lgamma(b(i, j)) - std::lgamma(a(i, j)) + (a(i, j) - b(i, j)) * (digamma(a(i, j)) - psi_a0);
    }
  }
  return kl;
}

}  // namespace aif
