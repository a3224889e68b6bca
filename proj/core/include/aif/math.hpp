#pragma once

#include <Eigen/Core>

namespace aif {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Probabilities are clamped to this value before any logarithm.
inline constexpr double kProbFloor = 1e-16;

// Non-negative vector summing to one. Construction is checked except through
// the factory functions below, which produce valid vectors by construction.
class SimplexVector {
 public:
  SimplexVector() = default;

  static SimplexVector checked(Vector probs, double tol = 1e-9);
  static SimplexVector uniform(Index n);
  static SimplexVector one_hot(Index n, Index hot);

  const Vector& probs() const noexcept { return probs_; }
  Index size() const noexcept { return probs_.size(); }
  double operator[](Index i) const { return probs_[i]; }

  friend SimplexVector softmax(const Vector& log_weights);
  friend SimplexVector normalized(const Vector& weights);

 private:
  explicit SimplexVector(Vector probs) : probs_(std::move(probs)) {}
  Vector probs_;
};

// Strictly positive concentration parameters, one Dirichlet per column.
class DirichletCounts {
 public:
  DirichletCounts() = default;
  explicit DirichletCounts(Matrix counts);

  const Matrix& counts() const noexcept { return counts_; }
  Index rows() const noexcept { return counts_.rows(); }
  Index cols() const noexcept { return counts_.cols(); }
  double total() const { return counts_.sum(); }

  // Adds non-negative pseudo-counts of the same shape.
  void add(const Matrix& increment);

  // Column-normalized mean of the Dirichlet.
  Matrix mean() const;

 private:
  Matrix counts_;
};

SimplexVector softmax(const Vector& log_weights);

// Rescales non-negative weights to unit sum.
SimplexVector normalized(const Vector& weights);

double safe_log(double p);
Vector safe_log(const Vector& p);
Matrix safe_log(const Matrix& p);

// KL(q || p) between categorical distributions of equal size.
double kl_categorical(const SimplexVector& q, const SimplexVector& p);

double entropy(const SimplexVector& p);

// Entropy of every column of a column-stochastic matrix.
Vector column_entropies(const Matrix& columns);

double digamma(double x);

// E[ln theta_ij] under Dir(column j): psi(c_ij) - psi(sum_k c_kj).
Matrix expected_log_dirichlet(const DirichletCounts& counts);

// Sum over columns of KL(Dir(post_j) || Dir(prior_j)).
double kl_dirichlet(const DirichletCounts& post, const DirichletCounts& prior);

}  // namespace aif
