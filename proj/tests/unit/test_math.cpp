#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "aif/math.hpp"
#include "aif/oracles/oracles.hpp"
#include "test_support.hpp"

namespace aif {
namespace {

constexpr double kEulerGamma = 0.57721566490153286;

Vector vec(std::initializer_list<double> v) {
  Vector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) out[i++] = x;
  return out;
}

SimplexVector simplex(std::initializer_list<double> v) { return SimplexVector::checked(vec(v)); }

TEST(Softmax, ZerosGiveUniform) {
  const auto s = softmax(Vector::Zero(3));
  for (Index i = 0; i < 3; ++i) EXPECT_NEAR(s[i], 1.0 / 3.0, 1e-15);
}

TEST(Softmax, TwoEntries) {
  // Oracle: e / (1 + e) evaluated directly.
  const double hi = std::exp(1.0) / (1.0 + std::exp(1.0));
  EXPECT_NEAR(hi, 0.7310585786300049, 1e-15);
  const auto s = softmax(vec({1.0, 2.0}));
  EXPECT_NEAR(s[0], 0.2689414213699951, 1e-12);
  EXPECT_NEAR(s[1], 0.7310585786300049, 1e-12);
}

TEST(Softmax, ShiftInvariant) {
  const Vector w = vec({0.3, -1.2, 4.0, 2.5});
  const auto a = softmax(w);
  for (double c : {-500.0, -3.0, 7.5, 650.0}) {
    const auto b = softmax((w.array() + c).matrix());
    EXPECT_LT((a.probs() - b.probs()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Softmax, RejectsBadInput) {
  EXPECT_THROW(softmax(Vector()), std::invalid_argument);
  EXPECT_THROW(softmax(vec({0.0, std::numeric_limits<double>::infinity()})), std::domain_error);
  EXPECT_THROW(softmax(vec({std::nan(""), 0.0})), std::domain_error);
}

TEST(Softmax, PropertyOutputOnSimplexForLargeMagnitudes) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> mag(-700.0, 700.0);
  std::uniform_int_distribution<int> len(1, 12);
  for (int trial = 0; trial < 2000; ++trial) {
    Vector w(len(rng));
    for (Index i = 0; i < w.size(); ++i) w[i] = mag(rng);
    const auto s = softmax(w);
    EXPECT_GE(s.probs().minCoeff(), 0.0);
    EXPECT_NEAR(s.probs().sum(), 1.0, 1e-9);
  }
}

TEST(SimplexVector, CheckedRejectsInvalid) {
  EXPECT_THROW(SimplexVector::checked(vec({0.5, 0.6})), std::invalid_argument);
  EXPECT_THROW(SimplexVector::checked(vec({1.5, -0.5})), std::invalid_argument);
  EXPECT_NO_THROW(SimplexVector::checked(vec({0.25, 0.75})));
  EXPECT_EQ(SimplexVector::one_hot(4, 2)[2], 1.0);
}

TEST(KlCategorical, Examples) {
  const auto p = simplex({0.2, 0.3, 0.5});
  EXPECT_NEAR(kl_categorical(p, p), 0.0, 1e-15);
  EXPECT_NEAR(kl_categorical(simplex({1.0, 0.0}), simplex({0.5, 0.5})), std::numbers::ln2, 1e-15);
  // Oracle: 0.5 ln(0.5/0.9) + 0.5 ln(0.5/0.1).
  const double direct = 0.5 * std::log(0.5 / 0.9) + 0.5 * std::log(0.5 / 0.1);
  EXPECT_NEAR(direct, 0.5108256237659907, 1e-15);
  EXPECT_NEAR(kl_categorical(simplex({0.5, 0.5}), simplex({0.9, 0.1})), 0.5108256237659907, 1e-12);
}

TEST(KlCategorical, SupportMismatchThrows) {
  EXPECT_THROW(kl_categorical(simplex({0.5, 0.5}), SimplexVector::uniform(3)), std::invalid_argument);
}

TEST(KlCategorical, PropertyZeroOnlyForEqualArguments) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = SimplexVector::checked(test::random_simplex(4, rng));
    const auto q = SimplexVector::checked(test::random_simplex(4, rng));
    EXPECT_NEAR(kl_categorical(p, p), 0.0, 1e-12);
    const double d = kl_categorical(p, q);
    EXPECT_GE(d, 0.0);
    if ((p.probs() - q.probs()).cwiseAbs().maxCoeff() > 1e-3) {
      EXPECT_GT(d, 1e-12);
    }
  }
}

TEST(Entropy, Examples) {
  EXPECT_EQ(entropy(SimplexVector::one_hot(5, 3)), 0.0);
  EXPECT_NEAR(entropy(SimplexVector::uniform(4)), std::log(4.0), 1e-15);
  const double direct = -0.9 * std::log(0.9) - 0.1 * std::log(0.1);
  EXPECT_NEAR(direct, 0.3250829733914482, 1e-15);
  EXPECT_NEAR(entropy(simplex({0.9, 0.1})), 0.3250829733914482, 1e-12);
}

TEST(Digamma, MatchesSeriesOracle) {
  EXPECT_NEAR(oracles::digamma_series(1.0), -0.5772156649015329, 1e-12);
  EXPECT_NEAR(digamma(1.0), -0.5772156649015329, 1e-12);
  EXPECT_NEAR(digamma(2.0), 1.0 - kEulerGamma, 1e-12);
  for (double x : {0.05, 0.1, 0.5, 1.7, 2.5, 5.9, 6.0, 7.3, 20.0, 50.0}) {
    EXPECT_NEAR(digamma(x), oracles::digamma_series(x), 1e-10) << "x = " << x;
  }
}

TEST(Digamma, RecurrenceIdentity) {
  for (double x : {0.5, 1.0, 3.7}) EXPECT_NEAR(digamma(x + 1.0) - digamma(x), 1.0 / x, 1e-12);
  for (double x = 0.01; x <= 100.0; x += 0.37) EXPECT_NEAR(digamma(x + 1.0) - digamma(x), 1.0 / x, 1e-10) << x;
}

TEST(Digamma, DomainError) {
  EXPECT_THROW(digamma(0.0), std::domain_error);
  EXPECT_THROW(digamma(-1.5), std::domain_error);
}

TEST(ExpectedLogDirichlet, Examples) {
  const auto e = expected_log_dirichlet(DirichletCounts(Matrix::Ones(2, 1)));
  EXPECT_NEAR(e(0, 0), -1.0, 1e-12);
  EXPECT_NEAR(e(1, 0), -1.0, 1e-12);

  const auto sym = expected_log_dirichlet(DirichletCounts(Matrix::Constant(4, 2, 2.7)));
  EXPECT_NEAR(sym.maxCoeff() - sym.minCoeff(), 0.0, 1e-15);

  const Vector p = vec({0.2, 0.5, 0.3});
  const auto big = expected_log_dirichlet(DirichletCounts(Matrix(p * 1e6)));
  for (Index i = 0; i < 3; ++i) EXPECT_NEAR(big(i, 0), std::log(p[i]), 1e-3);
}

TEST(ExpectedLogDirichlet, PropertyJensen) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> count(0.05, 30.0);
  for (int trial = 0; trial < 500; ++trial) {
    Matrix c(3, 4);
    for (Index i = 0; i < c.size(); ++i) c.data()[i] = count(rng);
    const Matrix e = expected_log_dirichlet(DirichletCounts(c));
    for (Index j = 0; j < c.cols(); ++j) EXPECT_LE(e.col(j).array().exp().sum(), 1.0 + 1e-9);
  }
}

TEST(DirichletCounts, RejectsNonPositiveAndNegativeIncrements) {
  EXPECT_THROW(DirichletCounts(Matrix::Zero(2, 2)), std::invalid_argument);
  DirichletCounts d(Matrix::Ones(2, 2));
  EXPECT_THROW(d.add(Matrix::Constant(2, 2, -0.1)), std::invalid_argument);
  EXPECT_THROW(d.add(Matrix::Ones(3, 2)), std::invalid_argument);
  d.add(Matrix::Ones(2, 2));
  EXPECT_EQ(d.total(), 8.0);
}

TEST(KlDirichlet, IdentityIsZero) {
  const DirichletCounts a(Matrix::Constant(3, 2, 1.7));
  EXPECT_NEAR(kl_dirichlet(a, a), 0.0, 1e-14);
}

TEST(KlDirichlet, MatchesQuadratureOracle) {
  const DirichletCounts post(vec({2.0, 1.0}));
  const DirichletCounts prior(vec({1.0, 1.0}));
  const double oracle = oracles::kl_beta_quadrature(2, 1, 1, 1);
  EXPECT_NEAR(oracle, 0.1931471805599453, 1e-10);
  EXPECT_NEAR(kl_dirichlet(post, prior), 0.1931471805599453, 1e-12);

  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> count(0.6, 12.0);
  for (int trial = 0; trial < 40; ++trial) {
    const double a1 = count(rng), b1 = count(rng), a2 = count(rng), b2 = count(rng);
    const double got = kl_dirichlet(DirichletCounts(vec({a1, b1})), DirichletCounts(vec({a2, b2})));
    EXPECT_NEAR(got, oracles::kl_beta_quadrature(a1, b1, a2, b2), 1e-8);
  }
}

TEST(KlDirichlet, GrowsWithASinglePosteriorCount) {
  const DirichletCounts prior(vec({1.0, 1.0, 1.0}));
  double last = 0.0;
  for (double c : {1.5, 2.0, 4.0, 8.0}) {
    const double kl = kl_dirichlet(DirichletCounts(vec({c, 1.0, 1.0})), prior);
    EXPECT_GT(kl, last);
    last = kl;
  }
}

TEST(KlDirichlet, ShapeMismatchThrows) {
  EXPECT_THROW(kl_dirichlet(DirichletCounts(Matrix::Ones(2, 2)), DirichletCounts(Matrix::Ones(3, 2))),
               std::invalid_argument);
}

TEST(KlDirichlet, PropertyNonNegative) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> count(0.1, 20.0);
  for (int trial = 0; trial < 500; ++trial) {
    Matrix a(3, 3), b(3, 3);
    for (Index i = 0; i < a.size(); ++i) a.data()[i] = count(rng), b.data()[i] = count(rng);
    EXPECT_GE(kl_dirichlet(DirichletCounts(a), DirichletCounts(b)), -1e-12);
  }
}

}  // namespace
}  // namespace aif
