#include <gtest/gtest.h>

#include <cmath>

#include "gruss/functionals.hpp"
#include "support/generators.hpp"

namespace gruss {
namespace {

using testing::Rng;

const Space kLine = Space::real(1);
const ProbabilityVector kHalves({0.5, 0.5});
const std::vector<Vector> kZeroOne{Vector{0.0}, Vector{1.0}};

TEST(Chebyshev, Examples) {
  EXPECT_DOUBLE_EQ(chebyshev(kLine, kHalves, kZeroOne, kZeroOne).real(), 0.25);
  const std::vector<Vector> reversed{Vector{1.0}, Vector{0.0}};
  EXPECT_DOUBLE_EQ(chebyshev(kLine, kHalves, kZeroOne, reversed).real(), -0.25);
  const std::vector<Vector> constant{Vector{3.0}, Vector{3.0}};
  EXPECT_EQ(chebyshev(kLine, kHalves, kZeroOne, constant), Scalar(0.0));
}

TEST(VectorGruss, Examples) {
  const std::vector<Scalar> alphas{0.0, 1.0};
  const Vector g = vector_gruss(kLine, kHalves, alphas, kZeroOne);
  EXPECT_DOUBLE_EQ(g[0].real(), 0.25);
  const std::vector<Scalar> constant{2.0, 2.0};
  EXPECT_EQ(vector_gruss(kLine, kHalves, constant, kZeroOne), Vector::zeros(1));
}

TEST(Dispersion, Examples) {
  EXPECT_DOUBLE_EQ(variance(kLine, kHalves, kZeroOne), 0.25);
  EXPECT_DOUBLE_EQ(mad(kLine, kHalves, kZeroOne), 0.5);
  const std::vector<Scalar> alphas{0.0, 1.0};
  EXPECT_DOUBLE_EQ(scalar_variance(kHalves, alphas), 0.25);
  EXPECT_DOUBLE_EQ(scalar_mad(kHalves, alphas), 0.5);
  // Unit-circle points i and -i: mean 0, every deviation has modulus 1.
  const std::vector<Scalar> circle{Scalar(0.0, 1.0), Scalar(0.0, -1.0)};
  EXPECT_DOUBLE_EQ(scalar_variance(kHalves, circle), 1.0);
  EXPECT_DOUBLE_EQ(scalar_mad(kHalves, circle), 1.0);
}

TEST(Functionals, RejectLengthMismatch) {
  const std::vector<Vector> three{Vector{0.0}, Vector{1.0}, Vector{2.0}};
  EXPECT_THROW(chebyshev(kLine, kHalves, three, three), ContractViolation);
  EXPECT_THROW(variance(kLine, kHalves, three), ContractViolation);
}

TEST(FunctionalProperties, MatchDirectDoubleSums) {
  Rng rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const Space s = testing::random_space(rng, 6);
    const std::size_t n = testing::pick(rng, 1, 15);
    const ProbabilityVector p = testing::random_probability(rng, n);
    const auto w = testing::weights_of(p);
    const auto xs = testing::random_vectors(s, rng, n);
    const auto ys = testing::random_vectors(s, rng, n);
    std::vector<Scalar> alphas;
    for (std::size_t i = 0; i < n; ++i) alphas.push_back(testing::random_scalar(rng, s.is_complex()));

    const double scale = tolerance_scale(s, p, xs, ys);
    ASSERT_LE(std::abs(chebyshev(s, p, xs, ys) - testing::direct_chebyshev(s, w, xs, ys)),
              1e-12 * scale);

    const Vector g = vector_gruss(s, p, alphas, xs);
    const auto direct = testing::direct_vector_gruss(w, alphas, xs);
    const double gscale = tolerance_scale(s, p, alphas, xs);
    for (std::size_t k = 0; k < s.dim(); ++k) ASSERT_LE(std::abs(g[k] - direct[k]), 1e-12 * gscale);
  }
}

TEST(FunctionalProperties, ChebyshevOfSelfIsVariance) {
  Rng rng(102);
  for (int trial = 0; trial < 500; ++trial) {
    const Space s = testing::random_space(rng, 5);
    const std::size_t n = testing::pick(rng, 1, 12);
    const ProbabilityVector p = testing::random_probability(rng, n);
    const auto xs = testing::random_vectors(s, rng, n);
    const Scalar c = chebyshev(s, p, xs, xs);
    const double scale = tolerance_scale(s, p, xs, xs);
    ASSERT_NEAR(c.real(), variance(s, p, xs), 1e-12 * scale);
    ASSERT_NEAR(c.imag(), 0.0, 1e-12 * scale);
    ASSERT_GE(variance(s, p, xs), 0.0);
    // Jensen for the norm: mean deviation never exceeds the standard deviation.
    ASSERT_LE(mad(s, p, xs), std::sqrt(variance(s, p, xs)) + 1e-12 * std::sqrt(scale));
  }
}

TEST(FunctionalProperties, IdentitiesHoldForArbitraryAnchors) {
  Rng rng(103);
  for (int trial = 0; trial < 1000; ++trial) {
    const Space s = testing::random_space(rng, 6);
    const std::size_t n = testing::pick(rng, 1, 20);
    const ProbabilityVector p = testing::random_probability(rng, n);
    const auto xs = testing::random_vectors(s, rng, n, 3.0);
    const auto ys = testing::random_vectors(s, rng, n, 3.0);
    std::vector<Scalar> alphas;
    for (std::size_t i = 0; i < n; ++i) alphas.push_back(testing::random_scalar(rng, s.is_complex()));
    const Vector anchor = testing::random_vector(s, rng, 5.0);
    const double anchor_scale = 1.0 + s.norm(anchor);

    ASSERT_LE(identity_residual_24(s, anchor, p, xs, ys),
              1e-10 * tolerance_scale(s, p, xs, ys) * anchor_scale);
    ASSERT_LE(identity_residual_210(s, anchor, p, alphas, xs),
              1e-10 * tolerance_scale(s, p, alphas, xs) * anchor_scale);
  }
}

TEST(FunctionalProperties, ShiftInvariance) {
  Rng rng(104);
  for (int trial = 0; trial < 500; ++trial) {
    const Space s = testing::random_space(rng, 4);
    const std::size_t n = testing::pick(rng, 2, 10);
    const ProbabilityVector p = testing::random_probability(rng, n);
    auto xs = testing::random_vectors(s, rng, n);
    const auto ys = testing::random_vectors(s, rng, n);
    const Scalar before = chebyshev(s, p, xs, ys);
    const double var_before = variance(s, p, xs);
    const Vector shift = testing::random_vector(s, rng);
    for (Vector& x : xs) x += shift;
    const double scale = tolerance_scale(s, p, xs, ys) * (1.0 + s.norm(shift));
    ASSERT_LE(std::abs(chebyshev(s, p, xs, ys) - before), 1e-12 * scale);
    ASSERT_NEAR(variance(s, p, xs), var_before, 1e-12 * scale * (1.0 + s.norm(shift)));
  }
}

}  // namespace
}  // namespace gruss
