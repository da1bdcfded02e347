#include <gtest/gtest.h>

#include "gruss/conditions.hpp"
#include "support/generators.hpp"

namespace gruss {
namespace {

using testing::Rng;

const Space kLine = Space::real(1);
const Enclosure kZeroTwo(Vector{0.0}, Vector{2.0});

TEST(CheckBox, InteriorExteriorBoundary) {
  const std::vector<Vector> xs{Vector{1.0}, Vector{3.0}, Vector{0.0}};
  const ConditionReport r = check_box(kLine, kZeroTwo, xs);
  EXPECT_DOUBLE_EQ(r.box_slack[0], 1.0);
  EXPECT_DOUBLE_EQ(r.box_slack[1], -3.0);
  EXPECT_DOUBLE_EQ(r.box_slack[2], 0.0);
  EXPECT_TRUE(r.holds_at(0));
  EXPECT_FALSE(r.holds_at(1));
  EXPECT_TRUE(r.holds_at(2));
  EXPECT_FALSE(r.holds());
  EXPECT_EQ(r.failing(), std::vector<std::size_t>{1});
}

TEST(CheckBall, CenterExteriorAndDiskBoundary) {
  const std::vector<Vector> xs{Vector{1.0}, Vector{3.0}};
  const ConditionReport r = check_ball(kLine, kZeroTwo, xs);
  EXPECT_DOUBLE_EQ(r.ball_slack[0], 1.0);
  EXPECT_DOUBLE_EQ(r.ball_slack[1], -1.0);
  EXPECT_TRUE(r.holds_at(0));
  EXPECT_FALSE(r.holds_at(1));

  // (1,1) is on the sphere around (1,0) of radius 1 but outside the
  // coordinate box [0,2] x [0,0].
  const Space plane = Space::real(2);
  const std::vector<Vector> corner{Vector{1.0, 1.0}};
  const ConditionReport b =
      check_ball(plane, Enclosure(Vector{0.0, 0.0}, Vector{2.0, 0.0}), corner);
  EXPECT_DOUBLE_EQ(b.ball_slack[0], 0.0);
  EXPECT_TRUE(b.holds());
}

TEST(CheckBall, RejectsDimensionMismatch) {
  const std::vector<Vector> xs{Vector{1.0, 2.0}};
  EXPECT_THROW(check_ball(kLine, kZeroTwo, xs), ContractViolation);
}

TEST(ScalarDisc, Examples) {
  const std::vector<Scalar> inside{0.5}, outside{1.2}, imag_disc{0.9};
  EXPECT_TRUE(check_scalar_disc(0.0, 1.0, inside).holds());
  EXPECT_FALSE(check_scalar_disc(0.0, 1.0, outside).holds());
  const Scalar i(0.0, 1.0);
  EXPECT_TRUE(check_scalar_disc(-i, i, imag_disc).holds());
  EXPECT_THROW(check_scalar_disc(1.0, 1.0, inside), DegenerateInput);
}

TEST(Enclosure, DerivedQuantitiesAndDegeneracy) {
  const Enclosure e(Vector{0.0, 0.0}, Vector{3.0, 4.0});
  EXPECT_EQ(e.center(), (Vector{1.5, 2.0}));
  EXPECT_DOUBLE_EQ(e.diameter(Space::real(2)), 5.0);
  EXPECT_DOUBLE_EQ(e.radius(Space::real(2)), 2.5);
  EXPECT_THROW(Enclosure(Vector{1.0}, Vector{1.0}), DegenerateInput);
  EXPECT_TRUE(Enclosure::degenerate_at(Vector{1.0}).degenerate());
}

TEST(FitEnclosure, TwoPoints) {
  const std::vector<Vector> xs{Vector{0.0}, Vector{1.0}};
  const Enclosure a = fit_enclosure(kLine, xs, FitMode::AntipodalPair);
  EXPECT_EQ(a.lo(), Vector{0.0});
  EXPECT_EQ(a.hi(), Vector{1.0});
  const Enclosure b = fit_enclosure(kLine, xs, FitMode::BoundingSphere);
  EXPECT_NEAR(b.center()[0].real(), 0.5, 1e-12);
  EXPECT_NEAR(b.diameter(kLine), 1.0, 1e-12);
}

TEST(FitEnclosure, AntipodalPairCoversRightAngleCorner) {
  const Space plane = Space::real(2);
  const std::vector<Vector> xs{Vector{0.0, 0.0}, Vector{1.0, 0.0}, Vector{0.0, 1.0}};
  const Enclosure e = fit_enclosure(plane, xs, FitMode::AntipodalPair);
  // The diameter-realizing pair; the corner sits on the sphere.
  EXPECT_NEAR(e.center()[0].real(), 0.5, 1e-15);
  EXPECT_NEAR(e.center()[1].real(), 0.5, 1e-15);
  EXPECT_NEAR(e.diameter(plane), std::sqrt(2.0), 1e-12);
  EXPECT_TRUE(check_ball(plane, e, xs).holds());
}

TEST(FitEnclosure, Errors) {
  const std::vector<Vector> same{Vector{2.0}, Vector{2.0}};
  EXPECT_THROW(fit_enclosure(kLine, same), DegenerateInput);
  EXPECT_THROW(fit_enclosure(kLine, std::vector<Vector>{}), DegenerateInput);

  // Equilateral triangle: the diameter pair would need inflation sqrt(3).
  const Space plane = Space::real(2);
  const std::vector<Vector> tri{Vector{0.0, 0.0}, Vector{1.0, 0.0},
                                Vector{0.5, std::sqrt(3.0) / 2.0}};
  EXPECT_THROW(fit_enclosure(plane, tri, FitMode::AntipodalPair), FittingFailure);
  EXPECT_TRUE(check_ball(plane, fit_enclosure(plane, tri), tri).holds());
}

TEST(ConditionProperties, BoxAndBallAgreeOutsideDeadZone) {
  Rng rng(11);
  int compared = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const Space s = testing::random_space(rng, 6);
    const Enclosure e = testing::random_enclosure(s, rng);
    const Vector x = testing::uniform(rng) < 0.5 ? testing::random_in_ball(s, e, rng)
                                        : e.center() + testing::random_vector(s, rng, 2.0);
    const std::vector<Vector> xs{x};
    const ConditionReport box = check_box(s, e, xs);
    const ConditionReport ball = check_ball(s, e, xs);
    const double d2 = e.diameter(s) * e.diameter(s);
    const double r = e.radius(s);
    const double dist = s.distance(x, e.center());
    ASSERT_NEAR(box.box_slack[0], r * r - dist * dist, 1e-10 * std::max(1.0, d2 + dist * dist));
    if (std::abs(box.box_slack[0]) > 1e-8 * d2) {
      ++compared;
      ASSERT_EQ(box.holds_at(0), ball.holds_at(0));
    }
  }
  EXPECT_GT(compared, 4000);
}

TEST(ConditionProperties, FittedEnclosuresAreSound) {
  Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const Space s = testing::random_space(rng, 5);
    const std::vector<Vector> xs = testing::random_vectors(s, rng, testing::pick(rng, 2, 25));
    const Enclosure e = fit_enclosure(s, xs);
    const ConditionReport r = check_ball(s, e, xs);
    const double d2 = e.diameter(s) * e.diameter(s);
    for (double slack : r.box_slack) ASSERT_GE(slack, -1e-10 * std::max(1.0, d2));
    ASSERT_TRUE(r.holds());
  }
}

TEST(ConditionProperties, RealDiscIsAnInterval) {
  Rng rng(13);
  for (int trial = 0; trial < 2000; ++trial) {
    const double a = testing::normal(rng);
    const double big_a = a + testing::uniform(rng, 0.01, 5.0);
    const double alpha = testing::uniform(rng, a - 1.0, big_a + 1.0);
    const std::vector<Scalar> alphas{alpha};
    const bool disc = check_scalar_disc(a, big_a, alphas).holds();
    const double tol = 1e-10 * (big_a - a);
    if (alpha < a - tol || alpha > big_a + tol) {
      ASSERT_FALSE(disc) << alpha;
    } else if (alpha >= a && alpha <= big_a) {
      ASSERT_TRUE(disc) << alpha;
    }
  }
}

}  // namespace
}  // namespace gruss
