#include <gtest/gtest.h>

#include "gruss/sharpness.hpp"

namespace gruss {
namespace {

TEST(Extremal, DefaultTwoPointInstanceAttainsTheConstant) {
  const SharpnessResult r = extremal_thm23();
  EXPECT_NEAR(r.achieved_ratio, 1.0, 1e-12);
  EXPECT_NEAR(r.functional, 0.25, 1e-12);
  EXPECT_NEAR(r.bound, 0.25, 1e-12);
  EXPECT_EQ(r.chain_tag, "2.3");
}

TEST(Extremal, SkewedWeightsAndHigherDimension) {
  const SharpnessResult skew =
      extremal_thm23(Space::real(1), 0.3, Vector{0.0}, Vector{1.0});
  EXPECT_NEAR(skew.achieved_ratio, 1.0, 1e-12);

  Vector lo = Vector::zeros(5), hi = Vector::zeros(5);
  for (std::size_t k = 0; k < 5; ++k) {
    lo[k] = -static_cast<double>(k + 1);
    hi[k] = 0.5 * static_cast<double>(k);
  }
  const SharpnessResult high = extremal_thm23(Space::real(5), 0.5, lo, hi);
  EXPECT_NEAR(high.achieved_ratio, 1.0, 1e-12);
}

TEST(Targets, NamesRoundTrip) {
  for (const std::string& name : target_names()) EXPECT_EQ(to_string(parse_target(name)), name);
  EXPECT_THROW(parse_target("thm99"), InvalidInput);
}

TEST(Search, ReachesThresholds) {
  SearchConfig c;
  c.target = SharpnessTarget::Thm23First;
  c.budget = 1000;
  EXPECT_GE(search(c).achieved_ratio, 0.999);
  c.target = SharpnessTarget::Rem24Final;
  c.budget = 5000;
  EXPECT_GE(search(c).achieved_ratio, 0.99);
}

TEST(Search, NeverExceedsTheConstant) {
  for (const std::string& name : target_names()) {
    SearchConfig c;
    c.target = parse_target(name);
    c.n = 4;
    c.dim = 2;
    c.budget = 1500;
    c.seed = 17;
    const SharpnessResult r = search(c);
    EXPECT_LE(r.achieved_ratio, 1.0 + kSoundnessSlack) << name;
    EXPECT_GT(r.achieved_ratio, 0.0) << name;
    const auto [functional, bound] = evaluate_target(c.target, r.witness);
    EXPECT_EQ(functional, r.functional) << name;
    EXPECT_EQ(bound, r.bound) << name;
  }
}

TEST(Search, DeterministicAndThreadIndependent) {
  SearchConfig c;
  c.target = SharpnessTarget::Thm25First;
  c.n = 3;
  c.dim = 2;
  c.budget = 2000;
  c.seed = 99;
  c.threads = 1;
  const SharpnessResult one = search(c);
  c.threads = 4;
  const SharpnessResult four = search(c);
  EXPECT_EQ(one.achieved_ratio, four.achieved_ratio);
  EXPECT_EQ(serialize_instance(one.witness), serialize_instance(four.witness));
  EXPECT_EQ(one.trials, 2000);
}

TEST(Search, MonotoneInBudget) {
  SearchConfig c;
  c.target = SharpnessTarget::FdEqualWeightsMax;
  c.n = 4;
  double previous = 0.0;
  for (std::int64_t budget : {500, 1000, 2500, 4000}) {
    c.budget = budget;
    const double ratio = search(c).achieved_ratio;
    EXPECT_GE(ratio, previous) << budget;
    previous = ratio;
  }
}

TEST(Search, RejectsBadConfiguration) {
  SearchConfig c;
  c.n = 1;
  EXPECT_THROW(search(c), InvalidInput);
  c.n = 2;
  c.budget = 0;
  EXPECT_THROW(search(c), InvalidInput);
}

}  // namespace
}  // namespace gruss
