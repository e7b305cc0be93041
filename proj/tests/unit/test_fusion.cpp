#include <gtest/gtest.h>

#include <random>

#include "guideglass/fusion.hpp"

using namespace guideglass;

namespace {

Candidate cand(double alpha, double width, int u_start = 0)
{
  return {alpha, width, u_start, u_start + 10, 2.0};
}

CandidateSet random_set(std::mt19937_64 & rng)
{
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_real_distribution<double> alpha(-0.5, 0.5);
  std::uniform_real_distribution<double> width(0.6, 3.0);
  CandidateSet s;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    s.candidates.push_back(cand(alpha(rng), width(rng), 20 * i));
  }
  return s;
}

}  // namespace

TEST(SelectDirection, EmptySetIsNull)
{
  EXPECT_FALSE(select_direction({}, FusionConfig{}).has_value());
  EXPECT_TRUE(fuse_ultrasonic(std::nullopt, UltrasonicReading::max_range(), FusionConfig{}).is_null());
}

TEST(SelectDirection, SingletonIsChosen)
{
  CandidateSet s;
  s.candidates.push_back(cand(-0.3, 1.1));
  const auto best = select_direction(s, FusionConfig{});
  ASSERT_TRUE(best);
  EXPECT_EQ(best->alpha, -0.3);
}

TEST(SelectDirection, CostExample)
{
  FusionConfig cfg;
  cfg.lambda = 1.0;
  cfg.mu = 1.0;
  CandidateSet s;
  s.candidates = {cand(0.2, 0.8), cand(0.4, 2.0, 50)};
  EXPECT_NEAR(direction_cost(s.candidates[0], cfg), 1.45, 1e-12);
  EXPECT_NEAR(direction_cost(s.candidates[1], cfg), 0.9, 1e-12);
  const auto best = select_direction(s, cfg);
  ASSERT_TRUE(best);
  EXPECT_EQ(best->alpha, 0.4);
}

TEST(SelectDirection, ZeroWidthThrows)
{
  CandidateSet s;
  s.candidates = {cand(0.1, 1.0), cand(0.2, 0.0)};
  EXPECT_THROW(select_direction(s, FusionConfig{}), std::invalid_argument);
}

TEST(SelectDirection, TieBreaksBySmallerAngleThenLeftmost)
{
  FusionConfig cfg;
  cfg.lambda = 0.0;
  cfg.mu = 1.0;
  CandidateSet s;
  s.candidates = {cand(0.3, 1.0, 0), cand(-0.1, 1.0, 100), cand(0.1, 1.0, 200)};
  EXPECT_EQ(select_direction(s, cfg)->u_start, 100);
}

TEST(SelectDirection, ScalingWeightsKeepsArgmin)
{
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> w(0.0, 3.0);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int i = 0; i < 5000; ++i) {
    const CandidateSet s = random_set(rng);
    FusionConfig a;
    a.lambda = w(rng);
    a.mu = w(rng) + 1e-3;
    FusionConfig b = a;
    const double k = scale(rng);
    b.lambda *= k;
    b.mu *= k;
    EXPECT_EQ(select_direction(s, a)->u_start, select_direction(s, b)->u_start);
  }
}

TEST(SelectDirection, DegenerateWeightsMatchBruteForce)
{
  std::mt19937_64 rng(4);
  for (int i = 0; i < 5000; ++i) {
    const CandidateSet s = random_set(rng);
    double widest = 0.0;
    double straightest = 10.0;
    for (const Candidate & c : s.candidates) {
      widest = std::max(widest, c.width_m);
      straightest = std::min(straightest, std::abs(c.alpha));
    }
    FusionConfig only_width;
    only_width.lambda = 0.0;
    only_width.mu = 1.0;
    EXPECT_EQ(select_direction(s, only_width)->width_m, widest);

    FusionConfig only_angle;
    only_angle.lambda = 1.0;
    only_angle.mu = 0.0;
    EXPECT_EQ(std::abs(select_direction(s, only_angle)->alpha), straightest);
  }
}

TEST(SelectDirection, Deterministic)
{
  std::mt19937_64 rng(6);
  for (int i = 0; i < 1000; ++i) {
    const CandidateSet s = random_set(rng);
    const auto a = select_direction(s, FusionConfig{});
    const auto b = select_direction(s, FusionConfig{});
    EXPECT_EQ(a->u_start, b->u_start);
  }
}

TEST(FuseUltrasonic, OutsideConePassesUnchanged)
{
  const GuidanceDecision d = fuse_ultrasonic(cand(deg_to_rad(20.0), 1.0), UltrasonicReading::at(0.3), FusionConfig{});
  ASSERT_FALSE(d.is_null());
  EXPECT_EQ(*d.direction, deg_to_rad(20.0));
  EXPECT_FALSE(d.gated_by_ultrasonic);
}

TEST(FuseUltrasonic, CloseEchoInsideConeGivesNull)
{
  const GuidanceDecision d = fuse_ultrasonic(cand(0.0, 1.0), UltrasonicReading::at(0.8), FusionConfig{});
  EXPECT_TRUE(d.is_null());
  EXPECT_TRUE(d.gated_by_ultrasonic);
}

TEST(FuseUltrasonic, MaxRangePasses)
{
  const GuidanceDecision d = fuse_ultrasonic(cand(0.0, 1.0), UltrasonicReading::max_range(), FusionConfig{});
  ASSERT_FALSE(d.is_null());
  EXPECT_EQ(*d.direction, 0.0);
  EXPECT_EQ(*d.chosen_width_m, 1.0);
}

TEST(FuseUltrasonic, BoundariesAreInclusiveForTheCone)
{
  const FusionConfig cfg;
  EXPECT_TRUE(fuse_ultrasonic(cand(cfg.ultra_half_fov, 1.0), UltrasonicReading::at(1.0), cfg).is_null());
  EXPECT_TRUE(fuse_ultrasonic(cand(0.0, 1.0), UltrasonicReading::at(cfg.delta), cfg).is_null());
  EXPECT_FALSE(fuse_ultrasonic(cand(0.0, 1.0), UltrasonicReading::at(cfg.delta + 1e-9), cfg).is_null());
}

TEST(FuseUltrasonic, GateOnlyRemoves)
{
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> alpha(-0.6, 0.6);
  std::uniform_real_distribution<double> dist(0.03, 5.0);
  std::bernoulli_distribution none(0.2);
  for (int i = 0; i < 10000; ++i) {
    const Candidate c = cand(alpha(rng), 1.0);
    const UltrasonicReading r = none(rng) ? UltrasonicReading::max_range() : UltrasonicReading::at(dist(rng));
    const GuidanceDecision d = fuse_ultrasonic(c, r, FusionConfig{});
    if (!d.is_null()) {
      EXPECT_EQ(*d.direction, c.alpha);
    }
  }
}

TEST(FusionConfig, Validation)
{
  EXPECT_NO_THROW(FusionConfig{}.validate());
  FusionConfig both_zero;
  both_zero.lambda = 0.0;
  both_zero.mu = 0.0;
  EXPECT_THROW(both_zero.validate(), std::invalid_argument);
  FusionConfig negative;
  negative.mu = -1.0;
  EXPECT_THROW(negative.validate(), std::invalid_argument);
  FusionConfig cone;
  cone.ultra_half_fov = 0.0;
  EXPECT_THROW(cone.validate(), std::invalid_argument);
}
