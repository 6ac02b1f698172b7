#include "shadowdyn/growth.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "support.hpp"

namespace shadowdyn {
namespace {

const double kLnPhi = std::log(std::numbers::phi);

TEST(Growth, SeriesByHand) {
  // x² + y² along LL: created values 5, 13
  const auto s = growth_series(root_triple({1, 0, 1}), PathWord::parse("LL"));
  ASSERT_EQ(s.size(), 2u);
  EXPECT_NEAR(s[0], std::log(5.0), 1e-14);
  EXPECT_NEAR(s[1], std::log(10.0) / 2, 1e-14);
  // (x − 2y)(x − 3y) vanishes at (2, 1), the region created by L
  EXPECT_ERRC(growth_series(root_triple({1, -5, 6}), PathWord::parse("L")),
              Errc::ZeroValueEncountered);
}

TEST(Growth, DefiniteFormOnGoldenPath) {
  EXPECT_NEAR(topograph_growth_exponent({1, 1, 1}, PathSpec::golden(), 40), 2 * kLnPhi, 0.05);
}

TEST(Growth, RationalPathIsSubexponential) {
  const auto spec = PathSpec::from_cf(ContinuedFraction::parse("0;3,2"));
  EXPECT_LT(topograph_growth_exponent({1, 0, 1}, spec, 500), 0.05);
}

TEST(Growth, RiverHasNoGrowth) {
  EXPECT_LT(river_growth_exponent({17, -12, 2}, 20), 0.05);
  EXPECT_LT(river_growth_exponent({1, 0, -2}, 20), 0.05);
}

TEST(RelativeGrowth, GoldenPath) {
  const auto ctx = PellContext::for_d(2);
  EXPECT_NEAR(relative_shadow_growth(ctx, PathSpec::golden(), 30), kLnPhi, 0.05);
  const auto series = relative_growth_series(ctx, PathSpec::golden(), 30);
  ASSERT_EQ(series.size(), 30u);
  double best = 0;
  for (std::int64_t k = window_start(30); k <= 30; ++k) best = std::max(best, series[k - 1]);
  EXPECT_EQ(best, relative_shadow_growth(ctx, PathSpec::golden(), 30));
}

TEST(RelativeGrowth, RationalPath) {
  const auto ctx = PellContext::for_d(3, 2);
  const auto spec = PathSpec::from_cf(ContinuedFraction::parse("0;3,2"));
  EXPECT_LT(relative_shadow_growth(ctx, spec, 400), 0.05);
}

TEST(RelativeGrowth, LogRatioFromExactIntegers) {
  const auto ctx = PellContext::for_d(2);
  // a = 2: x = 17, x̃ = 2·2·6 = 24
  EXPECT_NEAR(log_shadow_ratio(ctx, 2), std::log(24.0 / 17.0), 1e-14);
  EXPECT_ERRC(log_shadow_ratio(ctx, 0), Errc::ZeroValueEncountered);
}

TEST(ShadowRatio, Ratio) {
  EXPECT_EQ(shadow_ratio(PellContext::for_d(2), 1), Rational(2, 3));
  EXPECT_EQ(shadow_ratio(PellContext::for_d(2, 0), 5), 0);
  const Rational r = shadow_ratio(PellContext::for_d(2), 30);
  EXPECT_LT(std::abs(r.get_d() - 1 / std::numbers::sqrt2), 1e-9);
  EXPECT_ERRC(shadow_ratio(PellContext::for_d(2), 0), Errc::InvalidArgument);
}

TEST(ShadowRatio, ConvergesForOtherParameters) {
  for (std::int64_t d : {3, 5, 13}) {
    for (std::int64_t m : {-2, 3}) {
      const Rational r = shadow_ratio(PellContext::for_d(d, m), 25);
      EXPECT_NEAR(r.get_d(), static_cast<double>(m) / std::sqrt(static_cast<double>(d)), 1e-9);
    }
  }
}

}  // namespace
}  // namespace shadowdyn
