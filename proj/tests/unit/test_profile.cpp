#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "bubble/errors.hpp"
#include "bubble/profile.hpp"

using namespace bubble;

TEST(RadialProfile, RejectsMismatchedLengths) {
  EXPECT_THROW(RadialProfile({0.1, 0.2}, {1.0}, {0.0, 0.0}, {0.0, 0.0}, ProfileSource::file), DomainError);
}

TEST(RadialProfile, RejectsSingleNode) {
  EXPECT_THROW(RadialProfile({0.1}, {1.0}, {0.0}, {0.0}, ProfileSource::file), DomainError);
}

TEST(RadialProfile, RejectsNonMonotoneGrid) {
  EXPECT_THROW(RadialProfile({0.2, 0.2, 0.3}, {1, 1, 1}, {0, 0, 0}, {0, 0, 0}, ProfileSource::file), DomainError);
  EXPECT_THROW(RadialProfile({0.3, 0.2}, {1, 1}, {0, 0}, {0, 0}, ProfileSource::file), DomainError);
}

TEST(RadialProfile, RejectsAnglesOutsideClosedInterval) {
  EXPECT_THROW(RadialProfile({-0.1, 0.2}, {1, 1}, {0, 0}, {0, 0}, ProfileSource::file), DomainError);
  EXPECT_THROW(RadialProfile({3.0, 3.2}, {1, 1}, {0, 0}, {0, 0}, ProfileSource::file), DomainError);
}

TEST(RadialProfile, RadiusMustBePositiveOnlyInTheInterior) {
  // R = 0 at the poles is the horn torus and must be accepted.
  const std::vector<double> t{0.0, 1.0, std::numbers::pi};
  EXPECT_NO_THROW(RadialProfile(t, {0.0, 1.0, 0.0}, {1, 0, -1}, {0, 0, 0}, ProfileSource::analytic));
  EXPECT_THROW(RadialProfile(t, {0.0, 0.0, 0.0}, {1, 0, -1}, {0, 0, 0}, ProfileSource::analytic), DomainError);
  EXPECT_THROW(RadialProfile(t, {0.0, -1.0, 0.0}, {1, 0, -1}, {0, 0, 0}, ProfileSource::analytic), DomainError);
}

TEST(RadialProfile, RejectsNonFiniteSamples) {
  EXPECT_THROW(RadialProfile({0.1, 0.2}, {1, NAN}, {0, 0}, {0, 0}, ProfileSource::file), DomainError);
  EXPECT_THROW(RadialProfile({0.1, 0.2}, {1, 1}, {INFINITY, 0}, {0, 0}, ProfileSource::file), DomainError);
}

TEST(RadialProfile, HornTorusSamplesCarryExactDerivatives) {
  const auto grid = linspace(0.0, std::numbers::pi, 7);
  const auto p = horn_torus_profile(2.0, grid);
  ASSERT_EQ(p.size(), 7u);
  EXPECT_EQ(p.source(), ProfileSource::analytic);
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_DOUBLE_EQ(p.R()[i], 2.0 * std::sin(grid[i]));
    EXPECT_DOUBLE_EQ(p.dR()[i], 2.0 * std::cos(grid[i]));
    EXPECT_DOUBLE_EQ(p.d2R()[i], -2.0 * std::sin(grid[i]));
  }
}

TEST(Grids, LinspaceHitsBothEndpoints) {
  const auto g = linspace(0.0, std::numbers::pi, 5);
  EXPECT_EQ(g.front(), 0.0);
  EXPECT_EQ(g.back(), std::numbers::pi);
  EXPECT_DOUBLE_EQ(g[2], std::numbers::pi / 2.0);
}

TEST(Grids, MidpointGridAvoidsThePoles) {
  const auto g = midpoint_polar_grid(4);
  ASSERT_EQ(g.size(), 4u);
  EXPECT_DOUBLE_EQ(g[0], std::numbers::pi / 8.0);
  EXPECT_DOUBLE_EQ(g[3], 7.0 * std::numbers::pi / 8.0);
}

TEST(ProfileSource, Names) {
  EXPECT_EQ(to_string(ProfileSource::analytic), "analytic");
  EXPECT_EQ(to_string(ProfileSource::network), "network");
  EXPECT_EQ(to_string(ProfileSource::file), "file");
}
