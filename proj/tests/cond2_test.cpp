#include "zdcert/cond2.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

namespace {

namespace c2 = zdcert::cond2;

TEST(Slack, IdentityAndNormalization) {
  for (double t : {0.0, 0.3, 3.0, 40.0}) EXPECT_EQ(c2::slack(0.0, 0.0, t), 0.0);
  for (double a : {0.0, 0.5, 4.0, 13.0}) {
    for (double b : {0.0, 0.1, 0.9, 1.25}) EXPECT_NEAR(c2::slack(a, b, 0.0), 0.0, 1e-14) << a << " " << b;
  }
}

TEST(Slack, PositiveAtInteriorPoint) { EXPECT_GT(c2::slack(1.0, 1.0, 4.0), 0.0); }

TEST(Slack, EvenInT) {
  for (double a : {0.0, 0.7, 6.0, 13.0}) {
    for (double b : {0.05, 0.6, 1.25}) {
      for (double t : {0.4, 2.0, 9.5, 33.0}) EXPECT_NEAR(c2::slack(a, b, t), c2::slack(a, b, -t), 1e-12);
    }
  }
}

TEST(Slack, NormalizedRealPartIncreasingForSmallT) {
  for (int it = 0; it <= 40; ++it) {
    const double t = std::numbers::pi / 2.0 * it / 40.0;
    double prev = c2::normalized_real_part(-3.0, t);
    for (int ia = 1; ia <= 800; ++ia) {
      const double a = -3.0 + 16.0 * ia / 800.0;
      const double cur = c2::normalized_real_part(a, t);
      EXPECT_GE(cur - prev, -1e-10) << "a=" << a << " t=" << t;
      prev = cur;
    }
  }
}

TEST(Lattice, ClosedEndpoints) {
  const auto l = c2::lattice({8.0, 14.0}, 0.005);
  ASSERT_EQ(l.size(), 1201u);
  EXPECT_EQ(l.front(), 8.0);
  EXPECT_NEAR(l.back(), 14.0, 1e-12);
  EXPECT_EQ(c2::lattice({0.0, 0.0}, 0.01).size(), 1u);
}

TEST(Region, ValidationRejectsBadBoxes) {
  c2::GridRegion r{"x", {0.0, 14.0}, {0.0, 0.1}, {1.0, 2.0}, {}};
  EXPECT_THROW(r.validate(), zdcert::InvalidParams);
  r.a_range = {0.0, 1.0};
  r.b_range = {0.0, 1.3};
  EXPECT_THROW(r.validate(), zdcert::InvalidParams);
  r.b_range = {0.2, 0.1};
  EXPECT_THROW(r.validate(), zdcert::InvalidParams);
  r.b_range = {0.0, 0.1};
  r.steps.t = 0.0;
  EXPECT_THROW(r.validate(), zdcert::InvalidParams);
  EXPECT_THROW(c2::default_region("4"), zdcert::InvalidParams);
}

TEST(VerifyRegion, DegenerateIdentityRegion) {
  const c2::GridRegion r{"deg", {0.0, 0.0}, {0.0, 0.0}, {2.0, 9.0}, {0.01, 0.01, 0.01}};
  const auto pass = c2::verify_region(r, 0.0);
  EXPECT_EQ(pass.min_slack, 0.0);
  EXPECT_TRUE(pass.passed);
  EXPECT_EQ(pass.points_checked, 701u);
  const auto fail = c2::verify_region(r, 1e-9);
  EXPECT_FALSE(fail.passed);
}

// Direct triple loop on a small box; the separable reduction must give the
// same minimum and argmin.
TEST(VerifyRegion, SeparableReductionMatchesBruteForce) {
  const c2::GridRegion r{"small", {0.0, 2.0}, {0.0, 1.25}, {1.6, 6.0}, {0.25, 0.05, 0.1}};
  const auto cert = c2::verify_region(r, 0.0, 3);
  double best = INFINITY, best_nt = INFINITY;
  for (double t : c2::lattice(r.t_range, r.steps.t)) {
    for (double a : c2::lattice(r.a_range, r.steps.a)) {
      for (double b : c2::lattice(r.b_range, r.steps.b)) {
        const double s = c2::slack(a, b, t);
        best = std::min(best, s);
        if (a != 0.0 || b != 0.0) best_nt = std::min(best_nt, s);
      }
    }
  }
  EXPECT_EQ(cert.min_slack, best);
  EXPECT_EQ(cert.min_nontrivial_slack, best_nt);
  EXPECT_DOUBLE_EQ(c2::slack(cert.nontrivial_argmin.a, cert.nontrivial_argmin.b, cert.nontrivial_argmin.t),
                   best_nt);
  EXPECT_EQ(cert.points_checked, 9u * 26u * 45u);
}

TEST(VerifyRegion, IndependentOfWorkerCount) {
  const c2::GridRegion r{"w", {0.0, 13.0}, {0.0, 1.25}, {1.6, 3.0}, {0.1, 0.05, 0.01}};
  const auto one = c2::verify_region(r, 0.0, 1);
  for (unsigned w : {2u, 5u, 16u}) {
    const auto many = c2::verify_region(r, 0.0, w);
    EXPECT_EQ(one.min_slack, many.min_slack);
    EXPECT_EQ(one.min_nontrivial_slack, many.min_nontrivial_slack);
    EXPECT_EQ(one.nontrivial_argmin.t, many.nontrivial_argmin.t);
    EXPECT_EQ(one.nontrivial_argmin.a, many.nontrivial_argmin.a);
    EXPECT_EQ(one.nontrivial_argmin.b, many.nontrivial_argmin.b);
  }
}

TEST(VerifyRegion, DefaultRegionOnePasses) {
  const auto cert = c2::verify_region(c2::default_region("1"));
  EXPECT_TRUE(cert.passed);
  EXPECT_EQ(cert.min_slack, 0.0);
  EXPECT_NEAR(cert.min_nontrivial_slack, 4.78e-6, 2e-8);
  EXPECT_EQ(cert.points_checked, 108015u);
}

TEST(VerifyRegion, ViolationCarriesLatticePoint) {
  // Margin above the achievable slack forces a failing certificate.
  const auto cert = c2::verify_region(c2::default_region("1"), 1e-3);
  EXPECT_FALSE(cert.passed);
  EXPECT_EQ(cert.nontrivial_argmin.a, 0.0);
  EXPECT_GE(cert.nontrivial_argmin.t, 14.0);
}

// h(1.25) is 0.0043440 (mpmath quadrature), below the stated 1/90, so that
// check reports failure; every other check passes.
TEST(Reductions, ComputedValues) {
  const auto checks = c2::lemma_reduction_checks();
  ASSERT_GE(checks.size(), 7u);
  for (const auto& c : checks) {
    if (c.name == "h(1.25) > 1/90") {
      EXPECT_NEAR(c.value, 0.00434398082917, 1e-12);
      EXPECT_FALSE(c.passed);
      EXPECT_NE(c.detail.find("h decreasing"), std::string::npos);
    } else {
      EXPECT_TRUE(c.passed) << c.name << " value=" << c.value;
    }
  }
  const double b0 = 0.5 * std::log(8192.0 / 975.0);
  EXPECT_GT(b0, 0.14);
  EXPECT_LT(b0, 1.25);
}

TEST(Reductions, EndpointMinimumValue) {
  for (const auto& c : c2::lemma_reduction_checks()) {
    if (c.name.rfind("min(h~", 0) == 0) {
      EXPECT_NEAR(c.value, 0.028, 1e-3);
    }
  }
}

TEST(SpotCheck, LargeTBoundsHold) {
  const auto checks = c2::analytic_region_spotcheck(20000, 42);
  ASSERT_EQ(checks.size(), 3u);
  for (const auto& c : checks) {
    EXPECT_TRUE(c.passed) << c.name << " min=" << c.min_slack;
    EXPECT_EQ(c.samples, 20000u);
  }
  EXPECT_THROW(c2::analytic_region_spotcheck(0), zdcert::InvalidParams);
}

TEST(SpotCheck, FarPointSlackSmallButPositive) {
  const double s = c2::slack(0.0, 0.1, 1e6);
  EXPECT_GT(s, 0.0);
  EXPECT_LT(s, 1e-9);
}

}  // namespace
