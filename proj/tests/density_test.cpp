#include "zdcert/density.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <random>

namespace {

namespace d = zdcert::density;
using zdcert::Rational;

TEST(WeightParams, ExponentIdentitiesAreExact) {
  const auto all = d::standard_exact_params(d::CountMode::AllCharacters);
  const auto cls = d::standard_exact_params(d::CountMode::OneClass);
  EXPECT_EQ(all.r(), Rational(2, 3));
  EXPECT_EQ(all.c_one(), Rational(26));
  EXPECT_EQ(all.x0(), Rational(7, 6));
  EXPECT_EQ(cls.x0(), Rational(5, 6));
  EXPECT_EQ(all.lambda_exponent(), Rational(8, 3));
  EXPECT_EQ(cls.lambda_exponent(), Rational(2));
  EXPECT_EQ(all.gap_exponent(), Rational(5, 12));
  EXPECT_EQ(cls.gap_exponent(), Rational(5, 12));
  EXPECT_EQ(Rational(25, 7) - all.lambda_exponent(), Rational(19, 21));
}

TEST(WeightParams, Validation) {
  d::WeightParams p = d::standard_params();
  p.c1 = 0.0;
  EXPECT_THROW(p.validate(), zdcert::InvalidParams);
  p = d::standard_params();
  p.phi = -0.1;
  EXPECT_THROW(d::weighted_sum_bound(p, 1.0), zdcert::InvalidParams);
  EXPECT_THROW(d::weighted_sum_bound(d::standard_params(), 0.0), zdcert::DomainError);
}

// Values computed with the closed form in long double outside the library.
TEST(WeightedSum, ThresholdTable) {
  const auto p = d::standard_params();
  EXPECT_NEAR(d::weighted_sum_bound(p, 1.311), 22.280868, 1e-5);
  EXPECT_NEAR(d::weighted_sum_bound(p, 2.421), 15.595984, 1e-5);
  EXPECT_NEAR(d::weighted_sum_bound(p, 3.96), 10.382720, 1e-5);
  EXPECT_NEAR(d::weighted_sum_bound(p, 5.8), 7.079436, 1e-5);
  EXPECT_DOUBLE_EQ(d::weighted_sum_bound(d::standard_exact_params(), 2.0), d::weighted_sum_bound(p, 2.0));
}

TEST(WeightedSum, DecreasingInLambda) {
  const auto p = d::standard_params();
  double prev = d::weighted_sum_bound(p, 0.5);
  for (int i = 1; i <= 200; ++i) {
    const double v = d::weighted_sum_bound(p, 0.5 + 0.05 * i);
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(Envelope, CertifiedConstants) {
  EXPECT_DOUBLE_EQ(d::certified_envelope_constant(0), 22.281);
  EXPECT_DOUBLE_EQ(d::certified_envelope_constant(1), 15.6);
  EXPECT_DOUBLE_EQ(d::certified_envelope_constant(2), 10.4);
  EXPECT_NEAR(d::certified_envelope_constant(3), 7.079436, 1e-5);
  EXPECT_THROW(d::certified_envelope_constant(4), zdcert::DomainError);
}

TEST(Envelope, ModesAndMonotonicity) {
  const auto all = d::standard_params(d::CountMode::AllCharacters);
  const auto cls = d::standard_params(d::CountMode::OneClass);
  EXPECT_NEAR(d::count_envelope(all, 3.96) / (10.4 * std::exp(8.0 * 3.96 / 3.0)), 1.0, 1e-14);
  EXPECT_NEAR(d::count_envelope(cls, 5.8) / std::exp(2.0 * 5.8), d::certified_envelope_constant(3), 1e-9);
  double prev = d::count_envelope(all, 1.311);
  for (int i = 1; i <= 100; ++i) {
    const double v = d::count_envelope(all, 1.311 + 0.06 * i);
    EXPECT_GE(v, prev);
    prev = v;
  }
  EXPECT_THROW(d::count_envelope(all, 1.3), zdcert::DomainError);
}

TEST(Context, CaseOneBlock) {
  const d::DensityContext ctx(0.68, 0.7, 1.311, 1.0 / 3.0);
  EXPECT_NEAR(ctx.transform_at_floor(), 1.569919, 1e-6);
  EXPECT_NEAR(ctx.transform_at_Lambda(), 0.588194, 1e-6);
  EXPECT_NEAR(ctx.psi(), 0.374665, 1e-6);
  EXPECT_NEAR(ctx.xi(), 0.079268, 1e-6);
  EXPECT_NEAR(ctx.delta(), 0.295397, 1e-6);
  EXPECT_TRUE(ctx.all_count_admissible());
  const auto b = d::deficiency_budget(ctx);
  EXPECT_NEAR(b.normalized, 1.558466, 1e-6);
  EXPECT_NEAR(b.unnormalized, 2.446666, 1e-6);
}

TEST(Context, AdmissibilityGuards) {
  EXPECT_THROW(d::DensityContext(0.9, 0.7, 1.0, 1.0 / 3.0), zdcert::InadmissibleContext);
  EXPECT_THROW(d::DensityContext(0.0, 0.5, 6.6, 1.0 / 3.0), zdcert::InadmissibleContext);
  EXPECT_THROW(d::DensityContext(1.0, 1.0, 0.5, 1.0 / 3.0), zdcert::InvalidParams);
  EXPECT_THROW(d::DensityContext(-0.1, 1.0, 0.5, 1.0 / 3.0), zdcert::InvalidParams);
  EXPECT_THROW(d::DensityContext(0.1, 0.0, 0.5, 1.0 / 3.0), zdcert::InvalidParams);
  EXPECT_NO_THROW(d::DensityContext(0.75, 0.6, 0.75 + 7.8, 1.0 / 3.0));
}

TEST(Counts, ClosedFormArithmetic) {
  EXPECT_NEAR(d::all_zero_count_from(0.1, 0.5), 6.0, 1e-12);
  EXPECT_NEAR(d::class_zero_count_from(0.37796), 7.000, 1e-3);
  EXPECT_THROW(d::all_zero_count_from(0.25, 0.5), zdcert::InadmissibleContext);
  EXPECT_THROW(d::class_zero_count_from(0.0), zdcert::InadmissibleContext);
  EXPECT_DOUBLE_EQ(d::budget_from(1.0, 1.5), 0.0);
  EXPECT_THROW(d::budget_from(0.25, 0.5), zdcert::InadmissibleContext);
}

TEST(Counts, AllAndClassBoundsAgreeAlgebraically) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> l0(0.0, 0.9), xs(0.7, 1.7), gap(0.0, 1.0);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const double lambda0 = l0(rng), x = xs(rng);
    if (lambda0 / x > 1.25) continue;
    const d::DensityContext ctx(lambda0, x, lambda0 + gap(rng), 1.0 / 3.0);
    if (!ctx.all_count_admissible()) continue;
    const double h = d::all_zero_count_bound(ctx);
    const double cls = d::class_zero_count_bound(ctx);
    const double xi = ctx.xi(), dl = ctx.delta();
    EXPECT_NEAR(h / (cls * (1.0 - xi) * dl * dl / (dl * dl - xi)), 1.0, 1e-12);
    ++checked;
  }
  EXPECT_GT(checked, 200);
}

TEST(Counts, ClassCountAtFloor) {
  // At Lambda = lambda0 the numerator is F(0) = G(0) = 8/9.
  const d::DensityContext ctx(0.702, 1.0, 0.702, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(ctx.transform_at_Lambda(), 8.0 / 9.0);
  EXPECT_NEAR(ctx.psi(), (8.0 / 9.0) / zdcert::kernel::transform(-0.702), 1e-15);
  EXPECT_GE(d::class_zero_count_bound(ctx), 1.0);
  EXPECT_LT(d::class_zero_count_bound(d::DensityContext(6.0 / 7.0, 1.58, 1.47, 1.0 / 3.0)), 7.0);
}

constexpr double kSparseFloor = 6.0 / 7.0 - 1e-8;

TEST(Schedule, PrintedScales) {
  struct Row {
    int n;
    double x;
    double expected;
  };
  const std::array<Row, 10> rows{{{7, 1.58, 1.474616},
                                  {8, 1.6, 1.615118},
                                  {9, 1.62, 1.739263},
                                  {10, 1.66, 1.850080},
                                  {11, 1.66, 1.950322},
                                  {12, 1.68, 2.041238},
                                  {13, 1.68, 2.124652},
                                  {14, 1.68, 2.201410},
                                  {15, 1.68, 2.272432},
                                  {16, 1.68, 2.338466}}};
  for (const auto& r : rows) {
    EXPECT_NEAR(d::min_lambda_for_count(r.n, kSparseFloor, r.x, 1.0 / 3.0), r.expected, 2e-6) << r.n;
  }
}

TEST(Schedule, InversionRoundTrip) {
  const double at_floor =
      d::class_zero_count_bound(d::DensityContext(kSparseFloor, 1.2, kSparseFloor, 1.0 / 3.0));
  EXPECT_THROW(d::min_lambda_for_count(static_cast<int>(at_floor), kSparseFloor, 1.2, 1.0 / 3.0),
               zdcert::DomainError);
  for (int n = static_cast<int>(at_floor) + 1; n <= 40; ++n) {
    const double L = d::min_lambda_for_count(n, kSparseFloor, 1.2, 1.0 / 3.0);
    const double c = d::class_zero_count_bound(d::DensityContext(kSparseFloor, 1.2, L, 1.0 / 3.0));
    EXPECT_GE(c, n - 0.01) << n;
    EXPECT_LE(c, n) << n;
  }
  EXPECT_THROW(d::min_lambda_for_count(1, kSparseFloor, 1.2, 1.0 / 3.0), zdcert::InvalidParams);
}

TEST(Schedule, GridOptimizedValues) {
  const auto grid = d::default_scale_grid();
  ASSERT_EQ(grid.size(), 111u);
  EXPECT_NEAR(d::schedule_bound(17, kSparseFloor, 1.0 / 3.0, grid).value, 2.4002, 1e-4);
  EXPECT_NEAR(d::schedule_bound(31, kSparseFloor, 1.0 / 3.0, grid).value, 2.988, 1e-3);
  EXPECT_GE(d::schedule_bound(32, kSparseFloor, 1.0 / 3.0, grid).value, 3.0);
}

TEST(Bands, GridMinimum) {
  const auto grid = d::default_scale_grid();
  const auto single = d::band_count_bound(3.0, kSparseFloor, 1.0 / 3.0, {1.2});
  EXPECT_DOUBLE_EQ(single.value, d::class_zero_count_bound(d::DensityContext(kSparseFloor, 1.2, 3.0, 1.0 / 3.0)));
  EXPECT_EQ(single.x, 1.2);
  const auto full = d::band_count_bound(3.0, kSparseFloor, 1.0 / 3.0, grid);
  const auto half = d::band_count_bound(3.0, kSparseFloor, 1.0 / 3.0, {1.0, 1.2, 1.4, 1.6});
  EXPECT_LE(full.value, half.value);
  EXPECT_LE(full.value, single.value);
  EXPECT_EQ(std::floor(full.value), 31.0);
  EXPECT_THROW(d::band_count_bound(3.0, kSparseFloor, 1.0 / 3.0, {}), zdcert::InvalidParams);
  EXPECT_THROW(d::band_count_bound(12.0, 0.0, 1.0 / 3.0, {0.6}), zdcert::InadmissibleContext);
}

}  // namespace
