#pragma once

// Closed-form zero-density bounds in the normalized coordinate lambda:
// weighted sums and their envelopes, zero counts, the weighted deficiency
// budget, and the per-index zero lower bounds obtained by inverting counts.
// Asymptotic epsilon terms are dropped throughout.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "zdcert/error.hpp"
#include "zdcert/facts.hpp"
#include "zdcert/kernel.hpp"
#include "zdcert/rational.hpp"
#include "zdcert/root_finding.hpp"

namespace zdcert::density {

enum class CountMode { AllCharacters, OneClass };

inline double as_double(double v) { return v; }
inline double as_double(const Rational& v) { return v.to_double(); }

/// Parameters (phi, c1, c2, kappa) of the weighted-sum bound. T is double or
/// Rational; the Rational form makes the exponent identities exact.
template <typename T>
struct BasicWeightParams {
  T phi;
  T c1;
  T c2;
  T kappa;
  CountMode mode = CountMode::AllCharacters;

  void validate() const {
    if (phi < T(0) || !(c1 > T(0)) || !(c2 > T(0)) || !(kappa > T(0))) {
      throw InvalidParams("weight parameters: need phi >= 0 and c1, c2, kappa > 0");
    }
  }

  T r() const { return phi + c1 + c2; }
  T x0() const {
    return mode == CountMode::AllCharacters ? T(2) * phi + T(3) * c1 + c2 : phi + T(3) * c1 + c2;
  }
  T c_one() const { return (T(2) * phi + T(2) * c1 + c2) / (T(2) * c1 * c2); }
  /// Coefficient of lambda in the weight exponent, 2(x0 + kappa).
  T lambda_exponent() const { return T(2) * (x0() + kappa); }
  /// Coefficient of Lambda - lambda in the weight exponent, (r + kappa)/2.
  T gap_exponent() const { return (r() + kappa) / T(2); }
};

using WeightParams = BasicWeightParams<double>;
using ExactWeightParams = BasicWeightParams<Rational>;

/// (phi, c1, c2, kappa) = (1/3, 1/12, 1/4, 1/6).
inline ExactWeightParams standard_exact_params(CountMode mode = CountMode::AllCharacters) {
  return {Rational(1, 3), Rational(1, 12), Rational(1, 4), Rational(1, 6), mode};
}

inline WeightParams standard_params(CountMode mode = CountMode::AllCharacters) {
  const auto e = standard_exact_params(mode);
  return {e.phi.to_double(), e.c1.to_double(), e.c2.to_double(), e.kappa.to_double(), mode};
}

/// Bound C1 sqrt(B_{phi,kappa}(Lambda) B_{phi,r}(Lambda)) / kappa on
///   sum_j exp(-2(x0+kappa) lambda_j - ((r+kappa)/2) max(0, Lambda - lambda_j)).
template <typename T>
double weighted_sum_bound(const BasicWeightParams<T>& p, double Lambda) {
  p.validate();
  if (!(Lambda > 0.0)) throw DomainError("weighted_sum_bound: Lambda must be positive");
  const double phi = as_double(p.phi);
  const double kappa = as_double(p.kappa);
  const double bk = kernel::density_weight(phi, kappa, Lambda);
  const double br = kernel::density_weight(phi, as_double(p.r()), Lambda);
  return as_double(p.c_one()) * std::sqrt(bk * br) / kappa;
}

/// The constant used for Lambda >= Lambda_i: the larger of the published E_i
/// and the recomputed bound at Lambda_i, so a published value that is too
/// small never enters downstream arithmetic.
inline double certified_envelope_constant(std::size_t i) {
  if (i >= facts::kThresholds.size()) throw DomainError("envelope threshold index out of range");
  const double computed = weighted_sum_bound(standard_params(), facts::kThresholds[i].value);
  return std::max(facts::kEnvelopeConstants[i].value, computed);
}

/// Index of the largest threshold Lambda_i <= Lambda.
inline std::size_t envelope_threshold_index(double Lambda) {
  if (!(Lambda >= facts::kThresholds[0].value)) {
    throw DomainError("count envelope needs Lambda >= " + std::to_string(facts::kThresholds[0].value));
  }
  std::size_t i = 0;
  while (i + 1 < facts::kThresholds.size() && facts::kThresholds[i + 1].value <= Lambda) ++i;
  return i;
}

/// N(Lambda) < E_i exp(c Lambda) for Lambda >= Lambda_i, where c = 2(x0+kappa).
/// Since N is nondecreasing, the bounds at later thresholds also apply; the
/// minimum over them is nondecreasing in Lambda.
template <typename T>
double count_envelope(const BasicWeightParams<T>& p, double Lambda) {
  p.validate();
  const double c = as_double(p.lambda_exponent());
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t j = envelope_threshold_index(Lambda); j < facts::kThresholds.size(); ++j) {
    const double at = std::max(Lambda, facts::kThresholds[j].value);
    best = std::min(best, certified_envelope_constant(j) * std::exp(c * at));
  }
  return best;
}

/// Largest relative step outside the admissible box that is still accepted,
/// so that boundary values such as 0.75/0.6 are not rejected by rounding.
inline constexpr double kBoxSlack = 1e-12;
inline constexpr double kMaxLeftShift = 1.25;
inline constexpr double kMaxRightShift = 13.0;

/// lambda0/x <= 1.25 and (Lambda - lambda0)/x <= 13.
inline bool admissible(double lambda0, double x, double Lambda) {
  return lambda0 >= 0.0 && x > 0.0 && Lambda >= lambda0 && lambda0 / x <= kMaxLeftShift + kBoxSlack &&
         (Lambda - lambda0) / x <= kMaxRightShift + kBoxSlack;
}

/// (lambda0, x, Lambda, phi) with the derived psi, xi and Delta.
class DensityContext {
 public:
  DensityContext(double lambda0, double x, double Lambda, double phi)
      : lambda0_(lambda0), scale_(x), Lambda_(Lambda), phi_(phi) {
    if (!(lambda0 >= 0.0) || !(phi >= 0.0) || !std::isfinite(Lambda)) {
      throw InvalidParams("density context: need lambda0 >= 0, phi >= 0, finite Lambda");
    }
    if (!(Lambda >= lambda0)) throw InvalidParams("density context: Lambda below lambda0");
    if (!admissible(lambda0, x, Lambda)) {
      throw InadmissibleContext("density context outside the certified box: lambda0/x = " +
                                std::to_string(lambda0 / x) +
                                ", (Lambda - lambda0)/x = " + std::to_string((Lambda - lambda0) / x));
    }
    g_minus_ = kernel::scaled_transform(scale_, -lambda0_);
    g_Lambda_ = kernel::scaled_transform(scale_, Lambda_ - lambda0_);
  }

  double lambda0() const { return lambda0_; }
  double x() const { return scale_.x(); }
  const kernel::KernelScale& scale() const { return scale_; }
  double Lambda() const { return Lambda_; }
  double phi() const { return phi_; }

  /// F_x(-lambda0) = G(-lambda0/x).
  double transform_at_floor() const { return g_minus_; }
  /// F_x(Lambda - lambda0).
  double transform_at_Lambda() const { return g_Lambda_; }
  double psi() const { return g_Lambda_ / g_minus_; }
  /// f_x(0) phi / (2 F_x(-lambda0)).
  double xi() const { return scale_.f_at_zero() * phi_ / (2.0 * g_minus_); }
  double delta() const { return psi() - xi(); }

  bool all_count_admissible() const { return delta() * delta() > xi(); }
  bool class_count_admissible() const { return delta() > 0.0; }

 private:
  double lambda0_;
  kernel::KernelScale scale_;
  double Lambda_;
  double phi_;
  double g_minus_ = 0.0;
  double g_Lambda_ = 0.0;
};

/// (1 - xi)/(Delta^2 - xi).
inline double all_zero_count_from(double xi, double delta) {
  const double den = delta * delta - xi;
  if (!(den > 0.0)) throw InadmissibleContext("all-character count bound vacuous: Delta^2 <= xi");
  return (1.0 - xi) / den;
}

/// 1/Delta^2.
inline double class_zero_count_from(double delta) {
  if (!(delta > 0.0)) throw InadmissibleContext("class count bound vacuous: Delta <= 0");
  return 1.0 / (delta * delta);
}

/// Number of zeros of all L-functions with lambda <= Lambda.
inline double all_zero_count_bound(const DensityContext& ctx) { return all_zero_count_from(ctx.xi(), ctx.delta()); }

/// Number of zeros with lambda <= Lambda within one class of characters.
inline double class_zero_count_bound(const DensityContext& ctx) { return class_zero_count_from(ctx.delta()); }

struct DeficiencyBudget {
  /// D = (1 - xi)/(2 Delta), bounding sum (psi_j - psi).
  double normalized;
  /// D0 = D F_x(-lambda0), bounding sum (F(lambda_j - lambda0) - F(Lambda - lambda0)).
  double unnormalized;
};

inline double budget_from(double xi, double delta) {
  if (!(delta * delta > xi)) throw InadmissibleContext("deficiency budget vacuous: Delta^2 <= xi");
  return (1.0 - xi) / (2.0 * delta);
}

inline DeficiencyBudget deficiency_budget(const DensityContext& ctx) {
  const double d = budget_from(ctx.xi(), ctx.delta());
  return {d, d * ctx.transform_at_floor()};
}

/// Largest Lambda in [lambda0, lambda0 + 13x] whose class count bound stays
/// below N; no class holds N zeros below it. Returns the right end when the
/// bound never reaches N on the admissible range.
inline double min_lambda_for_count(int N, double lambda0, double x, double phi, double tol = 1e-12) {
  if (N < 2) throw InvalidParams("min_lambda_for_count: N must be at least 2");
  const auto below = [&](double L) {
    const DensityContext ctx(lambda0, x, L, phi);
    return ctx.delta() > 0.0 && class_zero_count_from(ctx.delta()) < static_cast<double>(N);
  };
  const double hi = lambda0 + kMaxRightShift * x;
  if (!below(lambda0)) {
    throw DomainError("min_lambda_for_count: bound already reaches N at lambda0 (no sign change)");
  }
  return last_true(below, lambda0, hi, tol);
}

/// 0.60, 0.61, ..., 1.70.
inline std::vector<double> default_scale_grid() {
  std::vector<double> out;
  for (int k = 60; k <= 170; ++k) out.push_back(k / 100.0);
  return out;
}

struct GridBound {
  double value;
  double x;
};

/// Smallest class count bound at Lambda over the admissible scales in the grid;
/// ties go to the smaller x.
inline GridBound band_count_bound(double Lambda, double lambda0, double phi, const std::vector<double>& x_grid) {
  if (x_grid.empty()) throw InvalidParams("band_count_bound: empty scale grid");
  std::optional<GridBound> best;
  for (double x : x_grid) {
    if (!admissible(lambda0, x, Lambda)) continue;
    const DensityContext ctx(lambda0, x, Lambda, phi);
    if (!ctx.class_count_admissible()) continue;
    const double v = class_zero_count_bound(ctx);
    if (!best || v < best->value || (v == best->value && x < best->x)) best = GridBound{v, x};
  }
  if (!best) throw InadmissibleContext("band_count_bound: no admissible scale at Lambda = " + std::to_string(Lambda));
  return *best;
}

/// Best lower bound for the N-th zero of a class over the grid; ties go to the
/// smaller x.
inline GridBound schedule_bound(int N, double lambda0, double phi, const std::vector<double>& x_grid) {
  if (x_grid.empty()) throw InvalidParams("schedule_bound: empty scale grid");
  std::optional<GridBound> best;
  for (double x : x_grid) {
    if (!admissible(lambda0, x, lambda0)) continue;
    double v = 0.0;
    try {
      v = min_lambda_for_count(N, lambda0, x, phi);
    } catch (const DomainError&) {
      continue;
    }
    if (!best || v > best->value || (v == best->value && x < best->x)) best = GridBound{v, x};
  }
  if (!best) throw InadmissibleContext("schedule_bound: no admissible scale for N = " + std::to_string(N));
  return *best;
}

}  // namespace zdcert::density
