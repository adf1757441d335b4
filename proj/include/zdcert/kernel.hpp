#pragma once

// Polynomial weight g(u) = (2-u)^3 (4 + 6u + u^2) / 30 on [0, 2], its Laplace
// transform G(z) = int_0^2 e^{-zu} g(u) du, the rescaled family
// F_x(z) = G(z/x), and the density weight B_{phi,omega}(y).

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "zdcert/error.hpp"
#include "zdcert/rational.hpp"
#include "zdcert/root_finding.hpp"

namespace zdcert::kernel {

using Complex = std::complex<double>;

/// Below this modulus G and G' are evaluated from the Taylor series.
inline constexpr double kSeriesSwitchRadius = 0.5;
inline constexpr int kSeriesTerms = 30;

/// Coefficients of 30*g(u) in the monomial basis: 32 - 40u^2 + 20u^3 - u^5.
inline constexpr std::array<std::int64_t, 6> kScaledWeightCoeffs = {32, 0, -40, 20, 0, -1};

/// m_n = int_0^2 u^n g(u) du, exactly.
inline Rational moment(int n) {
  if (n < 0) throw DomainError("moment: negative order");
  // m_n = (2^{n+1} / 30) * sum_k c_k 2^k / (n + k + 1)
  Rational inner(0);
  for (std::size_t k = 0; k < kScaledWeightCoeffs.size(); ++k) {
    if (kScaledWeightCoeffs[k] == 0) continue;
    inner += Rational(kScaledWeightCoeffs[k] * (std::int64_t{1} << k),
                      n + static_cast<std::int64_t>(k) + 1);
  }
  if (n + 1 > 62) throw DomainError("moment: order too large for exact evaluation");
  return inner * Rational(std::int64_t{1} << (n + 1), 30);
}

namespace detail {

struct SeriesTable {
  // coeff[n] = (-1)^n m_n / n!
  std::array<double, kSeriesTerms + 1> coeff{};

  SeriesTable() {
    long double factorial = 1.0L;
    for (int n = 0; n <= kSeriesTerms; ++n) {
      if (n > 0) factorial *= n;
      const long double m = moment(n).to_long_double();
      coeff[static_cast<std::size_t>(n)] =
          static_cast<double>((n % 2 == 0 ? m : -m) / factorial);
    }
  }
};

inline const SeriesTable& series_table() {
  static const SeriesTable table;
  return table;
}

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double accumulate(std::initializer_list<double> terms) {
  CompensatedSum s;
  for (double t : terms) s.add(t);
  return s.value();
}

inline Complex accumulate(std::initializer_list<Complex> terms) {
  CompensatedSum re;
  CompensatedSum im;
  for (const Complex& t : terms) {
    re.add(t.real());
    im.add(t.imag());
  }
  return {re.value(), im.value()};
}

template <typename T>
T transform_series(T z) {
  const auto& c = series_table().coeff;
  T acc = c[kSeriesTerms];
  for (int n = kSeriesTerms - 1; n >= 0; --n) acc = acc * z + c[static_cast<std::size_t>(n)];
  return acc;
}

template <typename T>
T derivative_series(T z) {
  const auto& c = series_table().coeff;
  T acc = static_cast<double>(kSeriesTerms) * c[kSeriesTerms];
  for (int n = kSeriesTerms - 1; n >= 1; --n) {
    acc = acc * z + static_cast<double>(n) * c[static_cast<std::size_t>(n)];
  }
  return acc;
}

template <typename T>
T transform_closed(T z) {
  const T r1 = 1.0 / z;
  const T r2 = r1 * r1;
  const T r3 = r2 * r1;
  const T r4 = r2 * r2;
  const T r6 = r3 * r3;
  const T w = (z + 1.0) * r1;
  const T tail = 4.0 * std::exp(-2.0 * z) * r4 * w * w;
  return accumulate({(16.0 / 15.0) * r1, -(8.0 / 3.0) * r3, 4.0 * r4, -4.0 * r6, tail});
}

template <typename T>
T derivative_closed(T z) {
  const T r1 = 1.0 / z;
  const T r2 = r1 * r1;
  const T r3 = r2 * r1;
  const T r4 = r2 * r2;
  const T r5 = r4 * r1;
  const T r7 = r4 * r3;
  const T tail = -8.0 * std::exp(-2.0 * z) * r4 * (1.0 + 4.0 * r1 + 6.0 * r2 + 3.0 * r3);
  return accumulate({-(16.0 / 15.0) * r2, 8.0 * r4, -16.0 * r5, 24.0 * r7, tail});
}

}  // namespace detail

/// g(u); zero outside [0, 2].
inline double g(double u) {
  if (!(u >= 0.0 && u <= 2.0)) return 0.0;
  return (32.0 + u * u * (-40.0 + u * (20.0 - u * u))) / 30.0;
}

/// G(z), switching to the Taylor series for |z| < kSeriesSwitchRadius.
inline Complex transform(Complex z) {
  return std::abs(z) < kSeriesSwitchRadius ? detail::transform_series(z)
                                           : detail::transform_closed(z);
}

inline double transform(double z) {
  return std::abs(z) < kSeriesSwitchRadius ? detail::transform_series(z)
                                           : detail::transform_closed(z);
}

/// G'(z) with the same switch as transform().
inline Complex transform_derivative(Complex z) {
  return std::abs(z) < kSeriesSwitchRadius ? detail::derivative_series(z)
                                           : detail::derivative_closed(z);
}

inline double transform_derivative(double z) {
  return std::abs(z) < kSeriesSwitchRadius ? detail::derivative_series(z)
                                           : detail::derivative_closed(z);
}

/// Positive scale x of the family f_x(u) = x g(ux), F_x(z) = G(z/x).
class KernelScale {
 public:
  explicit KernelScale(double x) : x_(x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw InvalidParams("kernel scale must be positive");
  }

  double x() const { return x_; }
  /// f_x vanishes on [2/x, inf).
  double support_end() const { return 2.0 / x_; }
  double f(double u) const { return u >= support_end() ? 0.0 : x_ * g(u * x_); }
  /// f_x(0) = 16x/15.
  double f_at_zero() const { return x_ * g(0.0); }

  friend bool operator==(const KernelScale&, const KernelScale&) = default;

 private:
  double x_;
};

inline Complex scaled_transform(const KernelScale& s, Complex z) { return transform(z / s.x()); }
inline double scaled_transform(const KernelScale& s, double z) { return transform(z / s.x()); }

/// The unique real u with G(u) = target. G is strictly decreasing on the
/// reals, so the inverse is single-valued; the bracket starts at [-8, 8].
inline double invert_transform_real(double target, double tol = 1e-12) {
  if (!(target > 0.0) || !std::isfinite(target)) {
    throw DomainError("invert_transform_real: target must be positive and finite");
  }
  return invert_decreasing([](double u) { return transform(u); }, target, -8.0, 8.0, tol, 40);
}

/// B_{phi,omega}(y) = (phi/2)(1 - e^{-2 omega y})/y + ((1 - e^{-omega y})/y)^2.
inline double density_weight(double phi, double omega, double y) {
  if (!(phi >= 0.0) || !(omega > 0.0) || !(y > 0.0)) {
    throw DomainError("density_weight: need phi >= 0, omega > 0, y > 0");
  }
  const double lin = -std::expm1(-2.0 * omega * y) / y;
  const double sq = -std::expm1(-omega * y) / y;
  return 0.5 * phi * lin + sq * sq;
}

}  // namespace zdcert::kernel
