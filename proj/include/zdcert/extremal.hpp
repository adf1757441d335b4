#pragma once

// Maximize S* = sum_j (e^{B d_j} - e^{C d_j}) over d_1 >= ... >= d_J >= 0
// subject to d_j <= e_j and the budget sum_j (F(d0 - d_j) - F(d0)) <= C',
// where F(u) = G(u/x). The greedy rule and the equality-chain solver are
// exact; the lattice search is a small-J oracle for tests.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "zdcert/error.hpp"
#include "zdcert/kernel.hpp"

namespace zdcert::extremal {

inline constexpr double kInversionTol = 1e-13;
inline constexpr double kFeasibilityTol = 1e-12;

struct ExtremalProblem {
  /// Lambda - lambda0.
  double d0 = 0.0;
  /// Nonincreasing per-slot upper bounds on d_j.
  std::vector<double> caps;
  double budget = 0.0;
  double expB = 25.0 / 7.0;
  double expC = 0.0;
  kernel::KernelScale scale{1.0};

  void validate() const {
    if (!(d0 > 0.0) || !std::isfinite(d0)) throw InvalidParams("extremal: d0 must be positive");
    if (!(budget >= 0.0) || !std::isfinite(budget)) throw InvalidParams("extremal: budget must be non-negative");
    if (!(expC >= 0.0) || !(expB > expC)) throw InvalidParams("extremal: need B > C >= 0");
    if (!(expB > scale.support_end())) {
      throw InvalidParams("extremal: need B > 2/x (B = " + std::to_string(expB) +
                          ", 2/x = " + std::to_string(scale.support_end()) + ")");
    }
    for (std::size_t j = 0; j < caps.size(); ++j) {
      if (!(caps[j] >= 0.0) || caps[j] > d0 + kFeasibilityTol) {
        throw InvalidParams("extremal: cap " + std::to_string(j) + " outside [0, d0]");
      }
      if (j > 0 && caps[j] > caps[j - 1]) throw InvalidParams("extremal: caps must be nonincreasing");
    }
  }

  double F(double u) const { return kernel::scaled_transform(scale, u); }
  /// Budget consumed by one slot at d: F(d0 - d) - F(d0).
  double cost(double d) const { return F(d0 - d) - F(d0); }
  /// e^{B d} - e^{C d}.
  double gain(double d) const { return std::expm1(expB * d) - std::expm1(expC * d); }
};

struct Configuration {
  std::vector<double> values;
  double objective = 0.0;
  double budget_used = 0.0;
  /// 1-based index of the slot solved by inversion; 0 when every cap fits.
  std::size_t crossover = 0;
};

inline double objective_of(const ExtremalProblem& p, const std::vector<double>& values) {
  double s = 0.0;
  for (double d : values) s += p.gain(d);
  return s;
}

inline double budget_of(const ExtremalProblem& p, const std::vector<double>& values) {
  double s = 0.0;
  for (double d : values) s += p.cost(d);
  return s;
}

namespace detail {

inline Configuration finish(const ExtremalProblem& p, std::vector<double> values, std::size_t crossover) {
  Configuration c;
  c.objective = objective_of(p, values);
  c.budget_used = budget_of(p, values);
  c.values = std::move(values);
  c.crossover = crossover;
  return c;
}

/// The d in [0, d0] with F(d0 - d) = target, target in [F(d0), F(0)].
inline double solve_slot(const ExtremalProblem& p, double target) {
  if (target <= p.F(p.d0)) return 0.0;
  const double u = p.scale.x() * kernel::invert_transform_real(target, kInversionTol);
  return std::clamp(p.d0 - u, 0.0, p.d0);
}

}  // namespace detail

/// Saturate caps while the running cost fits, solve the crossover slot by
/// inversion, and leave later slots at 0.
inline Configuration greedy_optimize(const ExtremalProblem& p) {
  p.validate();
  std::vector<double> values(p.caps.size(), 0.0);
  double used = 0.0;
  for (std::size_t j = 0; j < p.caps.size(); ++j) {
    const double c = p.cost(p.caps[j]);
    if (used + c <= p.budget) {
      values[j] = p.caps[j];
      used += c;
      continue;
    }
    const double d = detail::solve_slot(p, p.F(p.d0) + (p.budget - used));
    values[j] = std::min(d, p.caps[j]);
    return detail::finish(p, std::move(values), j + 1);
  }
  return detail::finish(p, std::move(values), 0);
}

/// e^{-A Lambda} times the objective: sum over slots of e^{-A lambda_j} - e^{-A Lambda}
/// when B = A and C = 0.
inline double objective_in_lambda_space(const Configuration& c, double Lambda, double A) {
  return std::exp(-A * Lambda) * c.objective;
}

/// Cumulative bounds sum_{j<=m} F(d0 - d_j) <= c(m) + m F(d0) for m = 1..M.
struct ChainConstraints {
  std::vector<double> c;
  double d0 = 0.0;
  kernel::KernelScale scale{1.0};
  double expB = 25.0 / 7.0;
  double expC = 0.0;

  /// Entries from the first negative one onwards are dropped.
  std::vector<double> effective() const {
    std::vector<double> out;
    for (double v : c) {
      if (v < 0.0) break;
      out.push_back(v);
    }
    return out;
  }

  void validate() const {
    if (!(d0 > 0.0)) throw InvalidParams("chain: d0 must be positive");
    const auto e = effective();
    for (std::size_t m = 1; m < e.size(); ++m) {
      if (e[m] < e[m - 1] - kFeasibilityTol) throw InvalidParams("chain: c must be nondecreasing");
      if (m >= 2 && e[m] - e[m - 1] > e[m - 1] - e[m - 2] + kFeasibilityTol) {
        throw InvalidParams("chain: c must be concave at m = " + std::to_string(m));
      }
    }
  }

  ExtremalProblem as_problem() const {
    ExtremalProblem p;
    p.d0 = d0;
    p.scale = scale;
    p.expB = expB;
    p.expC = expC;
    return p;
  }
};

/// The sequence with equality in every chain constraint, solved slot by slot.
inline Configuration chain_equalize(const ChainConstraints& ch) {
  ch.validate();
  const ExtremalProblem p = ch.as_problem();
  const auto c = ch.effective();
  std::vector<double> values;
  values.reserve(c.size());
  double prev = 0.0;
  for (std::size_t m = 0; m < c.size(); ++m) {
    const double target = p.F(p.d0) + (c[m] - prev);
    if (target > p.F(0.0) + kFeasibilityTol) {
      throw DomainError("chain: increment at m = " + std::to_string(m + 1) + " exceeds the range of F on [0, d0]");
    }
    const double d = c[m] - prev <= 0.0 ? 0.0 : detail::solve_slot(p, std::min(target, p.F(0.0)));
    if (!values.empty() && d > values.back() + 1e-9) {
      throw DomainError("chain: produced sequence is not nonincreasing at m = " + std::to_string(m + 1));
    }
    values.push_back(d);
    prev = c[m];
  }
  return detail::finish(p, std::move(values), 0);
}

/// c(m) = min(sum_{j<=m} (F(d0 - e_j) - F(d0)), budget).
inline ChainConstraints chain_from_caps(const ExtremalProblem& p) {
  p.validate();
  ChainConstraints ch;
  ch.d0 = p.d0;
  ch.scale = p.scale;
  ch.expB = p.expB;
  ch.expC = p.expC;
  double cum = 0.0;
  for (double e : p.caps) {
    cum += p.cost(e);
    ch.c.push_back(std::min(cum, p.budget));
  }
  return ch;
}

inline constexpr std::uint64_t kOracleLatticeLimit = 100'000'000;

/// Exhaustive search over nonincreasing tuples on {0, step, 2 step, ...} plus
/// the cap itself, per slot. Ties keep the lexicographically first tuple.
inline Configuration brute_force_oracle(const ExtremalProblem& p, double step) {
  p.validate();
  if (!(step > 0.0)) throw InvalidParams("oracle: step must be positive");
  if (p.caps.size() > 4) throw InvalidParams("oracle: at most 4 slots");
  std::vector<std::vector<double>> levels(p.caps.size());
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < p.caps.size(); ++j) {
    const auto n = static_cast<std::uint64_t>(std::floor(p.caps[j] / step + 1e-9)) + 1;
    total *= n + 1;
    if (total > kOracleLatticeLimit) throw InvalidParams("oracle: lattice exceeds 1e8 points");
    for (std::uint64_t k = 0; k < n; ++k) levels[j].push_back(std::min(static_cast<double>(k) * step, p.caps[j]));
    if (levels[j].back() < p.caps[j]) levels[j].push_back(p.caps[j]);
  }
  std::vector<double> cur(p.caps.size(), 0.0), best = cur;
  double best_obj = p.caps.empty() ? 0.0 : -1.0;
  std::function<void(std::size_t, double, double, double)> rec = [&](std::size_t j, double upper, double cost,
                                                                    double obj) {
    if (j == p.caps.size()) {
      if (obj > best_obj) {
        best_obj = obj;
        best = cur;
      }
      return;
    }
    for (double d : levels[j]) {
      if (d > upper) break;
      const double c = cost + p.cost(d);
      if (c > p.budget + kFeasibilityTol) break;  // cost increases with d
      cur[j] = d;
      rec(j + 1, d, c, obj + p.gain(d));
    }
    cur[j] = 0.0;
  };
  rec(0, p.d0, 0.0, 0.0);
  return detail::finish(p, best, 0);
}

struct ExchangeSigns {
  double h1_change;
  double h2_change;
  int h1_sign;
  int h2_sign;
};

/// H_i = h_i(y + eta) + h_i(z - eta) - h_i(y) - h_i(z) for h1 = y^v and
/// h2 = y^b - y^c: spreading two values apart lowers the concave sum and
/// raises the convex one.
inline ExchangeSigns exchange_property_check(double y, double z, double eta, double v, double b, double c) {
  if (!(y >= z && z > 1.0 && eta > 0.0 && z - eta > 1.0 && v > 0.0 && v < 1.0 && b >= 1.0 && c >= 0.0 && c < b)) {
    throw InvalidParams("exchange check: need y >= z > 1, eta > 0, z - eta > 1, 0 < v < 1, b >= 1, 0 <= c < b");
  }
  // w^p ((1 + s/w)^p - 1) without cancellation
  const auto step = [](double w, double s, double p) { return std::pow(w, p) * std::expm1(p * std::log1p(s / w)); };
  const auto spread = [&](double p) { return step(y, eta, p) + step(z, -eta, p); };
  const auto sgn = [](double t) { return (t > 0.0) - (t < 0.0); };
  const double h1 = spread(v);
  // b = 1, c = 0 makes h2 linear, so the change is exactly zero.
  const double h2 = (b == 1.0 && c == 0.0) ? 0.0 : spread(b) - spread(c);
  return {h1, h2, sgn(h1), sgn(h2)};
}

}  // namespace zdcert::extremal
