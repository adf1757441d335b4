#pragma once

// Half-plane comparison inequality for G:
//   Re G(a+it)/G(a) >= Re G(-b+it)/G(-b),  0 <= a <= 13, 0 <= b <= 1.25,
// certified by analytic reductions for large |t| and a lattice check on the
// remaining bounded regions.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "zdcert/error.hpp"
#include "zdcert/kernel.hpp"

namespace zdcert::cond2 {

inline constexpr double kMaxA = 13.0;
inline constexpr double kMaxB = 1.25;

struct Interval {
  double lo;
  double hi;

  bool contains(double v) const { return v >= lo && v <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Lattice spacing in a, b and t.
struct Steps {
  double a = 0.01;
  double b = 0.01;
  double t = 0.005;
};

struct GridRegion {
  std::string name;
  Interval a_range;
  Interval b_range;
  /// Range of |t|; the lattice is evaluated for t >= 0 only since the slack is
  /// even in t.
  Interval t_range;
  Steps steps;

  void validate() const {
    auto bad = [&](const std::string& why) { throw InvalidParams("region " + name + ": " + why); };
    if (!(a_range.lo <= a_range.hi) || !(b_range.lo <= b_range.hi) || !(t_range.lo <= t_range.hi)) {
      bad("empty range");
    }
    if (a_range.lo < 0.0 || a_range.hi > kMaxA) bad("a outside [0, 13]");
    if (b_range.lo < 0.0 || b_range.hi > kMaxB) bad("b outside [0, 1.25]");
    if (t_range.lo < 0.0) bad("t range must be given as |t| >= 0");
    if (!(steps.a > 0.0) || !(steps.b > 0.0) || !(steps.t > 0.0)) bad("steps must be positive");
  }
};

/// Closed lattice lo, lo + step, ... not exceeding hi (up to 1e-9 relative slack).
inline std::vector<double> lattice(const Interval& r, double step) {
  const double span = r.hi - r.lo;
  const auto n = static_cast<std::size_t>(std::floor(span / step + 1e-9)) + 1;
  std::vector<double> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = r.lo + static_cast<double>(k) * step;
  return out;
}

struct LatticePoint {
  double a = 0.0;
  double b = 0.0;
  double t = 0.0;
};

struct SlackCertificate {
  GridRegion region;
  double margin = 0.0;
  /// Exact minimum of the slack over the whole lattice.
  double min_slack = std::numeric_limits<double>::infinity();
  LatticePoint argmin;
  /// Minimum over lattice points other than (a, b) = (0, 0), where both sides
  /// coincide identically. Infinite when no such point exists.
  double min_nontrivial_slack = std::numeric_limits<double>::infinity();
  LatticePoint nontrivial_argmin;
  std::uint64_t points_checked = 0;
  bool passed = false;
};

/// Psi_t(a) = Re G(a+it) / G(a).
inline double normalized_real_part(double a, double t) {
  return kernel::transform(kernel::Complex(a, t)).real() / kernel::transform(a);
}

/// Re G(a+it)/G(a) - Re G(-b+it)/G(-b); non-negative where the inequality holds.
inline double slack(double a, double b, double t) {
  return normalized_real_part(a, t) - normalized_real_part(-b, t);
}

namespace detail {

struct SliceResult {
  double min = std::numeric_limits<double>::infinity();
  std::size_t ia = 0, ib = 0, it = 0;
  double min_nt = std::numeric_limits<double>::infinity();
  std::size_t nt_ia = 0, nt_ib = 0, nt_it = 0;
};

// Replace `best` when `cand` is smaller, or equal with an earlier lattice index.
inline void merge(SliceResult& best, const SliceResult& cand) {
  auto earlier = [](std::size_t t1, std::size_t a1, std::size_t b1, std::size_t t2, std::size_t a2,
                    std::size_t b2) {
    if (t1 != t2) return t1 < t2;
    if (a1 != a2) return a1 < a2;
    return b1 < b2;
  };
  if (cand.min < best.min ||
      (cand.min == best.min && earlier(cand.it, cand.ia, cand.ib, best.it, best.ia, best.ib))) {
    best.min = cand.min;
    best.ia = cand.ia;
    best.ib = cand.ib;
    best.it = cand.it;
  }
  if (cand.min_nt < best.min_nt ||
      (cand.min_nt == best.min_nt &&
       earlier(cand.nt_it, cand.nt_ia, cand.nt_ib, best.nt_it, best.nt_ia, best.nt_ib))) {
    best.min_nt = cand.min_nt;
    best.nt_ia = cand.nt_ia;
    best.nt_ib = cand.nt_ib;
    best.nt_it = cand.nt_it;
  }
}

}  // namespace detail

/// Evaluates the slack on the full lattice of `region`. The pair minimum per
/// t-slice separates into min_a Psi_t(a) - max_b Psi_t(-b), which is the exact
/// lattice minimum because rounded subtraction is monotone in each argument.
/// The result does not depend on `workers`.
inline SlackCertificate verify_region(const GridRegion& region, double margin = 0.0,
                                      unsigned workers = 0) {
  region.validate();
  if (!(margin >= 0.0)) throw InvalidParams("margin must be non-negative");

  const auto as = lattice(region.a_range, region.steps.a);
  const auto bs = lattice(region.b_range, region.steps.b);
  const auto ts = lattice(region.t_range, region.steps.t);
  const bool has_identity = as.front() == 0.0 && bs.front() == 0.0;

  std::vector<double> ga(as.size());
  std::vector<double> gb(bs.size());
  for (std::size_t i = 0; i < as.size(); ++i) ga[i] = kernel::transform(as[i]);
  for (std::size_t j = 0; j < bs.size(); ++j) gb[j] = kernel::transform(-bs[j]);

  auto eval_slice = [&](std::size_t it) {
    detail::SliceResult r;
    const double t = ts[it];
    // Smallest Psi(a), first and second smallest index excluded from the identity pair.
    double amin = std::numeric_limits<double>::infinity(), amin_rest = amin;
    std::size_t ia = 0, ia_rest = 0;
    for (std::size_t i = 0; i < as.size(); ++i) {
      const double v = kernel::transform(kernel::Complex(as[i], t)).real() / ga[i];
      if (v < amin) {
        amin = v;
        ia = i;
      }
      if (i > 0 && v < amin_rest) {
        amin_rest = v;
        ia_rest = i;
      }
    }
    double bmax = -std::numeric_limits<double>::infinity(), bmax_rest = bmax;
    std::size_t ib = 0, ib_rest = 0;
    for (std::size_t j = 0; j < bs.size(); ++j) {
      const double v = kernel::transform(kernel::Complex(-bs[j], t)).real() / gb[j];
      if (v > bmax) {
        bmax = v;
        ib = j;
      }
      if (j > 0 && v > bmax_rest) {
        bmax_rest = v;
        ib_rest = j;
      }
    }
    r.it = r.nt_it = it;
    r.min = amin - bmax;
    r.ia = ia;
    r.ib = ib;
    if (!has_identity) {
      r.min_nt = r.min;
      r.nt_ia = ia;
      r.nt_ib = ib;
      return r;
    }
    // Pairs other than (0, 0): either a-index >= 1 with any b, or a = 0 with b-index >= 1.
    const double psi_a0 = kernel::transform(kernel::Complex(as[0], t)).real() / ga[0];
    if (as.size() > 1) {
      r.min_nt = amin_rest - bmax;
      r.nt_ia = ia_rest;
      r.nt_ib = ib;
    }
    if (bs.size() > 1) {
      const double cand = psi_a0 - bmax_rest;
      if (cand < r.min_nt || (cand == r.min_nt && 0 < r.nt_ia)) {
        r.min_nt = cand;
        r.nt_ia = 0;
        r.nt_ib = ib_rest;
      }
    }
    return r;
  };

  unsigned n_workers = workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : workers;
  n_workers = static_cast<unsigned>(std::min<std::size_t>(n_workers, ts.size()));
  std::vector<detail::SliceResult> partial(n_workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) {
      pool.emplace_back([&, w] {
        // Contiguous chunk per worker keeps the merge order fixed.
        const std::size_t begin = ts.size() * w / n_workers;
        const std::size_t end = ts.size() * (w + 1) / n_workers;
        detail::SliceResult local;
        for (std::size_t it = begin; it < end; ++it) detail::merge(local, eval_slice(it));
        partial[w] = local;
      });
    }
  }
  detail::SliceResult best;
  for (const auto& p : partial) detail::merge(best, p);

  SlackCertificate cert;
  cert.region = region;
  cert.margin = margin;
  cert.min_slack = best.min;
  cert.argmin = {as[best.ia], bs[best.ib], ts[best.it]};
  cert.min_nontrivial_slack = best.min_nt;
  if (std::isfinite(best.min_nt)) {
    cert.nontrivial_argmin = {as[best.nt_ia], bs[best.nt_ib], ts[best.nt_it]};
  }
  cert.points_checked = static_cast<std::uint64_t>(as.size()) * bs.size() * ts.size();
  const bool only_identity = as.size() == 1 && bs.size() == 1 && has_identity;
  cert.passed = only_identity ? cert.min_slack >= margin
                              : (cert.min_nontrivial_slack > margin && cert.min_slack >= 0.0);
  return cert;
}

/// The three bounded regions left after the analytic reductions, plus the
/// wider box a in [0, 13], b in [0, 0.14], 14 <= |t| <= 50 reported as "1w".
inline GridRegion default_region(const std::string& id, const Steps& steps = {}) {
  const double half_pi = std::numbers::pi / 2.0;
  if (id == "1") return {"1", {0.0, 0.0}, {0.0, 0.14}, {14.0, 50.0}, steps};
  if (id == "2") return {"2", {0.0, 13.0}, {0.0, 0.14}, {8.0, 14.0}, steps};
  if (id == "3") return {"3", {0.0, 13.0}, {0.0, 1.25}, {half_pi, 8.0}, steps};
  if (id == "1w") return {"1w", {0.0, 13.0}, {0.0, 0.14}, {14.0, 50.0}, steps};
  throw InvalidParams("unknown cond2 region '" + id + "'");
}

struct NamedCheck {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  bool passed = false;
  std::string detail;
};

/// Numerical facts the analytic reductions rely on, each with its computed value.
inline std::vector<NamedCheck> lemma_reduction_checks() {
  using kernel::transform;
  using kernel::transform_derivative;
  std::vector<NamedCheck> out;
  constexpr int kSamples = 2000;

  // h(b) = (8/9) G(-b) + b G'(-b) is decreasing on [0, 1.25] and h(1.25) > 1/90.
  auto h = [](double b) { return (8.0 / 9.0) * transform(-b) + b * transform_derivative(-b); };
  {
    bool decreasing = true;
    double prev = h(0.0);
    for (int k = 1; k <= kSamples; ++k) {
      const double cur = h(kMaxB * k / kSamples);
      if (cur > prev) decreasing = false;
      prev = cur;
    }
    const double v = h(kMaxB);
    out.push_back({"h(1.25) > 1/90", v, 1.0 / 90.0, v > 1.0 / 90.0 && decreasing,
                   decreasing ? "h decreasing on sampled [0, 1.25]" : "h not decreasing on sample"});
  }
  // |G'(-1.25)| < 1.36 and G(-b) >= 8/9 on [0, 1.25].
  {
    const double d = std::abs(transform_derivative(-kMaxB));
    out.push_back({"|G'(-1.25)| < 1.36", d, 1.36, d < 1.36, ""});
    double gmin = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= kSamples; ++k) gmin = std::min(gmin, transform(-kMaxB * k / kSamples));
    out.push_back({"min G(-b) on [0,1.25] >= 8/9", gmin, 8.0 / 9.0, gmin >= 8.0 / 9.0 - 1e-15, ""});
  }
  // h~(b) = 16b - (975/1024)(e^{2b} + 1): unimodal with turning point b0.
  auto ht = [](double b) { return 16.0 * b - (975.0 / 1024.0) * (std::exp(2.0 * b) + 1.0); };
  const double b0 = 0.5 * std::log(8192.0 / 975.0);
  const double lo = 0.14;
  {
    const double endpoint_min = std::min(ht(lo), ht(kMaxB));
    double sampled_min = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= kSamples; ++k) sampled_min = std::min(sampled_min, ht(lo + (kMaxB - lo) * k / kSamples));
    const bool inside = b0 > lo && b0 < kMaxB;
    out.push_back({"turning point b0 in [0.14, 1.25]", b0, lo, inside, ""});
    out.push_back({"min h~ on [0.14,1.25] attained at an endpoint", sampled_min, endpoint_min,
                   inside && sampled_min >= endpoint_min - 1e-12, ""});
    out.push_back({"min(h~(0.14), h~(1.25)) = 0.028 > 0", endpoint_min, 0.0,
                   endpoint_min > 0.0 && std::abs(endpoint_min - 0.028) <= 1e-3, ""});
  }
  // Closing numeric steps of the two large-|t| lemmas.
  {
    const double v = 16.0 * (27.0 / 15.0 - 1.0 - 3.0 / 14.0 - 3.0 / 196.0 - 3.0 / 2744.0);
    out.push_back({"|t| >= 14 constant exceeds 9", v, 9.0, v > 9.0, ""});
    const double w = (16.0 / 15.0) * (0.957 - 8.0 / 9.0 - 1.55 * 0.015);
    out.push_back({"|t| >= 50 constant exceeds 1/25", w, 1.0 / 25.0, w > 1.0 / 25.0, ""});
  }
  return out;
}

struct SpotCheck {
  std::string name;
  std::size_t samples = 0;
  /// Smallest normalized slack seen; positive means every sample satisfied the bound.
  double min_slack = std::numeric_limits<double>::infinity();
  LatticePoint worst;
  bool passed = false;
};

/// Random corroboration of the three large-|t| bounds, |t| capped at `t_cap`:
///   Re G'(z) |z|^4 > 9                           (0 <= a <= 13, |t| >= 14)
///   Phi_t(-b) |z|^2 / G(-b) > 1/25                 (0 <= b <= 1.25, |t| >= 50)
///   -Re G(z) |z|^2 > 1/140                         (0.14 <= b <= 1.25, |t| >= 8)
inline std::vector<SpotCheck> analytic_region_spotcheck(std::size_t samples, std::uint64_t seed = 1,
                                                        double t_cap = 1e3) {
  if (samples == 0) throw InvalidParams("spotcheck needs at least one sample");
  using kernel::Complex;
  std::mt19937_64 rng(seed);
  auto uniform = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  // log-uniform in |t| with a random sign
  auto draw_t = [&](double lo) {
    const double mag = std::exp(uniform(std::log(lo), std::log(t_cap)));
    return uniform(0.0, 1.0) < 0.5 ? -mag : mag;
  };

  std::vector<SpotCheck> out(3);
  out[0].name = "Re G'(z) > 9/|z|^4 (0<=a<=13, |t|>=14)";
  out[1].name = "Phi_t(-b) > G(-b)/(25|z|^2) (0<=b<=1.25, |t|>=50)";
  out[2].name = "Re G(z) < -1/(140|z|^2) (0.14<=b<=1.25, |t|>=8)";
  for (std::size_t k = 0; k < samples; ++k) {
    {
      const double a = uniform(0.0, kMaxA), t = draw_t(14.0);
      const Complex z(a, t);
      const double s = kernel::transform_derivative(z).real() * std::pow(std::abs(z), 4) - 9.0;
      if (s < out[0].min_slack) out[0] = {out[0].name, 0, s, {a, 0.0, t}, false};
    }
    {
      const double b = uniform(0.0, kMaxB), t = draw_t(50.0);
      const Complex z(-b, t);
      const double gb = kernel::transform(-b);
      const double phi = kernel::transform_derivative(z).real() * gb -
                         kernel::transform(z).real() * kernel::transform_derivative(-b);
      const double s = phi * std::norm(z) / gb - 1.0 / 25.0;
      if (s < out[1].min_slack) out[1] = {out[1].name, 0, s, {0.0, b, t}, false};
    }
    {
      const double b = uniform(0.14, kMaxB), t = draw_t(8.0);
      const Complex z(-b, t);
      const double s = -kernel::transform(z).real() * std::norm(z) - 1.0 / 140.0;
      if (s < out[2].min_slack) out[2] = {out[2].name, 0, s, {0.0, b, t}, false};
    }
  }
  for (auto& c : out) {
    c.samples = samples;
    c.passed = c.min_slack > 0.0;
  }
  return out;
}

}  // namespace zdcert::cond2
