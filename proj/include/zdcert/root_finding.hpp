#pragma once

#include <cmath>
#include <string>

#include "zdcert/error.hpp"

namespace zdcert {

struct Bracket {
  double lo;
  double hi;
};

/// Bisection for a root of f on [lo, hi], where f(lo) and f(hi) have opposite
/// signs (a zero at either endpoint is accepted). Stops when the bracket is
/// narrower than `tol` or stops shrinking in binary64.
template <typename Func>
double bisect(Func&& f, double lo, double hi, double tol = 1e-12) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw DomainError("bisect: no sign change on [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  for (int iter = 0; iter < 400 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Largest x in [lo, hi] with pred(x) true, for a predicate that is true on an
/// initial segment [lo, x*) and false afterwards. Requires pred(lo). Returns hi
/// when the predicate never turns false.
template <typename Pred>
double last_true(Pred&& pred, double lo, double hi, double tol = 1e-12) {
  if (!pred(lo)) throw DomainError("last_true: predicate false at the left end");
  if (pred(hi)) return hi;
  for (int iter = 0; iter < 400 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

/// Inverse of a strictly decreasing function. Starts from [lo, hi] and doubles
/// the offending side until the target is bracketed, at most `max_doublings`
/// times per side.
template <typename Func>
double invert_decreasing(Func&& f, double target, double lo, double hi,
                         double tol = 1e-12, int max_doublings = 60) {
  int n = 0;
  while (f(lo) < target) {
    if (++n > max_doublings) throw DomainError("inversion: target above reachable range");
    lo *= 2.0;
  }
  n = 0;
  while (f(hi) > target) {
    if (++n > max_doublings) throw DomainError("inversion: target below reachable range");
    hi *= 2.0;
  }
  return bisect([&](double u) { return f(u) - target; }, lo, hi, tol);
}

}  // namespace zdcert
