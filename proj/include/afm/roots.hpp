#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "afm/errors.hpp"

namespace afm {

struct RootConfig {
  double abs_tol = 1e-14;
  int max_iter = 100;
  std::optional<std::pair<double, double>> bracket;

  void validate() const {
    if (!(abs_tol > 0.0)) throw DomainError("RootConfig: abs_tol must be positive");
    if (max_iter < 1) throw DomainError("RootConfig: max_iter must be >= 1");
    if (bracket && !(bracket->first < bracket->second))
      throw DomainError("RootConfig: bracket endpoints must be strictly increasing");
  }
};

/// Root of a continuous f on [lo, hi] with f(lo), f(hi) of opposite signs.
///
/// Secant steps are taken while they land inside the current bracket; a
/// secant step that does not halve the bracket is followed by a bisection,
/// so the width at least halves every two iterations.
template <class F>
double find_root(F&& f, double lo, double hi, const RootConfig& cfg = {}) {
  cfg.validate();
  if (cfg.bracket) {
    lo = cfg.bracket->first;
    hi = cfg.bracket->second;
  }
  if (!(lo < hi)) throw DomainError("find_root: empty bracket");
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!std::isfinite(flo) || !std::isfinite(fhi) || (flo > 0.0) == (fhi > 0.0))
    throw NumericalError("find_root: bracket does not enclose a sign change");

  bool force_bisect = false;
  for (int it = 0; it < cfg.max_iter; ++it) {
    const double width = hi - lo;
    const double mid = 0.5 * (lo + hi);
    if (width <= cfg.abs_tol + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(mid))
      return mid;

    double x = mid;
    if (!force_bisect) {
      const double secant = lo - flo * (hi - lo) / (fhi - flo);
      if (secant > lo && secant < hi) x = secant;
    }

    const double fx = f(x);
    if (fx == 0.0) return x;
    if (!std::isfinite(fx)) throw NumericalError("find_root: non-finite function value");
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    // A secant step that failed to halve the bracket is followed by bisection.
    force_bisect = (x != mid) && (hi - lo) > 0.5 * width;
  }
  throw ConvergenceError("find_root: iteration limit reached");
}

}  // namespace afm
