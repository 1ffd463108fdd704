#include "afm/special_functions.hpp"

#include <cmath>
#include <limits>

#include "afm/errors.hpp"
#include "afm/roots.hpp"

namespace afm {
namespace {

constexpr double kE = std::numbers::e;

// Series of W about the branch point -1/e in p = +-sqrt(2(e z + 1)).
double branch_point_series(double p) {
  return -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0))));
}

double initial_guess(Branch branch, double z) {
  if (branch == Branch::Principal) {
    if (z < -0.25) return branch_point_series(std::sqrt(std::max(0.0, 2.0 * (kE * z + 1.0))));
    if (z < 3.0) return std::log1p(z) * (1.0 - std::log1p(std::log1p(z)) / (2.0 + std::log1p(z)));
    const double l1 = std::log(z);
    const double l2 = std::log(l1);
    return l1 - l2 + l2 / l1;
  }
  if (z < -0.25) return branch_point_series(-std::sqrt(std::max(0.0, 2.0 * (kE * z + 1.0))));
  const double l1 = std::log(-z);
  const double l2 = std::log(-l1);
  return l1 - l2 + l2 / l1;
}

}  // namespace

double lambert_w(Branch branch, double z) {
  if (!std::isfinite(z)) throw DomainError("lambert_w: non-finite argument");
  // Arguments within a few ulps below -1/e are rounding noise around the branch point.
  if (z < -kInvE * (1.0 + 4.0 * std::numeric_limits<double>::epsilon()))
    throw DomainError("lambert_w: argument below -1/e");
  if (branch == Branch::Lower && z >= 0.0)
    throw DomainError("lambert_w: lower branch requires z < 0");
  if (z <= -kInvE) return -1.0;
  if (z == 0.0) return 0.0;

  double w = initial_guess(branch, z);
  for (int it = 0; it < 64; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    // Halley step.
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    double next = w - step;
    if (branch == Branch::Principal && next < -1.0) next = 0.5 * (w - 1.0);
    if (branch == Branch::Lower && next > -1.0) next = 0.5 * (w - 1.0);
    const bool done = std::abs(next - w) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(next));
    w = next;
    if (done) break;
  }
  return w;
}

double solve_shifted_exponential(double a, double b, double n, double theta, Branch branch) {
  if (a == 0.0 || n == 0.0) throw DomainError("solve_shifted_exponential: a and n must be non-zero");
  const double scaled = std::exp(-b / a) * theta;
  double root;
  if (scaled >= 0.0) {
    root = std::pow(scaled, 1.0 / n);
  } else {
    const bool odd_integer = std::nearbyint(n) == n && std::fmod(std::abs(n), 2.0) == 1.0;
    if (!odd_integer) throw NumericalError("solve_shifted_exponential: non-real root of theta");
    root = -std::pow(-scaled, 1.0 / n);
  }
  if (!std::isfinite(root)) throw NumericalError("solve_shifted_exponential: root overflow");
  const double arg = -root / (a * n);
  return -b / a - n * lambert_w(branch, arg);
}

double bessel_j(double nu, double x) {
  if (!std::isfinite(nu) || !std::isfinite(x)) throw DomainError("bessel_j: non-finite argument");
  if (nu < 0.0 || x < 0.0) throw DomainError("bessel_j: requires nu >= 0 and x >= 0");
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  return std::cyl_bessel_j(nu, x);
}

double bessel_j0_zero(int n) {
  if (n < 0) throw DomainError("bessel_j0_zero: n must be non-negative");
  // McMahon: j_n = beta + 1/(8 beta) + ..., beta = pi (n + 3/4), with a
  // correction below 0.05 for every n; zeros are ~pi apart.
  const double beta = std::numbers::pi * (n + 0.75);
  RootConfig cfg;
  cfg.abs_tol = 1e-13;
  cfg.max_iter = 200;
  return find_root([](double x) { return bessel_j(0.0, x); }, beta, beta + 0.5, cfg);
}

}  // namespace afm
