#include "afm/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "afm/errors.hpp"
#include "afm/general.hpp"
#include "afm/power_law.hpp"
#include "afm/roots.hpp"
#include "afm/special_functions.hpp"
#include "oracle_internal.hpp"

namespace afm {

void SolverConfig::validate() const {
  if (mesh_size < 50) throw DomainError("SolverConfig: mesh_size must be >= 50");
  if (!(eig_tol > 0.0)) throw DomainError("SolverConfig: eig_tol must be positive");
  if (domain_scale && !(*domain_scale > 0.0)) throw DomainError("SolverConfig: domain_scale must be positive");
}

double RadialPotential::operator()(double x) const {
  const double power = lambda == 0.0 ? 1.0 : std::pow(x, lambda);
  return screened ? -g * power * std::exp(-x) : -g * power;
}

void RadialPotential::validate() const {
  if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("RadialPotential: g must be positive");
  if (!(lambda > -2.0)) throw DomainError("RadialPotential: lambda must exceed -2");
  if (!screened && !(lambda < 0.0 && lambda > -2.0))
    throw DomainError("RadialPotential: unscreened wells need -2 < lambda < 0");
}

namespace detail {

double potential_range(const RadialPotential& v) {
  // Beyond this radius a screened well is negligible against any level we resolve.
  return v.screened ? 12.0 + std::log1p(v.g) + std::max(0.0, v.lambda) * 2.0 : 0.0;
}

// ---------------------------------------------------------------------------
// Log-grid Numerov for the regular solution, u(x) = x^{1/2} w(s), s = ln x:
//   w'' = [x^2 (V(x) - E) + (l + 1/2)^2] w.

LogNumerov::LogNumerov(const RadialPotential& v, int l, double ds) : v_(v), l_(l), ds_(ds) {
  const double k = v.lambda + 2.0;
  // Start where the potential term of the regular series is negligible.
  const double x_min = std::min(1e-8, std::pow(1e-8 / (1.0 + v.g), 1.0 / k));
  s_min_ = std::log(x_min);
}

LogNumerov::Outcome LogNumerov::integrate(double energy, double x_end, double x_match) const {
  const double s_end = std::log(x_end);
  const double s_match = std::log(x_match);
  const int steps = static_cast<int>(std::ceil((s_end - s_min_) / ds_));
  const int match_index = static_cast<int>(std::lround((s_match - s_min_) / ds_));
  const double kk = (l_ + 0.5) * (l_ + 0.5);
  const double c = ds_ * ds_ / 12.0;
  auto f = [&](int i) {
    const double s = s_min_ + i * ds_;
    const double x = std::exp(s);
    return x * x * (v_(x) - energy) + kk;
  };

  double w_prev = 1.0;
  double w = std::exp((l_ + 0.5) * ds_);
  double f_prev = f(0);
  double f_cur = f(1);
  Outcome out;
  out.nodes = 0;
  out.w_match = match_index <= 1 ? w : 0.0;
  out.s_match = s_min_ + match_index * ds_;
  for (int i = 1; i < steps; ++i) {
    const double f_next = f(i + 1);
    const double w_next = (2.0 * (1.0 + 5.0 * c * f_cur) * w - (1.0 - c * f_prev) * w_prev) / (1.0 - c * f_next);
    if ((w_next < 0.0) != (w < 0.0) && w_next != 0.0) ++out.nodes;
    w_prev = w;
    w = w_next;
    f_prev = f_cur;
    f_cur = f_next;
    if (i + 1 == match_index) out.w_match = w;
    if (std::abs(w) > 1e150) {
      w *= 1e-150;
      w_prev *= 1e-150;
      if (i + 1 >= match_index) out.w_match *= 1e-150;
    }
  }
  out.w_end = w;
  out.s_end = s_min_ + steps * ds_;
  return out;
}

int LogNumerov::zero_energy_count() const {
  // Free zero-energy solutions beyond the well: w = A e^{(l+1/2)s} + B e^{-(l+1/2)s}.
  const double x_end = 60.0 + potential_range(v_);
  const auto out = integrate(0.0, x_end, x_end / std::exp(1.0));
  const double k = l_ + 0.5;
  const double delta = out.s_end - out.s_match;
  const double growing = (out.w_end * std::exp(k * delta) - out.w_match) / (2.0 * std::sinh(k * delta));
  // A growing component of opposite sign produces one more node beyond x_end.
  return out.nodes + ((growing < 0.0) != (out.w_end < 0.0) && growing != 0.0 ? 1 : 0);
}

int LogNumerov::count_below(double energy, double box) const {
  // Far below the barrier h^2 x^2 |E| grows until Numerov alternates sign;
  // no node can sit beyond a few decay lengths past the (single) turning
  // point, since V increases monotonically, so the box is cut there.
  if (energy < 0.0 && v_(box) > energy) {
    double lo = s_min_, hi = std::log(box);
    for (int i = 0; i < 80 && hi - lo > 1e-6; ++i) {
      const double mid = 0.5 * (lo + hi);
      (v_(std::exp(mid)) > energy ? hi : lo) = mid;
    }
    box = std::min(box, std::exp(hi) + 40.0 / std::sqrt(-energy));
  }
  return integrate(energy, box, box).nodes;
}

double LogNumerov::level(int n, double box) const {
  double lo = -1.0;
  for (int i = 0; count_below(lo, box) > n; ++i) {
    if (i > 200) throw ConvergenceError("shooting: no lower energy bound found");
    lo *= 2.0;
  }
  double hi = 0.0;
  if (count_below(hi, box) < n + 1) throw NoBoundState("shooting: level above threshold in box");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-13 * std::max(1.0, std::abs(mid))) break;
    (count_below(mid, box) >= n + 1 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

double shooting_level(const RadialPotential& v, int l, int n, double ds) {
  const LogNumerov num(v, l, ds);
  const double range = std::max(potential_range(v), 10.0);
  double box = range + 40.0;
  for (int attempt = 0; attempt < 40; ++attempt) {
    if (num.count_below(0.0, box) < n + 1) {
      box *= 2.0;
      continue;
    }
    const double e = num.level(n, box);
    const double kappa = std::sqrt(-e);
    // Outer turning point for the bare power law, -g x^lambda = e.
    const double turning = v.screened ? range : std::pow(v.g / -e, 1.0 / -v.lambda);
    const double needed = turning + 40.0 / kappa;
    if (box >= needed) return e;
    box = needed;
  }
  throw ConvergenceError("shooting: box enlargement did not settle");
}

// ---------------------------------------------------------------------------
// Lagrange-Laguerre mesh regularized by x: the kinetic matrix of -d^2/dx^2
// in the Gauss approximation, with mesh points x_i = h t_i, L_N(t_i) = 0.

std::vector<double> laguerre_zeros(int n) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n - 1);
  for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + 1.0;
  for (int k = 1; k < n; ++k) sub[k - 1] = k;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace detail

std::vector<double> lagrange_mesh_eigenvalues(const RadialPotential& v, int l, int mesh_size, double extent) {
  v.validate();
  if (mesh_size < 2) throw DomainError("lagrange_mesh_eigenvalues: mesh too small");
  if (l < 0) throw DomainError("lagrange_mesh_eigenvalues: l must be non-negative");
  const auto t = detail::laguerre_zeros(mesh_size);
  const double h = extent / t.back();
  const double h2 = h * h;
  const int n = mesh_size;
  Eigen::MatrixXd H(n, n);
  for (int i = 0; i < n; ++i) {
    const double ti = t[i];
    const double x = h * ti;
    H(i, i) = (4.0 + (4.0 * n + 2.0) * ti - ti * ti) / (12.0 * ti * ti * h2) + l * (l + 1.0) / (x * x) + v(x);
    for (int j = 0; j < i; ++j) {
      const double tj = t[j];
      const double sign = ((i - j) % 2 == 0) ? 1.0 : -1.0;
      const double value = sign * (ti + tj) / (std::sqrt(ti * tj) * (ti - tj) * (ti - tj) * h2);
      H(i, j) = value;
      H(j, i) = value;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ConvergenceError("lagrange_mesh_eigenvalues: diagonalization failed");
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

namespace detail {

double scaled_difference(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(a)); }

std::vector<LevelResult> mesh_partial_wave(const RadialPotential& v, int l, int count, const SolverConfig& cfg) {
  const double range = std::max(potential_range(v), 10.0);
  double extent = cfg.domain_scale.value_or(range + 40.0);
  int size = cfg.mesh_size;
  std::vector<double> ev;
  for (int attempt = 0;; ++attempt) {
    if (attempt > 12) throw ConvergenceError("mesh: extent selection did not settle");
    ev = lagrange_mesh_eigenvalues(v, l, size, extent);
    const bool found = static_cast<int>(ev.size()) >= count && ev[count - 1] < 0.0;
    if (cfg.domain_scale) {
      if (!found) throw NoBoundState("mesh: level not bound on the fixed domain");
      break;
    }
    if (!found) {
      extent *= 2.0;
      continue;
    }
    const double kappa = std::sqrt(-ev[count - 1]);
    const double turning = v.screened ? range : std::pow(v.g / -ev[count - 1], 1.0 / -v.lambda);
    const double needed = turning + 36.0 / kappa;
    if (extent >= needed) break;
    extent = needed;
  }
  // Mesh doubling at fixed extent; grow the base mesh while the check fails.
  std::vector<LevelResult> levels(count);
  for (;;) {
    const auto fine = lagrange_mesh_eigenvalues(v, l, 2 * size, extent);
    double worst = 0.0;
    for (int n = 0; n < count; ++n) {
      const double residual = scaled_difference(fine[n], ev[n]);
      worst = std::max(worst, std::abs(fine[n] - ev[n]));
      levels[n] = {{n, l}, fine[n], residual <= cfg.eig_tol, residual};
    }
    if (worst <= kLevelTolerance) return levels;
    if (2 * size >= 3200) {
      throw ConvergenceError("mesh: doubling disagreement " + std::to_string(worst) + " for l=" +
                             std::to_string(l));
    }
    size *= 2;
    ev = fine;
  }
}

std::vector<LevelResult> shooting_partial_wave(const RadialPotential& v, int l, int count, const SolverConfig& cfg) {
  std::vector<LevelResult> levels(count);
  for (int n = 0; n < count; ++n) {
    const double coarse = shooting_level(v, l, n, 2e-3);
    const double fine = shooting_level(v, l, n, 1e-3);
    const double residual = scaled_difference(fine, coarse);
    if (std::abs(fine - coarse) > kLevelTolerance) throw ConvergenceError("shooting: step-halving disagreement");
    levels[n] = {{n, l}, fine, residual <= cfg.eig_tol, residual};
  }
  return levels;
}

std::vector<LevelResult> partial_wave(const RadialPotential& v, int l, int count, const SolverConfig& cfg) {
  if (count <= 0) return {};
  if (cfg.method == SolverMethod::NumerovShooting) return shooting_partial_wave(v, l, count, cfg);
  // s-waves of x^lambda wells with lambda < -1 are not smooth enough at the
  // origin for the x-regularised mesh; the log-grid shooting handles them.
  if (l == 0 && v.lambda < -1.0 && !cfg.domain_scale) return shooting_partial_wave(v, l, count, cfg);
  try {
    return mesh_partial_wave(v, l, count, cfg);
  } catch (const ConvergenceError&) {
    if (cfg.domain_scale) throw;
    return shooting_partial_wave(v, l, count, cfg);
  }
}

double critical_height(double lambda, QuantumNumbers q) {
  auto count = [&](double g) { return bound_state_count({g, lambda}, q.l); };
  const double guess = general_critical_height(lambda, n_eta(std::max(lambda, -1.99), q));
  double lo = 0.5 * guess;
  double hi = 2.0 * guess;
  for (int i = 0; count(lo) > q.n; ++i) {
    if (i > 60) throw ConvergenceError("critical height: lower bracket not found");
    lo *= 0.5;
  }
  for (int i = 0; count(hi) < q.n + 1; ++i) {
    if (i > 60) throw ConvergenceError("critical height: upper bracket not found");
    hi *= 2.0;
  }
  while (hi - lo > 1e-11 * hi) {
    const double mid = 0.5 * (lo + hi);
    (count(mid) >= q.n + 1 ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

LevelResult solve_radial(const DimensionlessProblem& problem, QuantumNumbers q, const SolverConfig& cfg) {
  problem.validate();
  return solve_radial(RadialPotential::from(problem), q, cfg);
}

LevelResult solve_radial(const RadialPotential& v, QuantumNumbers q, const SolverConfig& cfg) {
  v.validate();
  q.validate();
  cfg.validate();
  if (v.screened && bound_state_count({v.g, v.lambda}, q.l) < q.n + 1)
    throw NoBoundState("solve_radial: level " + to_string(q) + " is not bound");
  return detail::partial_wave(v, q.l, q.n + 1, cfg).back();
}

int bound_state_count(const DimensionlessProblem& problem, int l) {
  problem.validate();
  if (l < 0) throw DomainError("bound_state_count: l must be non-negative");
  return detail::LogNumerov(RadialPotential::from(problem), l, 1e-3).zero_energy_count();
}

double exact_critical_height(double lambda, QuantumNumbers q, const SolverConfig& cfg) {
  q.validate();
  cfg.validate();
  if (!(lambda > -2.0)) throw DomainError("exact_critical_height: lambda must exceed -2");
  return detail::critical_height(lambda, q);
}

double exp_exact_l0_energy(double g, int n) {
  if (!(g > 0.0)) throw DomainError("exp_exact_l0_energy: g must be positive");
  if (n < 0) throw DomainError("exp_exact_l0_energy: n must be non-negative");
  // Levels are the zeros in nu = 2 sqrt(-eps) in (0, 2 sqrt g) of J_nu(2 sqrt g),
  // scanned downwards so the deepest level comes first.
  const double x = 2.0 * std::sqrt(g);
  constexpr double step = 0.01;
  RootConfig cfg;
  cfg.abs_tol = 1e-13;
  cfg.max_iter = 300;
  auto j = [x](double nu) { return bessel_j(nu, x); };
  int found = 0;
  double upper = x;
  double f_upper = j(upper);
  while (upper > 0.0) {
    const double lower = std::max(0.0, upper - step);
    const double f_lower = j(lower);
    if (lower == 0.0 && std::abs(f_lower) <= 1e-12) {
      // Level exactly at threshold.
      if (found == n) return -0.0;
      break;
    }
    if ((f_lower < 0.0) != (f_upper < 0.0)) {
      if (found == n) {
        const double nu = find_root(j, lower, upper, cfg);
        return -nu * nu / 4.0;
      }
      ++found;
    }
    upper = lower;
    f_upper = f_lower;
  }
  throw NoBoundState("exp_exact_l0_energy: fewer than n+1 levels");
}

std::optional<double> Spectrum::energy(QuantumNumbers q) const {
  for (const auto& level : levels)
    if (level.q == q) return level.epsilon;
  return std::nullopt;
}

}  // namespace afm
