#include "afm/general.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "afm/errors.hpp"
#include "afm/exponential.hpp"
#include "afm/roots.hpp"

namespace afm {
namespace {

void require_supported(double lambda, const char* where) {
  if (!(lambda > -2.0)) throw DomainError(std::string(where) + ": lambda must exceed -2");
  if (lambda > -1.0)
    throw UnsupportedLambda(std::string(where) + ": no branch prescription for lambda > -1");
}

// x^{1/p} through exp/log; x > 0 is a precondition.
double root_pow(double x, double p) { return std::exp(std::log(x) / p); }

}  // namespace

GeneralGeometry GeneralGeometry::of(double lambda) {
  if (!(lambda > -2.0)) throw DomainError("GeneralGeometry: lambda must exceed -2");
  const double a = 0.5 * (std::sqrt(9.0 + 4.0 * lambda) + 3.0);
  const double xbar = a * std::exp(-a);
  return {lambda, a, xbar, xbar * std::pow(lambda + a, lambda + 2.0), std::abs(lambda) * std::exp(lambda)};
}

double general_y(double g, double lambda, double N) {
  if (!(g > 0.0) || !(N > 0.0)) throw DomainError("general_y: g and N must be positive");
  return 2.0 * N * N * std::exp(lambda) / g;
}

double k_lambda(double x, double g, double lambda) {
  if (lambda == 0.0) throw DomainError("k_lambda: lambda must be non-zero");
  return g * std::exp(-x) * (x - lambda) / std::abs(lambda);
}

double i_lambda(double nu, double g, double lambda, Branch branch) {
  if (lambda == 0.0) throw DomainError("i_lambda: lambda must be non-zero");
  if (!(g > 0.0)) throw DomainError("i_lambda: g must be positive");
  if (lambda <= -1.0 && branch != Branch::Lower)
    throw DomainError("i_lambda: only the lower branch applies for lambda <= -1");
  return lambda - lambert_w(branch, -std::exp(lambda) * std::abs(lambda) * nu / g);
}

double solve_x0_general(double y, double lambda) {
  require_supported(lambda, "solve_x0_general");
  const auto geo = GeneralGeometry::of(lambda);
  if (!(y >= 0.0 && y <= geo.fbar)) throw DomainError("solve_x0_general: Y outside [0, Fbar]");
  if (y == 0.0) return geo.x_start;
  if (y == geo.fbar) return geo.xbar;
  const double p = lambda + 2.0;
  // F decreases from Fbar at xbar to 0 at |lambda| e^lambda.
  // The bracket can round to a tiny negative value next to x_start.
  auto f = [&](double x) { return x * std::pow(std::max(0.0, lambda - lambert_w(Branch::Lower, -x)), p) - y; };
  RootConfig cfg;
  cfg.abs_tol = 1e-16;
  cfg.max_iter = 300;
  return find_root(f, geo.xbar, geo.x_start, cfg);
}

double a_lambda_fit(double lambda) { return -(109.0 + 196.0 * lambda + 85.0 * lambda * lambda); }

double x0_fit_general(double y, double lambda) {
  require_supported(lambda, "x0_fit_general");
  const auto geo = GeneralGeometry::of(lambda);
  if (!(y >= 0.0 && y <= geo.fbar)) throw DomainError("x0_fit_general: Y outside [0, Fbar]");
  const double r = y / geo.fbar;
  const double radicand = 1.0 - r * r + a_lambda_fit(lambda) * y * (y - geo.fbar);
  if (radicand < 0.0) throw DomainError("x0_fit_general: negative radicand");
  return geo.xbar + (geo.x_start - geo.xbar) * std::sqrt(radicand);
}

std::optional<double> general_energy(double g, double lambda, double N, GeneralX0 x0_kind) {
  require_supported(lambda, "general_energy");
  const auto geo = GeneralGeometry::of(lambda);
  const double y = general_y(g, lambda, N);
  if (y > geo.fbar) return std::nullopt;
  const double x0 = x0_kind == GeneralX0::Exact ? solve_x0_general(y, lambda) : x0_fit_general(y, lambda);
  const double p = lambda + 2.0;
  const double xr = root_pow(x0, p);
  const double yr = root_pow(y, p);
  const double bracket = (p * xr - yr) / (yr - lambda * xr);
  return -(g / (2.0 * std::exp(lambda))) * xr * xr * std::exp(lambda * std::log(y) / p) * bracket;
}

std::optional<double> general_energy_physical(const PhysicalPotential& p, double N, GeneralX0 x0) {
  p.validate();
  const auto eps = general_energy(p.coupling(), p.lambda, N, x0);
  if (!eps) return std::nullopt;
  return p.energy_scale() * *eps;
}

double general_critical_height(double lambda, double N) {
  if (!(lambda > -2.0)) throw DomainError("general_critical_height: lambda must exceed -2");
  if (!(N > 0.0)) throw DomainError("general_critical_height: N must be positive");
  return std::pow(std::numbers::e / (lambda + 2.0), lambda + 2.0) * N * N;
}

std::optional<double> lambda_zero_limit_check(double g, double N) {
  const double Z = exp_z(g, N);
  if (Z > kInvE) return std::nullopt;
  const double w = lambert_w(Branch::Principal, -Z);
  const double x0 = -3.0 * w * std::exp(3.0 * w);
  const double y0 = 27.0 * Z * Z * Z;
  return -g * x0 * (std::sqrt(x0 / y0) - 0.5);
}

}  // namespace afm
