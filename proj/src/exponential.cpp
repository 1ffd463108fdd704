#include "afm/exponential.hpp"

#include <cmath>
#include <numbers>

#include "afm/detail/overloaded.hpp"
#include "afm/errors.hpp"
#include "afm/special_functions.hpp"

namespace afm {
namespace {

using detail::Overloaded;

void check_positive(double g, double N) {
  if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("exponential: g must be positive");
  if (!(N > 0.0) || !std::isfinite(N)) throw DomainError("exponential: N must be positive");
}

}  // namespace

double exp_z(double g, double N) {
  check_positive(g, N);
  return std::cbrt(2.0 * N * N / g) / 3.0;
}

ExpLevel exp_level(double g, double N) {
  ExpLevel level;
  level.g = g;
  level.N = N;
  level.Z = exp_z(g, N);
  if (level.Z > kInvE) return level;
  const double w = lambert_w(Branch::Principal, -level.Z);
  level.x0 = std::exp(w);
  level.nu0 = g * std::exp(3.0 * w);
  level.epsilon = -g * std::exp(3.0 * w) * (1.0 + 1.5 * w);
  return level;
}

std::optional<double> exp_energy(double g, double N) { return exp_level(g, N).epsilon; }

std::optional<double> exp_energy_physical(const PhysicalPotential& p, double N) {
  p.validate();
  if (p.lambda != 0.0) throw DomainError("exp_energy_physical: requires lambda = 0");
  const auto eps = exp_energy(p.coupling(), N);
  if (!eps) return std::nullopt;
  return p.energy_scale() * *eps;
}

double exp_bracket_poly(double Z) {
  if (!(Z >= 0.0 && Z <= kInvE)) throw DomainError("exp_bracket_poly: Z must lie in [0, 1/e]");
  return std::exp(-3.0 * Z) / 100.0 * (100.0 - 150.0 * Z - 580.0 * Z * Z + 524.0 * Z * Z * Z);
}

double exp_bracket_exact(double Z) {
  if (!(Z >= 0.0 && Z <= kInvE)) throw DomainError("exp_bracket_exact: Z must lie in [0, 1/e]");
  const double w = lambert_w(Branch::Principal, -Z);
  return std::exp(3.0 * w) * (1.0 + 1.5 * w);
}

double exp_critical_height(QuantumNumbers q, const ExpCriticalModel& model) {
  q.validate();
  using std::numbers::e;
  using std::numbers::pi;
  const double n = q.n;
  const double l = q.l;
  return std::visit(
      Overloaded{
          [](const exp_critical::AfmN& m) {
            if (!(m.N > 0.0)) throw DomainError("exp_critical_height: N must be positive");
            return e * e / 4.0 * m.N * m.N;
          },
          [&](const exp_critical::BesselAsymptotic&) { return pi * pi / 4.0 * (n + 0.75) * (n + 0.75); },
          [&](const exp_critical::FittedLinear&) {
            const double s = pi / 2.0 * n + e / 2.0 * l + 3.0 * pi / 8.0;
            return s * s;
          },
          [&](const exp_critical::FittedSqrtNL&) {
            const double s = 1.566 * n + 1.393 * l - 0.125 * std::sqrt(n * l) + 1.202;
            return s * s;
          },
      },
      model);
}

double exp_exact_critical_l0(int n) {
  const double j = bessel_j0_zero(n);
  return j * j / 4.0;
}

}  // namespace afm
