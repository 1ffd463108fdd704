#include "afm/yukawa.hpp"

#include <cmath>
#include <numbers>

#include "afm/detail/overloaded.hpp"
#include "afm/errors.hpp"
#include "afm/roots.hpp"
#include "afm/special_functions.hpp"

namespace afm {
namespace {

using detail::Overloaded;
using std::numbers::e;

double f_lower(double x) { return -x * (1.0 + lambert_w(Branch::Lower, -x)); }

void check_ybar(double ybar, const char* where) {
  const auto geo = YukawaGeometry::get();
  if (!(ybar >= 0.0 && ybar <= geo.fbar)) throw DomainError(std::string(where) + ": Ybar must lie in [0, Fbar]");
}

}  // namespace

YukawaGeometry YukawaGeometry::get() {
  const double a = (3.0 + std::sqrt(5.0)) / 2.0;
  return {a * std::exp(-a), (2.0 + std::sqrt(5.0)) * std::exp(-a)};
}

double yukawa_ybar(double g, double N) {
  if (!(g > 0.0) || !(N > 0.0)) throw DomainError("yukawa_ybar: g and N must be positive");
  return 2.0 * N * N / (e * g);
}

double yukawa_x0_fit(double ybar, double A) {
  check_ybar(ybar, "yukawa_x0_fit");
  const auto geo = YukawaGeometry::get();
  const double r = ybar / geo.fbar;
  const double radicand = 1.0 - r * r + A * ybar * (ybar - geo.fbar);
  if (radicand < 0.0) throw DomainError("yukawa_x0_fit: negative radicand");
  return geo.xbar + (1.0 / e - geo.xbar) * std::sqrt(radicand);
}

double yukawa_x0_exact(double ybar) {
  check_ybar(ybar, "yukawa_x0_exact");
  const auto geo = YukawaGeometry::get();
  if (ybar == 0.0) return 1.0 / e;
  if (ybar == geo.fbar) return geo.xbar;
  // F_{-1} decreases monotonically from Fbar at xbar to 0 at 1/e.
  RootConfig cfg;
  cfg.abs_tol = 1e-16;
  cfg.max_iter = 300;
  return find_root([ybar](double x) { return f_lower(x) - ybar; }, geo.xbar, kInvE, cfg);
}

double yukawa_critical_fit_parameter() {
  const double target = 2.0 / (e * e);
  const auto geo = YukawaGeometry::get();
  // x0_fit decreases in A; the radicand stays non-negative below a_max.
  const double r = target / geo.fbar;
  const double a_max = (1.0 - r * r) / (target * (geo.fbar - target));
  RootConfig cfg;
  cfg.abs_tol = 1e-14;
  cfg.max_iter = 300;
  return find_root([&](double A) { return yukawa_x0_fit(target, A) - target; }, 0.0, a_max, cfg);
}

std::optional<double> yukawa_energy(double g, double N, const X0Source& source) {
  const double ybar = yukawa_ybar(g, N);
  if (ybar > YukawaGeometry::get().fbar) return std::nullopt;
  const double x0 = std::visit(Overloaded{
                                   [&](const x0_source::Fit& f) { return yukawa_x0_fit(ybar, f.A); },
                                   [&](const x0_source::Exact&) { return yukawa_x0_exact(ybar); },
                               },
                               source);
  const double denom = 2.0 * ybar * (x0 + ybar);
  if (!(denom > 0.0)) throw NumericalError("yukawa_energy: vanishing denominator");
  return -g * e * x0 * x0 * (x0 - ybar) / denom;
}

std::optional<double> yukawa_energy_physical(const PhysicalPotential& p, double N, const X0Source& source) {
  p.validate();
  if (p.lambda != -1.0) throw DomainError("yukawa_energy_physical: requires lambda = -1");
  const auto eps = yukawa_energy(p.coupling(), N, source);
  if (!eps) return std::nullopt;
  return p.energy_scale() * *eps;
}

std::optional<double> envelope_upper_bound(double g, double N) {
  const double ybar = yukawa_ybar(g, N);
  // Stationary points of f(x) = N^2/x^2 - g e^{-x}/x solve
  // theta (theta + 1) e^{-(theta+1)} = Ybar. The left side rises on
  // [0, phi] to its maximum at the golden ratio phi; the smaller root is the minimum.
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  auto h = [](double t) { return t * (t + 1.0) * std::exp(-(t + 1.0)); };
  if (ybar > h(phi)) return std::nullopt;
  RootConfig cfg;
  cfg.abs_tol = 1e-16;
  cfg.max_iter = 300;
  const double theta = find_root([&](double t) { return h(t) - ybar; }, 0.0, phi, cfg);
  if (!(theta > 0.0)) return std::nullopt;
  const double value = N * N / (theta * theta) - g * std::exp(-theta) / theta;
  if (!(value < 0.0)) return std::nullopt;
  return value;
}

double yukawa_critical_height(QuantumNumbers q, const YukawaCriticalModel& model) {
  q.validate();
  const double n = q.n;
  const double l = q.l;
  auto sq = [](double s) { return s * s; };
  return std::visit(
      Overloaded{
          [](const yukawa_critical::AfmN& m) {
            if (!(m.N > 0.0)) throw DomainError("yukawa_critical_height: N must be positive");
            return e * m.N * m.N;
          },
          [&](const yukawa_critical::CalibratedExact&) { return sq(1.243 * n + 1.649 * l + 1.296); },
          [&](const yukawa_critical::CalibratedVariational&) { return sq(1.291 * n + 1.649 * l + 1.296); },
          [&](const yukawa_critical::FittedSqrtNL&) {
            return sq(1.247 * n + 1.680 * l - 0.054 * std::sqrt(n * l) + 1.296);
          },
          [&](const yukawa_critical::EmpiricalG& m) {
            constexpr double z0 = 0.839908;
            constexpr double s0 = 1.1335;
            const double zl = z0 * (1.0 + 2.7359 * l + 1.6242 * l * l);
            const double sl = m.full_s ? s0 * (1.0 + 0.019102 * l - 0.001684 * l * l) : s0;
            return 2.0 * sq(std::sqrt(zl) + n / sl);
          },
          [&](const yukawa_critical::EmpiricalGAsymptotic&) { return sq(1.248 * n + 1.652 * l + 1.296); },
      },
      model);
}

std::optional<double> yukawa_energy_empirical(double g, QuantumNumbers q) {
  q.validate();
  if (!(g > 0.0)) throw DomainError("yukawa_energy_empirical: g must be positive");
  constexpr double a_prime = 1.9875;
  constexpr double b_prime = 1.2464;
  constexpr double sigma = 0.003951;
  const double N = q.n + q.l + 1.0;
  const double gg = yukawa_critical_height(q, yukawa_critical::EmpiricalG{true});
  if (g <= gg) return std::nullopt;
  const double num = g - 2.0 * a_prime * (N + sigma) * (N + sigma) + 2.0 * b_prime * N * N;
  const double den = g - gg + 2.0 * b_prime * N * N;
  return -(g / (4.0 * N * N)) * (g - gg) * num / den;
}

double hulthen_critical_estimate(int n) {
  switch (n) {
    case 0:
      return 17.0 / (6.0 * std::log(27.0 / 5.0));
    case 1:
      return 1.0 / (60.0 * std::log(2.0) - 26.0 * std::log(3.0) - 8.0 * std::log(5.0));
    default:
      throw DomainError("hulthen_critical_estimate: only n = 0 and n = 1 are available");
  }
}

double hulthen_one_parameter_estimate() { return 1.0 / std::log(16.0 / 9.0); }

}  // namespace afm
