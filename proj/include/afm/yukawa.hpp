#pragma once

#include <optional>
#include <variant>

#include "afm/power_law.hpp"
#include "afm/problem.hpp"

// AFM spectrum of the Yukawa well -g e^{-x}/x (lambda = -1).
namespace afm {

/// Location and height of the maximum of F(x) = -x [1 + W_{-1}(-x)] on [0, 1/e].
struct YukawaGeometry {
  double xbar;  // ((3+sqrt5)/2) e^{-(3+sqrt5)/2}
  double fbar;  // (2+sqrt5) e^{-(3+sqrt5)/2}

  static YukawaGeometry get();
};

/// Ybar = 2 N^2 / (e g).
double yukawa_ybar(double g, double N);

/// Ellipse-branch approximation of x0(Ybar) with shape parameter A.
double yukawa_x0_fit(double ybar, double A);

/// Physical root of -x0 [1 + W_{-1}(-x0)] = Ybar on [xbar, 1/e].
double yukawa_x0_exact(double ybar);

/// A_c, the fit parameter for which the fitted x0 makes the energy vanish
/// exactly at g = e N^2 (solves x0_fit(2/e^2, A_c) = 2/e^2).
double yukawa_critical_fit_parameter();

namespace x0_source {
struct Fit {
  double A = 2.0;
};
struct Exact {};
}  // namespace x0_source

using X0Source = std::variant<x0_source::Fit, x0_source::Exact>;

/// epsilon = -g e x0^2 (x0 - Ybar) / (2 Ybar (x0 + Ybar)); nullopt when Ybar > Fbar.
std::optional<double> yukawa_energy(double g, double N, const X0Source& source = x0_source::Fit{});

/// Physical-unit energy E = (beta^2/2m) epsilon with g = 2 m alpha / beta; requires lambda = -1.
std::optional<double> yukawa_energy_physical(const PhysicalPotential& p, double N,
                                             const X0Source& source = x0_source::Fit{});

/// min_{x>0} N^2/x^2 - g e^{-x}/x, the envelope-theory upper bound, or nullopt
/// if the minimum does not exist or is not negative.
std::optional<double> envelope_upper_bound(double g, double N);

namespace yukawa_critical {
struct AfmN {
  double N;
};
struct CalibratedExact {};
struct CalibratedVariational {};
struct FittedSqrtNL {};
/// Literature fit 2 (sqrt(Z_l) + n/S_l)^2; fitted, not AFM. By default S_l is
/// replaced by S_0; full_s keeps S_l = S_0 (1 + gamma l + delta l^2).
struct EmpiricalG {
  bool full_s = false;
};
/// Large-l expansion of EmpiricalG.
struct EmpiricalGAsymptotic {};
}  // namespace yukawa_critical

using YukawaCriticalModel =
    std::variant<yukawa_critical::AfmN, yukawa_critical::CalibratedExact, yukawa_critical::CalibratedVariational,
                 yukawa_critical::FittedSqrtNL, yukawa_critical::EmpiricalG, yukawa_critical::EmpiricalGAsymptotic>;

double yukawa_critical_height(QuantumNumbers q, const YukawaCriticalModel& model);

/// Literature energy fit with Coulomb-like N = n + l + 1; fitted, not AFM.
/// Uses g^G_{nl} with the full S_l; nullopt when g <= g^G_{nl}.
std::optional<double> yukawa_energy_empirical(double g, QuantumNumbers q);

/// Variational critical-height estimates for l = 0, n in {0, 1}.
double hulthen_critical_estimate(int n);
/// One-parameter variational estimate of g_00, 1/ln(16/9).
double hulthen_one_parameter_estimate();

}  // namespace afm
