#pragma once

#include <optional>
#include <variant>

#include "afm/power_law.hpp"
#include "afm/problem.hpp"

// AFM spectrum of the pure exponential well -g e^{-x}, built on the linear
// potential as the solvable auxiliary problem.
namespace afm {

/// Z = (1/3) (2 N^2 / g)^{1/3}. Bound solutions need Z <= 1/e.
double exp_z(double g, double N);

struct ExpLevel {
  double g = 0.0;
  double N = 0.0;
  double Z = 0.0;
  std::optional<double> x0;       // e^{W0(-Z)}, in [0, 1]
  std::optional<double> nu0;      // g x0^3, in [0, g]
  std::optional<double> epsilon;  // absent when Z > 1/e
};

ExpLevel exp_level(double g, double N);

/// epsilon = -g e^{3 W0(-Z)} [1 + 3/2 W0(-Z)], or nullopt when Z > 1/e.
/// The value is positive for 2 e^{-2/3}/3 < Z <= 1/e.
std::optional<double> exp_energy(double g, double N);

/// Physical-unit energy; requires p.lambda == 0.
std::optional<double> exp_energy_physical(const PhysicalPotential& p, double N);

/// Lambert-free approximation of e^{3 W0(-Z)} [1 + 3/2 W0(-Z)] on [0, 1/e].
double exp_bracket_poly(double Z);

/// The exact bracket e^{3 W0(-Z)} [1 + 3/2 W0(-Z)].
double exp_bracket_exact(double Z);

namespace exp_critical {
struct AfmN {
  double N;
};
/// (pi^2/4)(n + 3/4)^2; derived for l = 0 only, l is ignored.
struct BesselAsymptotic {};
struct FittedLinear {};
struct FittedSqrtNL {};
}  // namespace exp_critical

using ExpCriticalModel = std::variant<exp_critical::AfmN, exp_critical::BesselAsymptotic,
                                      exp_critical::FittedLinear, exp_critical::FittedSqrtNL>;

double exp_critical_height(QuantumNumbers q, const ExpCriticalModel& model);

/// Exact l = 0 critical height j_n^2 / 4 from the zeros of J_0.
double exp_exact_critical_l0(int n);

}  // namespace afm
