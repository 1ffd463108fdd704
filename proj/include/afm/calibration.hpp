#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "afm/general.hpp"
#include "afm/nmodel.hpp"
#include "afm/oracle.hpp"
#include "afm/yukawa.hpp"

// Calibration of the effective quantum number against oracle spectra: the
// chi measure, per-coupling coefficient optimisation, and hyperbola fits of
// the optimal coefficients across couplings.
namespace afm {

enum class Formula {
  Exponential,      // lambda = 0 AFM formula
  Yukawa,           // lambda = -1 AFM formula with the chosen x0 source
  General,          // -2 < lambda <= -1 AFM formula
  YukawaEmpirical,  // literature energy fit, not AFM
};

/// An approximate energy formula together with its N rule.
struct Approximant {
  std::string label;
  Formula formula = Formula::Exponential;
  NModel nmodel = NModel::coulomb();
  X0Source yukawa_x0 = x0_source::Fit{2.0};
  GeneralX0 general_x0 = GeneralX0::Exact;
  double lambda = 0.0;

  /// Raw formula value; nullopt when the formula has no real solution.
  std::optional<double> energy(double g, QuantumNumbers q) const;
  /// The energy when it is real and strictly negative, else nullopt.
  std::optional<double> bound_energy(double g, QuantumNumbers q) const;
  Approximant with_nmodel(NModel m) const;
};

/// The AFM formula matching a potential shape, using N model m.
Approximant afm_approximant(const DimensionlessProblem& shape, NModel m, std::string label = {});

/// Resolves a CLI approximant name (an N-model spec, or "empirical" for Yukawa).
Approximant named_approximant(const DimensionlessProblem& shape, const std::string& name);

/// Sum of (eps_num - eps_app)^2 over oracle levels whose approximation is real
/// and strictly negative. Throws EmptySum when no level qualifies.
double chi_measure(const Approximant& approx, const Spectrum& oracle);

struct CoefficientFit {
  std::vector<double> coefficients;  // (b, c) or (b, l_coef, c, sqrt_nl)
  double chi = 0.0;
  int levels_used = 0;
  // Set when the data cannot pin every coefficient (too few levels, or no n > 0 level for b).
  bool underdetermined = false;
};

/// Minimises chi over constant N = b n + l + c (or, with sqrt_nl, over
/// N = b n + d l + c + s sqrt(n l)) with a Nelder-Mead simplex restarted
/// from perturbed starts.
CoefficientFit optimize_bc(const Spectrum& oracle, const Approximant& base, std::vector<double> start,
                           bool sqrt_nl = false);

/// Default start: (1.5, 1.3) for the exponential, (1.0, 1.0) otherwise.
std::vector<double> default_bc_start(const DimensionlessProblem& shape, bool sqrt_nl = false);

struct HyperbolaFit {
  Hyperbola curve;
  double residual = 0.0;  // chi' = sum (d_min - d_fit)^2
  bool pole_in_range = false;
  // Constant samples: only p is identified, q = p r for any r. Reported with r = 0.
  bool degenerate = false;
};

/// Least-squares fit of d(g) = (p g + q)/(g + r) to samples. Needs >= 4
/// strictly increasing couplings; throws SingularFit when the linearised
/// problem d g = p g + q - r d is rank deficient.
HyperbolaFit fit_hyperbola(const std::vector<double>& g_values, const std::vector<double>& d_values);

/// Least-squares quadratic c2 g^2 + c1 g + c0 through the samples (>= 3 of them).
Quadratic fit_quadratic(const std::vector<double>& g_values, const std::vector<double>& d_values);

/// Per-coupling optima and their fitted coefficient functions.
struct FitDataset {
  DimensionlessProblem shape;
  bool sqrt_nl = false;
  std::vector<double> g_values;
  std::vector<CoefficientFit> per_g;
  std::vector<double> fitted_g;       // couplings entering the curve fits
  std::vector<std::string> names;     // "b", "c" or "b", "d", "c", "s"
  std::vector<HyperbolaFit> curves;   // one per rational coefficient
  std::optional<Quadratic> sqrt_nl_curve;
  std::optional<double> sqrt_nl_residual;
};

/// Runs the oracle and optimize_bc at each coupling (warm-starting from the
/// previous optimum), then fits the coefficient functions to the couplings
/// whose optimum is not underdetermined.
FitDataset fit_dataset(const DimensionlessProblem& shape, const std::vector<double>& g_values, bool sqrt_nl = false,
                       const SolverConfig& cfg = {});

struct ErrorStats {
  double min_pct = 0.0;
  double max_pct = 0.0;
  double mean_pct = 0.0;
  int count = 0;
};

/// Relative-error statistics (percent) of a critical-height model against an
/// exact table indexed [n][l].
ErrorStats critical_height_stats(const std::vector<std::vector<double>>& exact,
                                 const std::function<double(QuantumNumbers)>& model);

/// Default calibration grids of couplings.
std::vector<double> default_g_grid(const DimensionlessProblem& shape);

}  // namespace afm
