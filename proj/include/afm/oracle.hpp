#pragma once

#include <optional>
#include <vector>

#include "afm/power_law.hpp"
#include "afm/problem.hpp"

// Numerical reference spectra of q^2 - g x^lambda e^{-x}, independent of the
// AFM formulas. Energies are in reduced units (2m = 1, x = beta r).
namespace afm {

enum class SolverMethod { LagrangeMesh, NumerovShooting };

struct SolverConfig {
  SolverMethod method = SolverMethod::LagrangeMesh;
  int mesh_size = 400;
  // Radial extent of the mesh in x; chosen from g, lambda and the level depth when absent.
  std::optional<double> domain_scale;
  double eig_tol = 1e-9;

  void validate() const;
};

struct LevelResult {
  QuantumNumbers q;
  double epsilon = 0.0;
  bool converged = false;
  // |epsilon(mesh) - epsilon(2 mesh)| / max(1, |epsilon|), or the same
  // measure under step halving for shooting.
  double residual = 0.0;
};

/// -g x^lambda e^{-x}, or the bare power law -g x^lambda when screened is false.
struct RadialPotential {
  double g = 1.0;
  double lambda = 0.0;
  bool screened = true;

  static RadialPotential from(const DimensionlessProblem& p) { return {p.g, p.lambda, true}; }
  double operator()(double x) const;
  void validate() const;
};

/// Largest tolerated |delta epsilon| under mesh doubling or step halving.
inline constexpr double kLevelTolerance = 1e-6;

/// The (n+1)-th bound level of the l-wave. Throws NoBoundState when it does not exist.
/// With LagrangeMesh and an automatic domain, s-waves for lambda < -1 and any
/// partial wave whose mesh doubling never settles are solved by shooting.
LevelResult solve_radial(const DimensionlessProblem& problem, QuantumNumbers q, const SolverConfig& cfg = {});
LevelResult solve_radial(const RadialPotential& potential, QuantumNumbers q, const SolverConfig& cfg = {});

/// Eigenvalues (ascending) of one partial wave on a Lagrange-Laguerre mesh
/// of the given size and radial extent.
std::vector<double> lagrange_mesh_eigenvalues(const RadialPotential& potential, int l, int mesh_size,
                                              double extent);

/// Number of bound l-wave states, from the nodes of the regular zero-energy solution.
int bound_state_count(const DimensionlessProblem& problem, int l);

/// Coupling at which the (n, l) level reaches zero energy.
double exact_critical_height(double lambda, QuantumNumbers q, const SolverConfig& cfg = {});

/// Pure exponential, l = 0: the (n+1)-th deepest epsilon < 0 with J_{2 sqrt(-eps)}(2 sqrt g) = 0.
double exp_exact_l0_energy(double g, int n);

struct Spectrum {
  DimensionlessProblem problem;
  std::vector<LevelResult> levels;  // ordered by l, then n

  std::optional<double> energy(QuantumNumbers q) const;
  std::size_t size() const { return levels.size(); }
};

/// Every bound level of the problem. Partial waves are solved concurrently.
Spectrum bound_spectrum(const DimensionlessProblem& problem, const SolverConfig& cfg = {});

/// Exact critical heights for n in [0, nmax], l in [0, lmax], as table[n][l].
/// Cells are computed concurrently.
std::vector<std::vector<double>> critical_height_table(double lambda, int nmax, int lmax,
                                                       const SolverConfig& cfg = {});

/// Spectra for several couplings, one task per coupling.
std::vector<Spectrum> bound_spectra(const DimensionlessProblem& shape, const std::vector<double>& g_values,
                                    const SolverConfig& cfg = {});

// Sequential versions of the sweeps above, kept as the reference the
// parallel kernels are tested against.
namespace reference {
Spectrum bound_spectrum(const DimensionlessProblem& problem, const SolverConfig& cfg = {});
std::vector<std::vector<double>> critical_height_table(double lambda, int nmax, int lmax,
                                                       const SolverConfig& cfg = {});
std::vector<Spectrum> bound_spectra(const DimensionlessProblem& shape, const std::vector<double>& g_values,
                                    const SolverConfig& cfg = {});
}  // namespace reference

}  // namespace afm
