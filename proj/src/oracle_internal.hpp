#pragma once

#include <vector>

#include "afm/oracle.hpp"

namespace afm::detail {

double potential_range(const RadialPotential& v);

class LogNumerov {
 public:
  LogNumerov(const RadialPotential& v, int l, double ds);

  struct Outcome {
    int nodes = 0;
    double w_end = 0.0;
    double w_match = 0.0;
    double s_end = 0.0;
    double s_match = 0.0;
  };

  Outcome integrate(double energy, double x_end, double x_match) const;
  int zero_energy_count() const;
  /// Number of Dirichlet eigenvalues on [0, box] below energy.
  int count_below(double energy, double box) const;
  /// The (n+1)-th Dirichlet eigenvalue on [0, box].
  double level(int n, double box) const;

 private:
  RadialPotential v_;
  int l_;
  double ds_;
  double s_min_;
};

double shooting_level(const RadialPotential& v, int l, int n, double ds);
std::vector<double> laguerre_zeros(int n);
std::vector<LevelResult> partial_wave(const RadialPotential& v, int l, int count, const SolverConfig& cfg);
double critical_height(double lambda, QuantumNumbers q);

}  // namespace afm::detail
