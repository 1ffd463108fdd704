#pragma once

namespace afm {

/// Reduced Hamiltonian q^2 - g x^lambda e^{-x} (units with 2m = 1, x = beta r).
struct DimensionlessProblem {
  double g = 1.0;
  double lambda = 0.0;

  void validate() const;
};

/// H = p^2/2m - alpha r^lambda e^{-beta r} in physical units.
struct PhysicalPotential {
  double m = 1.0;
  double alpha = 1.0;
  double beta = 1.0;
  double lambda = 0.0;

  void validate() const;
  /// g = 2 m alpha / beta^{lambda+2}.
  double coupling() const;
  /// beta^2 / 2m, the factor mapping reduced energies to physical ones.
  double energy_scale() const;
  DimensionlessProblem reduced() const { return {coupling(), lambda}; }
};

}  // namespace afm
