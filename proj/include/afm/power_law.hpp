#pragma once

#include <compare>
#include <string>

namespace afm {

/// Radial (n) and orbital (l) quantum numbers of a level.
struct QuantumNumbers {
  int n = 0;
  int l = 0;

  void validate() const;
  auto operator<=>(const QuantumNumbers&) const = default;
};

std::string to_string(const QuantumNumbers& q);

/// Effective quantum number N = b(eta) n + l + c(eta) for a power-law
/// potential sgn(eta) r^eta, with rational b(eta) and c(eta) that make the
/// oscillator (eta = 2) and Coulomb (eta = -1) cases exact.
double n_eta(double eta, QuantumNumbers q);

/// AFM eigenvalue of p^2/2m + a sgn(eta) r^eta for an effective quantum number N:
/// ((2+eta)/(2 eta)) (a|eta|)^{2/(eta+2)} (N^2/m)^{eta/(eta+2)}.
double power_law_energy(double m, double a, double eta, double N);

}  // namespace afm
