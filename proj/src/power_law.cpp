#include "afm/power_law.hpp"

#include <cmath>

#include "afm/errors.hpp"

namespace afm {

void QuantumNumbers::validate() const {
  if (n < 0 || l < 0) throw DomainError("quantum numbers must be non-negative, got " + to_string(*this));
}

std::string to_string(const QuantumNumbers& q) {
  return "(n=" + std::to_string(q.n) + ", l=" + std::to_string(q.l) + ")";
}

double n_eta(double eta, QuantumNumbers q) {
  q.validate();
  if (!(eta > -2.0)) throw DomainError("n_eta: eta must exceed -2");
  const double b = (41.0 * eta + 86.0) / (13.0 * eta + 58.0);
  const double c = (5.0 * eta + 17.0) / (2.0 * eta + 14.0);
  return b * q.n + q.l + c;
}

double power_law_energy(double m, double a, double eta, double N) {
  if (!(eta > -2.0) || eta == 0.0) throw DomainError("power_law_energy: eta must be in (-2, 0) or (0, inf)");
  if (!(m > 0.0) || !(a > 0.0) || !(N > 0.0))
    throw DomainError("power_law_energy: m, a and N must be positive");
  const double p = eta + 2.0;
  return (p / (2.0 * eta)) * std::pow(a * std::abs(eta), 2.0 / p) * std::pow(N * N / m, eta / p);
}

}  // namespace afm
