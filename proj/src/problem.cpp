#include "afm/problem.hpp"

#include <cmath>

#include "afm/errors.hpp"

namespace afm {

void DimensionlessProblem::validate() const {
  if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("coupling g must be positive and finite");
  if (!(lambda > -2.0) || !std::isfinite(lambda)) throw DomainError("lambda must exceed -2");
}

void PhysicalPotential::validate() const {
  if (!(m > 0.0) || !(alpha > 0.0) || !(beta > 0.0))
    throw DomainError("physical potential needs m, alpha, beta > 0");
  if (!(lambda > -2.0)) throw DomainError("lambda must exceed -2");
}

double PhysicalPotential::coupling() const {
  validate();
  return 2.0 * m * alpha / std::pow(beta, lambda + 2.0);
}

double PhysicalPotential::energy_scale() const {
  validate();
  return beta * beta / (2.0 * m);
}

}  // namespace afm
