#pragma once

#include <functional>
#include <vector>

namespace afm::detail {

struct SimplexResult {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
  bool converged = false;
};

// Nelder-Mead (GSL nmsimplex2) from x0 with initial step sizes `step`.
// Stops when the simplex size drops below size_tol.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                          std::vector<double> step, double size_tol = 1e-9, int max_iter = 4000);

}  // namespace afm::detail
