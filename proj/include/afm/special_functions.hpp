#pragma once

#include <numbers>

namespace afm {

/// Real branches of the Lambert function W, the inverse of w e^w.
enum class Branch {
  Principal,  // W_0, defined on [-1/e, inf), values >= -1
  Lower,      // W_{-1}, defined on [-1/e, 0), values <= -1
};

inline constexpr double kInvE = 0.36787944117144233;  // 1/e rounded to nearest

double lambert_w(Branch branch, double z);

/// Solves (a z + b)^n e^{-z} = theta for z with the Lambert function:
/// z = -b/a - n W[-(1/(a n)) (e^{-b/a} theta)^{1/n}].
double solve_shifted_exponential(double a, double b, double n, double theta, Branch branch);

/// Bessel function of the first kind J_nu(x) for real nu >= 0 and x >= 0.
double bessel_j(double nu, double x);

/// The (n+1)-th positive zero of J_0.
double bessel_j0_zero(int n);

}  // namespace afm
