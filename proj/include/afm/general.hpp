#pragma once

#include <optional>

#include "afm/problem.hpp"
#include "afm/special_functions.hpp"

// AFM spectrum of -g x^lambda e^{-x} for general lambda, with the power-law
// potential -x^lambda as the solvable auxiliary problem.
namespace afm {

/// Shape of F_lambda(x) = x [lambda - W(-x)]^{lambda+2} on the physical segment.
struct GeneralGeometry {
  double lambda;
  double a;        // (sqrt(9 + 4 lambda) + 3) / 2
  double xbar;     // a e^{-a}, location of the maximum of F_lambda
  double fbar;     // a e^{-a} (lambda + a)^{lambda+2}
  double x_start;  // |lambda| e^lambda, the root continuous with Y -> 0

  static GeneralGeometry of(double lambda);
};

/// Y_lambda = 2 N^2 e^lambda / g.
double general_y(double g, double lambda, double N);

/// K(x) = g e^{-x} (x - lambda) / |lambda|, the auxiliary field as a function of position.
double k_lambda(double x, double g, double lambda);

/// Inverse of K: x = lambda - W(-e^lambda |lambda| nu / g).
double i_lambda(double nu, double g, double lambda, Branch branch);

/// Physical root of x0 [lambda - W_{-1}(-x0)]^{lambda+2} = Y for -2 < lambda <= -1.
double solve_x0_general(double y, double lambda);

/// A_lambda = -(109 + 196 lambda + 85 lambda^2); equals 2 at lambda = -1.
double a_lambda_fit(double lambda);

/// Ellipse-branch approximation of solve_x0_general with shape A_lambda.
double x0_fit_general(double y, double lambda);

enum class GeneralX0 { Exact, Fit };

/// AFM energy for -2 < lambda <= -1; nullopt when Y_lambda > Fbar_lambda.
std::optional<double> general_energy(double g, double lambda, double N, GeneralX0 x0 = GeneralX0::Exact);

std::optional<double> general_energy_physical(const PhysicalPotential& p, double N,
                                              GeneralX0 x0 = GeneralX0::Exact);

/// g_{lambda;nl} = (e / (lambda + 2))^{lambda+2} N^2.
double general_critical_height(double lambda, double N);

/// The lambda -> 0 form of the general energy,
/// -g x0 [sqrt(x0/Y0) - 1/2] with x0 = -3 W(-Z) e^{3 W(-Z)} and Y0 = (3Z)^3.
/// Agrees with exp_energy(g, N).
std::optional<double> lambda_zero_limit_check(double g, double N);

}  // namespace afm
