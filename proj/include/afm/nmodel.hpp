#pragma once

#include <string>
#include <utility>
#include <vector>

#include "afm/power_law.hpp"

namespace afm {

/// d(g) = (p g + q) / (g + r), a section of hyperbola with its pole at g = -r.
struct Hyperbola {
  double p = 1.0;
  double q = 0.0;
  double r = 0.0;

  /// Throws DomainError when g sits on the pole.
  double operator()(double g) const;
  double pole() const { return -r; }
};

/// c2 g^2 + c1 g + c0.
struct Quadratic {
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  double operator()(double g) const { return (c2 * g + c1) * g + c0; }
};

/// Rule for the effective quantum number N(g; n, l) entering the AFM formulas.
///
/// All kinds share the shape N = b n + d l + c + s sqrt(n l); they differ in
/// whether the coefficients are constants or functions of the coupling g.
class NModel {
 public:
  enum class Kind { EtaRational, FixedBC, CoulombLike, HyperbolaBC, HyperbolaSqrtNL };

  /// b(eta) n + l + c(eta) with the rational power-law coefficients.
  static NModel eta_rational(double eta);
  /// Constant coefficients; l_coef and sqrt_nl default to the plain b n + l + c form.
  static NModel fixed(double b, double c, double l_coef = 1.0, double sqrt_nl = 0.0);
  /// n + l + 1.
  static NModel coulomb();
  static NModel hyperbola_bc(Hyperbola b, Hyperbola c);
  static NModel hyperbola_sqrtnl(Hyperbola b, Hyperbola l_coef, Hyperbola c, Quadratic sqrt_nl);

  double operator()(double g, QuantumNumbers q) const;

  Kind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  NModel& rename(std::string name) {
    name_ = std::move(name);
    return *this;
  }

 private:
  Kind kind_ = Kind::CoulombLike;
  std::string name_;
  double eta_ = 0.0;
  // Constant coefficients (FixedBC, CoulombLike).
  double b_ = 1.0, c_ = 1.0, l_coef_ = 1.0, sqrt_nl_ = 0.0;
  // g-dependent coefficients (Hyperbola kinds).
  Hyperbola hb_, hl_, hc_;
  Quadratic hs_;
};

enum class NPreset { BcExp, AbcdExp, BcYuk, AbcdYuk, CoulombN, FixedEta };

/// The published parameterisations; eta is used by FixedEta only.
NModel preset(NPreset which, double eta = 0.0);

/// Parses bcdef:ETA | coulomb | bcexp | abcdexp | bcyuk | abcdyuk | fixed:B,C.
NModel parse_nmodel(const std::string& spec);

}  // namespace afm
