#include "afm/nmodel.hpp"

#include <cmath>
#include <sstream>

#include "afm/errors.hpp"

namespace afm {

double Hyperbola::operator()(double g) const {
  const double den = g + r;
  if (std::abs(den) <= 1e-9 * std::max(1.0, std::abs(r)))
    throw DomainError("hyperbola evaluated at its pole g = " + std::to_string(-r));
  return (p * g + q) / den;
}

NModel NModel::eta_rational(double eta) {
  if (!(eta > -2.0)) throw DomainError("NModel::eta_rational: eta must exceed -2");
  NModel m;
  m.kind_ = Kind::EtaRational;
  m.eta_ = eta;
  std::ostringstream os;
  os << "bcdef:" << eta;
  m.name_ = os.str();
  return m;
}

NModel NModel::fixed(double b, double c, double l_coef, double sqrt_nl) {
  NModel m;
  m.kind_ = Kind::FixedBC;
  m.b_ = b;
  m.c_ = c;
  m.l_coef_ = l_coef;
  m.sqrt_nl_ = sqrt_nl;
  std::ostringstream os;
  os << "fixed:" << b << "," << c;
  m.name_ = os.str();
  return m;
}

NModel NModel::coulomb() {
  NModel m;
  m.kind_ = Kind::CoulombLike;
  m.name_ = "coulomb";
  return m;
}

NModel NModel::hyperbola_bc(Hyperbola b, Hyperbola c) {
  NModel m;
  m.kind_ = Kind::HyperbolaBC;
  m.hb_ = b;
  m.hc_ = c;
  m.hl_ = {1.0, 0.0, 0.0};
  m.name_ = "hyperbola-bc";
  return m;
}

NModel NModel::hyperbola_sqrtnl(Hyperbola b, Hyperbola l_coef, Hyperbola c, Quadratic sqrt_nl) {
  NModel m;
  m.kind_ = Kind::HyperbolaSqrtNL;
  m.hb_ = b;
  m.hl_ = l_coef;
  m.hc_ = c;
  m.hs_ = sqrt_nl;
  m.name_ = "hyperbola-sqrtnl";
  return m;
}

double NModel::operator()(double g, QuantumNumbers q) const {
  q.validate();
  const double n = q.n;
  const double l = q.l;
  switch (kind_) {
    case Kind::EtaRational:
      return n_eta(eta_, q);
    case Kind::CoulombLike:
      return n + l + 1.0;
    case Kind::FixedBC:
      return b_ * n + l_coef_ * l + c_ + sqrt_nl_ * std::sqrt(n * l);
    case Kind::HyperbolaBC:
      return hb_(g) * n + l + hc_(g);
    case Kind::HyperbolaSqrtNL:
      return hb_(g) * n + hl_(g) * l + hc_(g) + hs_(g) * std::sqrt(n * l);
  }
  throw DomainError("NModel: unknown kind");
}

NModel preset(NPreset which, double eta) {
  switch (which) {
    case NPreset::BcExp:
      return NModel::hyperbola_bc({1.42, -12.76, -8.62}, {1.32, 16.88, 14.95}).rename("bcexp");
    case NPreset::AbcdExp:
      return NModel::hyperbola_sqrtnl({1.44, -11.17, -6.86}, {0.95, -1.36, -0.33}, {1.43, 23.09, 20.60},
                                      {6.69e-6, -0.00019, -0.126})
          .rename("abcdexp");
    case NPreset::BcYuk:
      return NModel::hyperbola_bc({0.99, -5.92, -5.08}, {1.00, -1.68, -1.58}).rename("bcyuk");
    case NPreset::AbcdYuk:
      return NModel::hyperbola_sqrtnl({0.99, -7.16, -6.64}, {1.00, 2.51, 3.16}, {1.00, -1.89, -1.79},
                                      {-0.000233, 0.0202, -0.480})
          .rename("abcdyuk");
    case NPreset::CoulombN:
      return NModel::coulomb();
    case NPreset::FixedEta:
      return NModel::eta_rational(eta);
  }
  throw DomainError("preset: unknown preset");
}

namespace {

double parse_number(const std::string& text, const std::string& spec) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw DomainError("invalid number in N model '" + spec + "'");
  return value;
}

}  // namespace

NModel parse_nmodel(const std::string& spec) {
  if (spec == "coulomb") return preset(NPreset::CoulombN);
  if (spec == "bcexp") return preset(NPreset::BcExp);
  if (spec == "abcdexp") return preset(NPreset::AbcdExp);
  if (spec == "bcyuk") return preset(NPreset::BcYuk);
  if (spec == "abcdyuk") return preset(NPreset::AbcdYuk);
  if (spec.rfind("bcdef:", 0) == 0) return preset(NPreset::FixedEta, parse_number(spec.substr(6), spec));
  if (spec.rfind("fixed:", 0) == 0) {
    const auto body = spec.substr(6);
    const auto comma = body.find(',');
    if (comma == std::string::npos) throw DomainError("fixed N model needs B,C: '" + spec + "'");
    return NModel::fixed(parse_number(body.substr(0, comma), spec), parse_number(body.substr(comma + 1), spec));
  }
  throw DomainError("unknown N model '" + spec + "'");
}

}  // namespace afm
