// afmspec: AFM spectra, critical heights, oracle levels and calibration reports.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "afm/calibration.hpp"
#include "afm/errors.hpp"
#include "afm/exponential.hpp"
#include "afm/general.hpp"
#include "afm/oracle.hpp"
#include "afm/report.hpp"
#include "afm/yukawa.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnbound = 2;

enum class Format { Csv, Json };

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}
std::string num(std::optional<double> v) { return v ? num(*v) : "*"; }
json jnum(std::optional<double> v) { return v ? json(*v) : json(nullptr); }

// CSV writer for flat tables; JSON emits an array of objects keyed by header.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<json> jrows;

  void add(std::vector<std::string> cells, json j) {
    rows.push_back(std::move(cells));
    jrows.push_back(std::move(j));
  }
  void print(Format f) const {
    if (f == Format::Json) {
      std::cout << json(jrows).dump(2) << '\n';
      return;
    }
    for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
    std::cout << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) std::cout << (i ? "," : "") << r[i];
      std::cout << '\n';
    }
  }
};

struct PotentialOpt {
  std::string name = "exp";
  std::optional<double> lambda;

  afm::DimensionlessProblem shape(double g = 1.0) const {
    double lam = 0.0;
    if (name == "exp") {
      lam = 0.0;
    } else if (name == "yukawa") {
      lam = -1.0;
    } else {
      if (!lambda) throw afm::DomainError("--potential general needs --lambda");
      lam = *lambda;
    }
    if (name != "general" && lambda && *lambda != lam)
      throw afm::DomainError("--lambda conflicts with --potential " + name);
    return {g, lam};
  }
};

void add_potential(CLI::App* sub, PotentialOpt& p) {
  sub->add_option("--potential", p.name, "exp | yukawa | general")
      ->check(CLI::IsMember({"exp", "yukawa", "general"}))
      ->capture_default_str();
  sub->add_option("--lambda", p.lambda, "power of r for --potential general");
}

void add_format(CLI::App* sub, std::string& fmt) {
  sub->add_option("--format", fmt, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

Format parse_format(const std::string& s) { return s == "json" ? Format::Json : Format::Csv; }

// "fixed:B,C" contains a comma, so list items are re-joined after splitting.
std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts, out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) parts.push_back(item);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].rfind("fixed:", 0) == 0 && parts[i].find(',') == std::string::npos && i + 1 < parts.size()) {
      out.push_back(parts[i] + "," + parts[i + 1]);
      ++i;
    } else {
      out.push_back(parts[i]);
    }
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    std::size_t pos = 0;
    out.push_back(std::stod(item, &pos));
    if (pos != item.size()) throw afm::DomainError("bad number '" + item + "'");
  }
  return out;
}

afm::Approximant make_approximant(const afm::DimensionlessProblem& shape, const std::string& nmodel,
                                  const std::string& x0) {
  auto a = afm::afm_approximant(shape, afm::parse_nmodel(nmodel), nmodel);
  if (x0 == "exact") {
    a.yukawa_x0 = afm::x0_source::Exact{};
    a.general_x0 = afm::GeneralX0::Exact;
  } else if (x0.rfind("fit", 0) == 0) {
    a.general_x0 = afm::GeneralX0::Fit;
    double A = 2.0;
    if (x0.size() > 4 && x0[3] == ':') A = x0.substr(4) == "critical" ? afm::yukawa_critical_fit_parameter()
                                                                    : std::stod(x0.substr(4));
    else if (x0 != "fit") throw afm::DomainError("--x0 expects fit[:A] or exact");
    a.yukawa_x0 = afm::x0_source::Fit{A};
  } else {
    throw afm::DomainError("--x0 expects fit[:A] or exact");
  }
  return a;
}

// ---- levels ---------------------------------------------------------------

struct LevelsOpts {
  PotentialOpt pot;
  double g = 0.0;
  std::optional<int> n, l;
  bool all_bound = false;
  std::string nmodel = "coulomb";
  std::string x0 = "fit:2";
  std::string format = "csv";
};

int run_levels(const LevelsOpts& o) {
  const auto shape = o.pot.shape(o.g);
  shape.validate();
  const auto approx = make_approximant(shape, o.nmodel, o.x0);
  Table t{{"n", "l", "N", "epsilon"}, {}, {}};
  auto emit = [&](afm::QuantumNumbers q, std::optional<double> eps) {
    const double N = approx.nmodel(o.g, q);
    t.add({std::to_string(q.n), std::to_string(q.l), num(N), num(eps)},
          {{"n", q.n}, {"l", q.l}, {"N", N}, {"epsilon", jnum(eps)}});
  };

  if (o.all_bound) {
    // Every state the formula binds: scan n within each l until it stops binding.
    constexpr int kCap = 200;
    for (int l = 0; l < kCap; ++l) {
      int n = 0;
      for (; n < kCap; ++n) {
        const auto eps = approx.bound_energy(o.g, {n, l});
        if (!eps) break;
        emit({n, l}, eps);
      }
      if (n == 0) break;
    }
    t.print(parse_format(o.format));
    return kExitOk;
  }

  if (!o.n || !o.l) throw afm::DomainError("levels needs --n and --l, or --all-bound");
  const afm::QuantumNumbers q{*o.n, *o.l};
  q.validate();
  const auto eps = approx.bound_energy(o.g, q);
  emit(q, eps);
  t.print(parse_format(o.format));
  return eps ? kExitOk : kExitUnbound;
}

// ---- physical -------------------------------------------------------------

struct PhysicalOpts {
  afm::PhysicalPotential p;
  int n = 0, l = 0;
  std::string nmodel = "coulomb";
  std::string x0 = "fit:2";
  std::string format = "csv";
};

int run_physical(const PhysicalOpts& o) {
  o.p.validate();
  const auto shape = o.p.reduced();
  const auto approx = make_approximant(shape, o.nmodel, o.x0);
  const afm::QuantumNumbers q{o.n, o.l};
  q.validate();
  const auto eps = approx.bound_energy(shape.g, q);
  std::optional<double> E;
  if (eps) E.emplace(o.p.energy_scale() * eps.value());
  const double N = approx.nmodel(shape.g, q);
  Table t{{"n", "l", "g", "N", "epsilon", "E"}, {}, {}};
  t.add({std::to_string(q.n), std::to_string(q.l), num(shape.g), num(N), num(eps), num(E)},
        {{"n", q.n}, {"l", q.l}, {"g", shape.g}, {"N", N}, {"epsilon", jnum(eps)}, {"E", jnum(E)}});
  t.print(parse_format(o.format));
  return eps ? kExitOk : kExitUnbound;
}

// ---- critical -------------------------------------------------------------

struct CriticalOpts {
  PotentialOpt pot;
  std::string model = "afm";
  std::string nmodel;
  int nmax = 3, lmax = 3;
  std::string format = "csv";
};

int run_critical(const CriticalOpts& o) {
  const auto shape = o.pot.shape();
  const double lam = shape.lambda;
  if (o.nmax < 0 || o.lmax < 0) throw afm::DomainError("--nmax and --lmax must be non-negative");

  std::vector<std::vector<double>> exact;
  if (o.model == "exact") exact = afm::critical_height_table(lam, o.nmax, o.lmax);

  std::optional<afm::NModel> nm;
  if (!o.nmodel.empty()) {
    nm = afm::parse_nmodel(o.nmodel);
    if (nm->kind() == afm::NModel::Kind::HyperbolaBC || nm->kind() == afm::NModel::Kind::HyperbolaSqrtNL)
      throw afm::DomainError("critical heights need a coupling-independent N model");
  }
  auto afm_n = [&](afm::QuantumNumbers q) { return nm ? (*nm)(1.0, q) : afm::n_eta(std::max(lam, -1.0), q); };

  std::function<std::optional<double>(afm::QuantumNumbers)> model;
  const bool exp = lam == 0.0, yuk = lam == -1.0;
  if (o.model == "exact") {
    model = [&](afm::QuantumNumbers q) { return std::optional(exact[q.n][q.l]); };
  } else if (o.model == "afm") {
    model = [&](afm::QuantumNumbers q) { return std::optional(afm::general_critical_height(lam, afm_n(q))); };
  } else if (exp && o.model == "bessel") {
    model = [](afm::QuantumNumbers q) -> std::optional<double> {
      if (q.l != 0) return std::nullopt;
      return afm::exp_critical_height(q, afm::exp_critical::BesselAsymptotic{});
    };
  } else if (exp && (o.model == "linear" || o.model == "sqrtnl")) {
    const afm::ExpCriticalModel m = o.model == "linear" ? afm::ExpCriticalModel{afm::exp_critical::FittedLinear{}}
                                                        : afm::ExpCriticalModel{afm::exp_critical::FittedSqrtNL{}};
    model = [m](afm::QuantumNumbers q) { return std::optional(afm::exp_critical_height(q, m)); };
  } else if (yuk && (o.model == "linear" || o.model == "variational" || o.model == "sqrtnl" ||
                     o.model == "empirical" || o.model == "empirical-full" || o.model == "empirical-asymptotic")) {
    afm::YukawaCriticalModel m = afm::yukawa_critical::CalibratedExact{};
    if (o.model == "variational") m = afm::yukawa_critical::CalibratedVariational{};
    if (o.model == "sqrtnl") m = afm::yukawa_critical::FittedSqrtNL{};
    if (o.model == "empirical") m = afm::yukawa_critical::EmpiricalG{};
    if (o.model == "empirical-full") m = afm::yukawa_critical::EmpiricalG{true};
    if (o.model == "empirical-asymptotic") m = afm::yukawa_critical::EmpiricalGAsymptotic{};
    model = [m](afm::QuantumNumbers q) { return std::optional(afm::yukawa_critical_height(q, m)); };
  } else if (yuk && o.model == "hulthen") {
    model = [](afm::QuantumNumbers q) -> std::optional<double> {
      if (q.l != 0 || q.n > 1) return std::nullopt;
      return afm::hulthen_critical_estimate(q.n);
    };
  } else {
    throw afm::DomainError("model '" + o.model + "' is not available for this potential");
  }

  Table t{{"n", "l", "g_crit"}, {}, {}};
  for (int n = 0; n <= o.nmax; ++n)
    for (int l = 0; l <= o.lmax; ++l) {
      const auto v = model({n, l});
      t.add({std::to_string(n), std::to_string(l), num(v)}, {{"n", n}, {"l", l}, {"g_crit", jnum(v)}});
    }
  t.print(parse_format(o.format));
  return kExitOk;
}

// ---- compare --------------------------------------------------------------

struct CompareOpts {
  PotentialOpt pot;
  double g = 0.0;
  std::string approximants;
  std::string oracle = "mesh";
  std::string x0 = "fit:2";
  bool stats = false;
  std::string format = "csv";
};

afm::SolverConfig solver(const std::string& method, std::optional<int> mesh = {}) {
  afm::SolverConfig cfg;
  cfg.method = method == "shooting" ? afm::SolverMethod::NumerovShooting : afm::SolverMethod::LagrangeMesh;
  if (mesh) cfg.mesh_size = *mesh;
  cfg.validate();
  return cfg;
}

int run_compare(const CompareOpts& o) {
  const auto shape = o.pot.shape(o.g);
  shape.validate();
  std::vector<afm::Approximant> list;
  for (const auto& name : split_list(o.approximants)) {
    if (name == "empirical")
      list.push_back(afm::named_approximant(shape, name));
    else
      list.push_back(make_approximant(shape, name, o.x0));
  }
  if (list.empty()) throw afm::DomainError("--approximants is empty");
  const auto report = afm::build_report(shape, list, solver(o.oracle));
  if (parse_format(o.format) == Format::Json)
    std::cout << afm::to_json(report) << '\n';
  else if (o.stats)
    afm::write_stats_csv(std::cout, report);
  else
    afm::write_csv(std::cout, report);
  return kExitOk;
}

// ---- fit ------------------------------------------------------------------

struct FitOpts {
  PotentialOpt pot;
  std::string g_list;
  bool sqrt_nl = false;
  bool per_g = false;
  std::string format = "csv";
};

int run_fit(const FitOpts& o) {
  const auto shape = o.pot.shape();
  const auto g = o.g_list.empty() ? afm::default_g_grid(shape) : parse_doubles(o.g_list);
  const auto ds = afm::fit_dataset(shape, g, o.sqrt_nl);

  Table per{{"g"}, {}, {}};
  for (const auto& n : ds.names) per.header.push_back(n);
  for (const char* h : {"chi", "levels", "underdetermined"}) per.header.push_back(h);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto& f = ds.per_g[i];
    std::vector<std::string> cells{num(g[i])};
    json j{{"g", g[i]}};
    for (std::size_t k = 0; k < ds.names.size(); ++k) {
      cells.push_back(num(f.coefficients[k]));
      j[ds.names[k]] = f.coefficients[k];
    }
    cells.insert(cells.end(), {num(f.chi), std::to_string(f.levels_used), f.underdetermined ? "1" : "0"});
    j["chi"] = f.chi;
    j["levels"] = f.levels_used;
    j["underdetermined"] = f.underdetermined;
    per.add(std::move(cells), std::move(j));
  }

  Table curves{{"coefficient", "form", "p", "q", "r", "residual", "pole_in_range", "degenerate"}, {}, {}};
  for (std::size_t k = 0; k < ds.curves.size(); ++k) {
    const auto& c = ds.curves[k];
    curves.add({ds.names[k], "hyperbola", num(c.curve.p), num(c.curve.q), num(c.curve.r), num(c.residual),
                c.pole_in_range ? "1" : "0", c.degenerate ? "1" : "0"},
               {{"coefficient", ds.names[k]},
                {"form", "hyperbola"},
                {"p", c.curve.p},
                {"q", c.curve.q},
                {"r", c.curve.r},
                {"residual", c.residual},
                {"pole_in_range", c.pole_in_range},
                {"degenerate", c.degenerate}});
  }
  if (ds.sqrt_nl_curve) {
    const auto& s = *ds.sqrt_nl_curve;
    // Quadratic c2 g^2 + c1 g + c0 reported in the p, q, r columns.
    curves.add({"s", "quadratic", num(s.c2), num(s.c1), num(s.c0), num(ds.sqrt_nl_residual), "0", "0"},
               {{"coefficient", "s"},
                {"form", "quadratic"},
                {"c2", s.c2},
                {"c1", s.c1},
                {"c0", s.c0},
                {"residual", jnum(ds.sqrt_nl_residual)}});
  }

  const auto fmt = parse_format(o.format);
  if (fmt == Format::Json) {
    std::cout << json{{"per_g", per.jrows}, {"curves", curves.jrows}, {"fitted_g", ds.fitted_g}}.dump(2) << '\n';
  } else {
    (o.per_g ? per : curves).print(fmt);
  }
  return kExitOk;
}

// ---- oracle ---------------------------------------------------------------

struct OracleOpts {
  PotentialOpt pot;
  double g = 0.0;
  int n = 0, l = 0;
  std::optional<int> mesh;
  std::string method = "mesh";
  std::string format = "csv";
};

int run_oracle(const OracleOpts& o) {
  const auto shape = o.pot.shape(o.g);
  shape.validate();
  const afm::QuantumNumbers q{o.n, o.l};
  q.validate();
  Table t{{"n", "l", "epsilon", "converged", "residual"}, {}, {}};
  int code = kExitOk;
  try {
    const auto r = afm::solve_radial(shape, q, solver(o.method, o.mesh));
    t.add({std::to_string(q.n), std::to_string(q.l), num(r.epsilon), r.converged ? "1" : "0", num(r.residual)},
          {{"n", q.n}, {"l", q.l}, {"epsilon", r.epsilon}, {"converged", r.converged}, {"residual", r.residual}});
  } catch (const afm::NoBoundState&) {
    t.add({std::to_string(q.n), std::to_string(q.l), "*", "0", "*"},
          {{"n", q.n}, {"l", q.l}, {"epsilon", nullptr}, {"converged", false}, {"residual", nullptr}});
    code = kExitUnbound;
  }
  t.print(parse_format(o.format));
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Auxiliary field method spectra for -alpha r^lambda exp(-beta r) potentials"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "afmspec 1.0");

  std::function<int()> action;

  LevelsOpts lv;
  auto* levels = app.add_subcommand("levels", "AFM energies at one coupling");
  add_potential(levels, lv.pot);
  levels->add_option("--g", lv.g, "dimensionless coupling")->required();
  levels->add_option("--n", lv.n);
  levels->add_option("--l", lv.l);
  levels->add_flag("--all-bound", lv.all_bound, "every state with a negative AFM energy");
  levels->add_option("--nmodel", lv.nmodel, "bcdef:ETA|coulomb|bcexp|abcdexp|bcyuk|abcdyuk|fixed:B,C")
      ->capture_default_str();
  levels->add_option("--x0", lv.x0, "fit[:A] (A = number or 'critical') | exact")->capture_default_str();
  add_format(levels, lv.format);
  levels->callback([&] { action = [&] { return run_levels(lv); }; });

  PhysicalOpts ph;
  auto* physical = app.add_subcommand("physical", "AFM energy in physical units, E = beta^2 eps / 2m");
  physical->add_option("--m", ph.p.m)->required();
  physical->add_option("--alpha", ph.p.alpha)->required();
  physical->add_option("--beta", ph.p.beta)->required();
  physical->add_option("--lambda", ph.p.lambda)->required();
  physical->add_option("--n", ph.n)->required();
  physical->add_option("--l", ph.l)->required();
  physical->add_option("--nmodel", ph.nmodel)->capture_default_str();
  physical->add_option("--x0", ph.x0)->capture_default_str();
  add_format(physical, ph.format);
  physical->callback([&] { action = [&] { return run_physical(ph); }; });

  CriticalOpts cr;
  auto* critical = app.add_subcommand("critical", "critical heights g_nl");
  add_potential(critical, cr.pot);
  critical->add_option("--model", cr.model,
                       "afm|bessel|linear|sqrtnl|empirical|hulthen|exact "
                       "(yukawa also: variational, empirical-full, empirical-asymptotic)")
      ->capture_default_str();
  critical->add_option("--nmodel", cr.nmodel, "N model for --model afm (default: power-law N)");
  critical->add_option("--nmax", cr.nmax)->capture_default_str();
  critical->add_option("--lmax", cr.lmax)->capture_default_str();
  add_format(critical, cr.format);
  critical->callback([&] { action = [&] { return run_critical(cr); }; });

  CompareOpts cp;
  auto* compare = app.add_subcommand("compare", "exact versus approximate levels with quality statistics");
  add_potential(compare, cp.pot);
  compare->add_option("--g", cp.g)->required();
  compare->add_option("--approximants", cp.approximants, "comma-separated N models, or 'empirical'")->required();
  compare->add_option("--oracle", cp.oracle)->check(CLI::IsMember({"mesh", "shooting"}))->capture_default_str();
  compare->add_option("--x0", cp.x0)->capture_default_str();
  compare->add_flag("--stats", cp.stats, "emit R and Delta statistics instead of rows");
  add_format(compare, cp.format);
  compare->callback([&] { action = [&] { return run_compare(cp); }; });

  FitOpts ft;
  auto* fit = app.add_subcommand("fit", "optimal N coefficients per coupling and their fitted functions");
  add_potential(fit, ft.pot);
  fit->add_option("--g-list", ft.g_list, "comma-separated couplings (default grid when absent)");
  fit->add_flag("--sqrtnl", ft.sqrt_nl, "fit b n + d l + c + s sqrt(n l)");
  fit->add_flag("--per-g", ft.per_g, "emit the per-coupling optima instead of the curves");
  add_format(fit, ft.format);
  fit->callback([&] { action = [&] { return run_fit(ft); }; });

  OracleOpts orc;
  auto* oracle = app.add_subcommand("oracle", "numerical eigenvalue of one level");
  add_potential(oracle, orc.pot);
  oracle->add_option("--g", orc.g)->required();
  oracle->add_option("--n", orc.n)->required();
  oracle->add_option("--l", orc.l)->required();
  oracle->add_option("--mesh", orc.mesh, "Lagrange mesh size");
  oracle->add_option("--method", orc.method)->check(CLI::IsMember({"mesh", "shooting"}))->capture_default_str();
  add_format(oracle, orc.format);
  oracle->callback([&] { action = [&] { return run_oracle(orc); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "afmspec: " << e.what() << '\n';
    return kExitError;
  }
}
