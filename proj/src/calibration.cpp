#include "afm/calibration.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

#include "afm/errors.hpp"
#include "afm/exponential.hpp"
#include "simplex.hpp"

namespace afm {
namespace {

constexpr double kEmptyPenalty = 1e12;

NModel coefficient_model(const std::vector<double>& p) {
  if (p.size() == 2) return NModel::fixed(p[0], p[1]);
  return NModel::fixed(p[0], p[2], p[1], p[3]);
}

struct ChiTerms {
  double sum = 0.0;
  int used = 0;
  bool has_excited = false;
};

ChiTerms chi_terms(const Approximant& approx, const Spectrum& oracle) {
  ChiTerms t;
  for (const auto& lv : oracle.levels) {
    const auto app = approx.bound_energy(oracle.problem.g, lv.q);
    if (!app) continue;
    const double d = lv.epsilon - *app;
    t.sum += d * d;
    ++t.used;
    if (lv.q.n > 0) t.has_excited = true;
  }
  return t;
}

void check_samples(const std::vector<double>& g, const std::vector<double>& d, std::size_t min_size,
                   const char* where) {
  if (g.size() != d.size()) throw DomainError(std::string(where) + ": sample lengths differ");
  if (g.size() < min_size)
    throw DomainError(std::string(where) + ": needs at least " + std::to_string(min_size) + " samples");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!std::isfinite(g[i]) || !std::isfinite(d[i])) throw DomainError(std::string(where) + ": non-finite sample");
    if (i > 0 && !(g[i] > g[i - 1])) throw DomainError(std::string(where) + ": couplings must strictly increase");
  }
}

double hyperbola_residual(const Hyperbola& h, const std::vector<double>& g, const std::vector<double>& d) {
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double den = g[i] + h.r;
    if (den == 0.0) return std::numeric_limits<double>::infinity();
    const double r = d[i] - (h.p * g[i] + h.q) / den;
    s += r * r;
  }
  return s;
}

}  // namespace

std::optional<double> Approximant::energy(double g, QuantumNumbers q) const {
  if (formula == Formula::YukawaEmpirical) return yukawa_energy_empirical(g, q);
  double N = 0.0;
  try {
    N = nmodel(g, q);
  } catch (const DomainError&) {
    return std::nullopt;  // pole of a g-dependent coefficient
  }
  if (!(N > 0.0) || !std::isfinite(N)) return std::nullopt;
  switch (formula) {
    case Formula::Exponential:
      return exp_energy(g, N);
    case Formula::Yukawa:
      return yukawa_energy(g, N, yukawa_x0);
    case Formula::General:
      return general_energy(g, lambda, N, general_x0);
    case Formula::YukawaEmpirical:
      break;
  }
  return std::nullopt;
}

std::optional<double> Approximant::bound_energy(double g, QuantumNumbers q) const {
  const auto e = energy(g, q);
  if (e && *e < 0.0 && std::isfinite(*e)) return e;
  return std::nullopt;
}

Approximant Approximant::with_nmodel(NModel m) const {
  Approximant a = *this;
  a.nmodel = std::move(m);
  return a;
}

Approximant afm_approximant(const DimensionlessProblem& shape, NModel m, std::string label) {
  shape.validate();
  Approximant a;
  a.lambda = shape.lambda;
  if (shape.lambda == 0.0)
    a.formula = Formula::Exponential;
  else if (shape.lambda == -1.0)
    a.formula = Formula::Yukawa;
  else if (shape.lambda < -1.0)
    a.formula = Formula::General;
  else
    throw UnsupportedLambda("no AFM energy formula for lambda in (-1, 0) or lambda > 0");
  a.label = label.empty() ? m.name() : std::move(label);
  a.nmodel = std::move(m);
  return a;
}

Approximant named_approximant(const DimensionlessProblem& shape, const std::string& name) {
  if (name == "empirical") {
    if (shape.lambda != -1.0) throw DomainError("the empirical energy formula exists for the Yukawa potential only");
    Approximant a;
    a.label = "empirical";
    a.formula = Formula::YukawaEmpirical;
    a.lambda = -1.0;
    return a;
  }
  return afm_approximant(shape, parse_nmodel(name), name);
}

double chi_measure(const Approximant& approx, const Spectrum& oracle) {
  const auto t = chi_terms(approx, oracle);
  if (t.used == 0) throw EmptySum("chi_measure: no level has a real negative approximation");
  return t.sum;
}

std::vector<double> default_bc_start(const DimensionlessProblem& shape, bool sqrt_nl) {
  const bool exp = shape.lambda == 0.0;
  const double b = exp ? 1.5 : 1.0, c = exp ? 1.3 : 1.0;
  if (sqrt_nl) return {b, 1.0, c, 0.0};
  return {b, c};
}

CoefficientFit optimize_bc(const Spectrum& oracle, const Approximant& base, std::vector<double> start, bool sqrt_nl) {
  const std::size_t dim = sqrt_nl ? 4 : 2;
  if (start.size() != dim) throw DomainError("optimize_bc: start has the wrong number of coefficients");

  const auto objective = [&](const std::vector<double>& p) {
    const auto t = chi_terms(base.with_nmodel(coefficient_model(p)), oracle);
    return t.used == 0 ? kEmptyPenalty : t.sum;
  };

  // Three perturbed restarts around the start, then a polish from the best.
  static const double kShifts[3][4] = {{0.0, 0.0, 0.0, 0.0}, {0.15, -0.1, 0.1, 0.02}, {-0.1, 0.15, -0.1, -0.02}};
  detail::SimplexResult best;
  best.f = std::numeric_limits<double>::infinity();
  for (const auto& shift : kShifts) {
    std::vector<double> x0 = start;
    for (std::size_t i = 0; i < dim; ++i) x0[i] += shift[i];
    auto r = detail::nelder_mead(objective, x0, std::vector<double>(dim, 0.1), 1e-10);
    if (r.f < best.f) best = std::move(r);
  }
  auto polish = detail::nelder_mead(objective, best.x, std::vector<double>(dim, 0.01), 1e-12);
  if (polish.f <= best.f) best = std::move(polish);

  if (best.f >= kEmptyPenalty) throw EmptySum("optimize_bc: no level has a real negative approximation");

  const auto t = chi_terms(base.with_nmodel(coefficient_model(best.x)), oracle);
  CoefficientFit out;
  out.coefficients = best.x;
  out.chi = t.sum;
  out.levels_used = t.used;
  out.underdetermined = t.used < static_cast<int>(dim) || !t.has_excited;
  return out;
}

HyperbolaFit fit_hyperbola(const std::vector<double>& g_values, const std::vector<double>& d_values) {
  check_samples(g_values, d_values, 4, "fit_hyperbola");
  const std::size_t m = g_values.size();

  const auto [lo, hi] = std::minmax_element(d_values.begin(), d_values.end());
  const double scale = std::max(1.0, std::abs(*hi));
  if (*hi - *lo <= 1e-12 * scale) {
    HyperbolaFit out;
    out.curve = {d_values.front(), 0.0, 0.0};
    out.residual = hyperbola_residual(out.curve, g_values, d_values);
    out.degenerate = true;
    return out;
  }

  // d g = p g + q - r d, linear in (p, q, r).
  Eigen::MatrixXd A(m, 3);
  Eigen::VectorXd rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    A(i, 0) = g_values[i];
    A(i, 1) = 1.0;
    A(i, 2) = -d_values[i];
    rhs(i) = d_values[i] * g_values[i];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
  qr.setThreshold(1e-12);
  if (qr.rank() < 3) throw SingularFit("fit_hyperbola: samples are collinear in the linearised problem");
  const Eigen::Vector3d sol = qr.solve(rhs);

  HyperbolaFit out;
  out.curve = {sol(0), sol(1), sol(2)};
  out.residual = hyperbola_residual(out.curve, g_values, d_values);

  // The linearisation weights residuals by (g + r); refine on the true measure.
  const auto objective = [&](const std::vector<double>& p) {
    return hyperbola_residual({p[0], p[1], p[2]}, g_values, d_values);
  };
  std::vector<double> x0{sol(0), sol(1), sol(2)}, step(3);
  for (int i = 0; i < 3; ++i) step[i] = 1e-3 * std::max(1.0, std::abs(x0[i]));
  const auto refined = detail::nelder_mead(objective, x0, step, 1e-12);
  if (refined.f < out.residual) {
    out.curve = {refined.x[0], refined.x[1], refined.x[2]};
    out.residual = refined.f;
  }
  const double pole = out.curve.pole();
  out.pole_in_range = pole >= g_values.front() && pole <= g_values.back();
  return out;
}

Quadratic fit_quadratic(const std::vector<double>& g_values, const std::vector<double>& d_values) {
  check_samples(g_values, d_values, 3, "fit_quadratic");
  const std::size_t m = g_values.size();
  Eigen::MatrixXd A(m, 3);
  Eigen::VectorXd rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    A(i, 0) = g_values[i] * g_values[i];
    A(i, 1) = g_values[i];
    A(i, 2) = 1.0;
    rhs(i) = d_values[i];
  }
  const Eigen::Vector3d sol = A.colPivHouseholderQr().solve(rhs);
  return {sol(0), sol(1), sol(2)};
}

FitDataset fit_dataset(const DimensionlessProblem& shape, const std::vector<double>& g_values, bool sqrt_nl,
                       const SolverConfig& cfg) {
  check_samples(g_values, g_values, 4, "fit_dataset");
  FitDataset out;
  out.shape = shape;
  out.sqrt_nl = sqrt_nl;
  out.g_values = g_values;
  out.names = sqrt_nl ? std::vector<std::string>{"b", "d", "c", "s"} : std::vector<std::string>{"b", "c"};

  const auto spectra = bound_spectra(shape, g_values, cfg);
  const Approximant base = afm_approximant(shape, NModel::coulomb());
  auto start = default_bc_start(shape, sqrt_nl);
  for (const auto& s : spectra) {
    out.per_g.push_back(optimize_bc(s, base, start, sqrt_nl));
    if (!out.per_g.back().underdetermined) start = out.per_g.back().coefficients;
  }

  // Underdetermined optima carry no information on the coefficients; drop
  // them unless that would leave too few samples.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < out.per_g.size(); ++i)
    if (!out.per_g[i].underdetermined) keep.push_back(i);
  if (keep.size() < 4) {
    keep.resize(out.per_g.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  }
  std::vector<double> g;
  for (auto i : keep) g.push_back(g_values[i]);
  out.fitted_g = g;

  const std::size_t dim = out.names.size();
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<double> d;
    for (auto i : keep) d.push_back(out.per_g[i].coefficients[k]);
    if (sqrt_nl && k == 3) {
      out.sqrt_nl_curve = fit_quadratic(g, d);
      double res = 0.0;
      for (std::size_t i = 0; i < d.size(); ++i) {
        const double r = d[i] - (*out.sqrt_nl_curve)(g[i]);
        res += r * r;
      }
      out.sqrt_nl_residual = res;
    } else {
      out.curves.push_back(fit_hyperbola(g, d));
    }
  }
  return out;
}

ErrorStats critical_height_stats(const std::vector<std::vector<double>>& exact,
                                 const std::function<double(QuantumNumbers)>& model) {
  ErrorStats s;
  s.min_pct = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (std::size_t n = 0; n < exact.size(); ++n) {
    for (std::size_t l = 0; l < exact[n].size(); ++l) {
      const double ex = exact[n][l];
      const double rel = 100.0 * std::abs(model({static_cast<int>(n), static_cast<int>(l)}) - ex) / std::abs(ex);
      s.min_pct = std::min(s.min_pct, rel);
      s.max_pct = std::max(s.max_pct, rel);
      sum += rel;
      ++s.count;
    }
  }
  if (s.count == 0) throw EmptySum("critical_height_stats: empty table");
  s.mean_pct = sum / s.count;
  return s;
}

std::vector<double> default_g_grid(const DimensionlessProblem& shape) {
  if (shape.lambda == 0.0) return {5, 8, 10, 15, 20, 30, 40, 60, 80, 100};
  return {3, 5, 8, 10, 15, 20, 30, 40, 50};
}

}  // namespace afm
