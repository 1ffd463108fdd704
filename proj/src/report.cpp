#include "afm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include <json.hpp>

namespace afm {
namespace {

bool retained_value(const std::optional<double>& v) { return v && std::isfinite(*v) && *v < 0.0; }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string num_or_star(std::optional<double> v) { return v ? num(*v) : "*"; }

// Labels such as fixed:B,C would split a CSV cell.
std::string csv_label(std::string s) {
  for (auto& ch : s)
    if (ch == ',') ch = ';';
  return s;
}

nlohmann::json opt_json(std::optional<double> v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); }

}  // namespace

std::optional<double> ComparisonReport::retained(std::size_t row, std::size_t k) const {
  const auto& v = rows.at(row).approx.at(k);
  return retained_value(v) ? v : std::nullopt;
}

double relative_error_pct(double approx, double exact) { return 100.0 * std::abs(approx - exact) / std::abs(exact); }

ApproximantStats summarize(const std::vector<ReportRow>& rows, std::size_t k, std::string label) {
  ApproximantStats s;
  s.label = std::move(label);
  s.total = static_cast<int>(rows.size());
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0, sum = 0.0;
  for (const auto& r : rows) {
    if (!retained_value(r.approx.at(k))) continue;
    const double e = relative_error_pct(*r.approx[k], r.exact);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
    sum += e;
    ++s.found;
  }
  if (s.found > 0) {
    s.delta_min = lo;
    s.delta_max = hi;
    s.delta_mean = sum / s.found;
  }
  return s;
}

ComparisonReport build_report(const Spectrum& oracle, const std::vector<Approximant>& approximants) {
  ComparisonReport r;
  r.g = oracle.problem.g;
  r.potential = oracle.problem;
  for (const auto& a : approximants) r.labels.push_back(a.label);

  auto levels = oracle.levels;
  std::sort(levels.begin(), levels.end(), [](const LevelResult& a, const LevelResult& b) { return a.q < b.q; });
  // Rows follow the printed tables: grouped by l, then n.
  std::stable_sort(levels.begin(), levels.end(),
                   [](const LevelResult& a, const LevelResult& b) { return a.q.l < b.q.l; });
  for (const auto& lv : levels) {
    ReportRow row;
    row.q = lv.q;
    row.exact = lv.epsilon;
    row.near_zero = std::abs(lv.epsilon) < ComparisonReport::kNearZero;
    for (const auto& a : approximants) row.approx.push_back(a.energy(r.g, lv.q));
    r.rows.push_back(std::move(row));
  }
  for (std::size_t k = 0; k < approximants.size(); ++k) r.stats.push_back(summarize(r.rows, k, r.labels[k]));
  return r;
}

ComparisonReport build_report(const DimensionlessProblem& potential, const std::vector<Approximant>& approximants,
                              const SolverConfig& cfg) {
  return build_report(bound_spectrum(potential, cfg), approximants);
}

void write_csv(std::ostream& os, const ComparisonReport& r) {
  os << "n,l,eps_exact";
  for (const auto& l : r.labels) os << ",eps_" << csv_label(l);
  for (const auto& l : r.labels) os << ",rel_err_pct_" << csv_label(l);
  os << '\n';
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    os << row.q.n << ',' << row.q.l << ',' << num(row.exact);
    for (std::size_t k = 0; k < r.labels.size(); ++k) os << ',' << num_or_star(r.retained(i, k));
    for (std::size_t k = 0; k < r.labels.size(); ++k) {
      const auto v = r.retained(i, k);
      os << ',' << (v ? num(relative_error_pct(*v, row.exact)) : "*");
    }
    os << '\n';
  }
}

void write_stats_csv(std::ostream& os, const ComparisonReport& r) {
  os << "model,found,total,delta_min,delta_max,delta_mean\n";
  for (const auto& s : r.stats)
    os << csv_label(s.label) << ',' << s.found << ',' << s.total << ',' << num_or_star(s.delta_min) << ','
       << num_or_star(s.delta_max) << ',' << num_or_star(s.delta_mean) << '\n';
}

std::string to_json(const ComparisonReport& r, int indent) {
  nlohmann::json j;
  j["g"] = r.g;
  j["lambda"] = r.potential.lambda;
  j["approximants"] = r.labels;
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const auto& row = r.rows[i];
    nlohmann::json jr{{"n", row.q.n}, {"l", row.q.l}, {"eps_exact", row.exact}, {"near_zero", row.near_zero}};
    for (std::size_t k = 0; k < r.labels.size(); ++k) jr["eps"][r.labels[k]] = opt_json(r.retained(i, k));
    rows.push_back(std::move(jr));
  }
  j["rows"] = std::move(rows);
  auto stats = nlohmann::json::array();
  for (const auto& s : r.stats)
    stats.push_back({{"model", s.label},
                     {"found", s.found},
                     {"total", s.total},
                     {"delta_min", opt_json(s.delta_min)},
                     {"delta_max", opt_json(s.delta_max)},
                     {"delta_mean", opt_json(s.delta_mean)}});
  j["stats"] = std::move(stats);
  return j.dump(indent);
}

std::string format_cell(std::optional<double> v) {
  if (!v) return "*";
  char buf[32];
  int digits = 2;
  while (digits < 6 && std::abs(*v) < 0.5 * std::pow(10.0, -digits + 1)) ++digits;
  std::snprintf(buf, sizeof buf, "%.*f", digits, *v);
  return buf;
}

}  // namespace afm
