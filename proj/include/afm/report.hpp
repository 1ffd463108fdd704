#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "afm/calibration.hpp"

namespace afm {

struct ReportRow {
  QuantumNumbers q;
  double exact = 0.0;
  std::vector<std::optional<double>> approx;  // raw formula values, one per approximant
  bool near_zero = false;                     // |exact| < kNearZero
};

struct ApproximantStats {
  std::string label;
  int found = 0;
  int total = 0;
  // Percent; nullopt when no row qualifies.
  std::optional<double> delta_min, delta_max, delta_mean;
};

/// Exact versus approximate levels at one coupling. Statistics use only rows
/// whose approximation is real and strictly negative.
struct ComparisonReport {
  static constexpr double kNearZero = 1e-3;

  double g = 0.0;
  DimensionlessProblem potential;
  std::vector<std::string> labels;
  std::vector<ReportRow> rows;
  std::vector<ApproximantStats> stats;

  /// Present only when the approximation counts as a bound level.
  std::optional<double> retained(std::size_t row, std::size_t k) const;
};

/// |approx - exact| / |exact| in percent.
double relative_error_pct(double approx, double exact);

ApproximantStats summarize(const std::vector<ReportRow>& rows, std::size_t k, std::string label);

ComparisonReport build_report(const Spectrum& oracle, const std::vector<Approximant>& approximants);
ComparisonReport build_report(const DimensionlessProblem& potential, const std::vector<Approximant>& approximants,
                              const SolverConfig& cfg = {});

/// Header n,l,eps_exact,eps_<label>...,rel_err_pct_<label>...; "*" marks absent values.
void write_csv(std::ostream& os, const ComparisonReport& r);
/// Quality statistics as CSV: model,found,total,delta_min,delta_max,delta_mean.
void write_stats_csv(std::ostream& os, const ComparisonReport& r);
std::string to_json(const ComparisonReport& r, int indent = 2);

/// Printed-table style formatting: two decimals, but enough to show a nonzero value.
std::string format_cell(std::optional<double> v);

}  // namespace afm
