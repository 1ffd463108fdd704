// Oracle sweeps over partial waves, table cells and couplings. Each task owns
// its workspace; the OpenMP kernels and the sequential reference versions
// share the per-task code and differ only in scheduling.
#include <exception>
#include <vector>

#include "afm/errors.hpp"
#include "afm/oracle.hpp"
#include "oracle_internal.hpp"

namespace afm {
namespace {

// Bound-state counts per l, stopping at the first empty partial wave.
std::vector<int> partial_wave_counts(const DimensionlessProblem& problem) {
  std::vector<int> counts;
  for (int l = 0;; ++l) {
    const int c = bound_state_count(problem, l);
    if (c == 0) break;
    counts.push_back(c);
  }
  return counts;
}

Spectrum assemble(const DimensionlessProblem& problem, std::vector<std::vector<LevelResult>>& waves) {
  Spectrum s{problem, {}};
  for (auto& w : waves) s.levels.insert(s.levels.end(), w.begin(), w.end());
  return s;
}

class FirstError {
 public:
  void capture() {
#pragma omp critical(afm_first_error)
    if (!error_) error_ = std::current_exception();
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

}  // namespace

Spectrum bound_spectrum(const DimensionlessProblem& problem, const SolverConfig& cfg) {
  problem.validate();
  cfg.validate();
  const auto counts = partial_wave_counts(problem);
  const int waves = static_cast<int>(counts.size());
  std::vector<std::vector<LevelResult>> out(counts.size());
  const auto v = RadialPotential::from(problem);
  FirstError err;
#pragma omp parallel for schedule(dynamic, 1)
  for (int l = 0; l < waves; ++l) {
    try {
      out[l] = detail::partial_wave(v, l, counts[l], cfg);
    } catch (...) {
      err.capture();
    }
  }
  err.rethrow();
  return assemble(problem, out);
}

std::vector<std::vector<double>> critical_height_table(double lambda, int nmax, int lmax, const SolverConfig& cfg) {
  cfg.validate();
  if (nmax < 0 || lmax < 0) throw DomainError("critical_height_table: negative range");
  std::vector<std::vector<double>> table(nmax + 1, std::vector<double>(lmax + 1));
  const int cells = (nmax + 1) * (lmax + 1);
  FirstError err;
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < cells; ++k) {
    const int n = k / (lmax + 1);
    const int l = k % (lmax + 1);
    try {
      table[n][l] = exact_critical_height(lambda, {n, l}, cfg);
    } catch (...) {
      err.capture();
    }
  }
  err.rethrow();
  return table;
}

std::vector<Spectrum> bound_spectra(const DimensionlessProblem& shape, const std::vector<double>& g_values,
                                    const SolverConfig& cfg) {
  const int count = static_cast<int>(g_values.size());
  std::vector<Spectrum> out(g_values.size());
  FirstError err;
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    try {
      out[i] = reference::bound_spectrum({g_values[i], shape.lambda}, cfg);
    } catch (...) {
      err.capture();
    }
  }
  err.rethrow();
  return out;
}

namespace reference {

Spectrum bound_spectrum(const DimensionlessProblem& problem, const SolverConfig& cfg) {
  problem.validate();
  cfg.validate();
  const auto counts = partial_wave_counts(problem);
  std::vector<std::vector<LevelResult>> out(counts.size());
  const auto v = RadialPotential::from(problem);
  for (std::size_t l = 0; l < counts.size(); ++l) out[l] = detail::partial_wave(v, static_cast<int>(l), counts[l], cfg);
  return assemble(problem, out);
}

std::vector<std::vector<double>> critical_height_table(double lambda, int nmax, int lmax, const SolverConfig& cfg) {
  cfg.validate();
  if (nmax < 0 || lmax < 0) throw DomainError("critical_height_table: negative range");
  std::vector<std::vector<double>> table(nmax + 1, std::vector<double>(lmax + 1));
  for (int n = 0; n <= nmax; ++n)
    for (int l = 0; l <= lmax; ++l) table[n][l] = exact_critical_height(lambda, {n, l}, cfg);
  return table;
}

std::vector<Spectrum> bound_spectra(const DimensionlessProblem& shape, const std::vector<double>& g_values,
                                    const SolverConfig& cfg) {
  std::vector<Spectrum> out;
  out.reserve(g_values.size());
  for (double g : g_values) out.push_back(reference::bound_spectrum(DimensionlessProblem{g, shape.lambda}, cfg));
  return out;
}

}  // namespace reference
}  // namespace afm
