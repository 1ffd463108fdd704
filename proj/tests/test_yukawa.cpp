#include <doctest.h>

#include <boost/math/special_functions/lambert_w.hpp>
#include <boost/math/tools/minima.hpp>

#include <cmath>
#include <numbers>

#include "afm/errors.hpp"
#include "afm/nmodel.hpp"
#include "afm/special_functions.hpp"
#include "afm/oracle.hpp"
#include "afm/yukawa.hpp"

using namespace afm;
using std::numbers::e;

namespace {

double F(double x) { return -x * (1.0 + boost::math::lambert_wm1(-x)); }

// Minimum of N^2/x^2 - g e^{-x}/x left of the golden ratio.
double brute_min(double g, double N) {
  auto f = [&](double x) { return N * N / (x * x) - g * std::exp(-x) / x; };
  return boost::math::tools::brent_find_minima(f, 1e-9, std::numbers::phi, 60).second;
}

}  // namespace

TEST_SUITE("yukawa") {
  TEST_CASE("geometry") {
    const auto geo = YukawaGeometry::get();
    CHECK(geo.fbar / geo.xbar == doctest::Approx(std::numbers::phi).epsilon(1e-14));
    CHECK(geo.xbar == doctest::Approx(0.19096).epsilon(1e-4));
    CHECK(geo.fbar == doctest::Approx(0.30898).epsilon(1e-4));
    CHECK(F(geo.xbar) == doctest::Approx(geo.fbar).epsilon(1e-13));
    // Maximum of F: F' vanishes at xbar.
    const double h = 1e-6;
    CHECK(std::abs(F(geo.xbar + h) - F(geo.xbar - h)) < 1e-10);
  }

  TEST_CASE("x0 fit endpoints and A_c") {
    const auto geo = YukawaGeometry::get();
    for (double A : {0.0, 2.0, 2.87}) {
      CHECK(yukawa_x0_fit(0.0, A) == doctest::Approx(1.0 / e));
      CHECK(yukawa_x0_fit(geo.fbar, A) == doctest::Approx(geo.xbar));
    }
    const double Ac = yukawa_critical_fit_parameter();
    CHECK(Ac == doctest::Approx(2.87).epsilon(0.005 / 2.87));
    CHECK(yukawa_x0_fit(2.0 / (e * e), Ac) == doctest::Approx(2.0 / (e * e)).epsilon(1e-13));
    CHECK_THROWS_AS(yukawa_x0_fit(-0.01, 2.0), DomainError);
    CHECK_THROWS_AS(yukawa_x0_fit(0.31, 2.0), DomainError);
    CHECK_THROWS_AS(yukawa_x0_fit(0.1, 100.0), DomainError);
  }

  TEST_CASE("x0 exact by residual") {
    const auto geo = YukawaGeometry::get();
    CHECK(yukawa_x0_exact(0.0) == doctest::Approx(1.0 / e));
    CHECK(yukawa_x0_exact(geo.fbar) == doctest::Approx(geo.xbar));
    for (int i = 1; i < 200; ++i) {
      const double y = geo.fbar * i / 200.0;
      const double x = yukawa_x0_exact(y);
      CHECK(x >= geo.xbar);
      CHECK(x <= 1.0 / e);
      CHECK(std::abs(F(x) - y) < 1e-12);
    }
    CHECK(std::abs(F(yukawa_x0_exact(0.2)) - 0.2) < 1e-12);
    CHECK_THROWS_AS(yukawa_x0_exact(0.4), DomainError);
  }

  TEST_CASE("fit tracks the exact root") {
    const auto geo = YukawaGeometry::get();
    double worst = 0.0;
    for (int i = 0; i <= 500; ++i) {
      const double y = geo.fbar * i / 500.0;
      worst = std::max(worst, std::abs(yukawa_x0_fit(y, 2.0) - yukawa_x0_exact(y)));
    }
    CHECK(worst <= 0.01);
  }

  TEST_CASE("envelope equivalence on a 20x20 grid") {
    for (int i = 0; i < 20; ++i)
      for (int j = 0; j < 20; ++j) {
        const double g = 2.0 + 4.0 * i;
        const double N = 0.5 + 0.25 * j;
        const auto afm = yukawa_energy(g, N, x0_source::Exact{});
        const auto env = envelope_upper_bound(g, N);
        if (!env) {
          CHECK((!afm || *afm >= -1e-10));
          continue;
        }
        REQUIRE(afm.has_value());
        CHECK(std::abs(*afm - *env) <= 1e-10 * std::max(1.0, std::abs(*env)));
        CHECK(*env == doctest::Approx(brute_min(g, N)).epsilon(1e-8));
      }
  }

  TEST_CASE("printed g = 30 entries") {
    CHECK(*yukawa_energy(30.0, 1.0, x0_source::Fit{2.0}) == doctest::Approx(-194.82).epsilon(0.01 / 194.82));
    CHECK(*envelope_upper_bound(30.0, 1.0) == doctest::Approx(*yukawa_energy(30.0, 1.0, x0_source::Exact{})));
    const auto bc = preset(NPreset::BcYuk);
    CHECK(*yukawa_energy(30.0, bc(30.0, {0, 0})) == doctest::Approx(-196.41).epsilon(0.01 / 196.41));
    CHECK(*yukawa_energy_empirical(30.0, {0, 0}) == doctest::Approx(-196.36).epsilon(0.01 / 196.36));
    CHECK(*yukawa_energy_empirical(30.0, {2, 0}) == doctest::Approx(-5.67).epsilon(0.01 / 5.67));
    CHECK(*yukawa_energy_empirical(30.0, {2, 1}) == doctest::Approx(-0.019).epsilon(0.001 / 0.019));
  }

  TEST_CASE("Coulomb limit") {
    for (double N : {1.0, 2.0, 3.5}) {
      const double g = 1e7;
      CHECK(*yukawa_energy(g, N, x0_source::Exact{}) == doctest::Approx(-g * g / (4.0 * N * N)).epsilon(1e-5));
      CHECK(*envelope_upper_bound(g, N) == doctest::Approx(-g * g / (4.0 * N * N)).epsilon(1e-5));
    }
    // E -> -alpha^2 m / (2 N^2) as beta -> 0.
    const auto E = yukawa_energy_physical({1.0, 1.0, 1e-6, -1.0}, 2.0, x0_source::Exact{});
    CHECK(*E == doctest::Approx(-1.0 / 8.0).epsilon(1e-5));
    CHECK_THROWS_AS(yukawa_energy_physical({1.0, 1.0, 1.0, 0.0}, 1.0), DomainError);
  }

  TEST_CASE("critical heights") {
    for (double N : {1.0, 1.5, 2.2, 4.0}) {
      const double gc = e * N * N;
      CHECK(yukawa_critical_height({0, 0}, yukawa_critical::AfmN{N}) == doctest::Approx(gc));
      CHECK(std::abs(*yukawa_energy(gc, N, x0_source::Fit{yukawa_critical_fit_parameter()})) < 1e-8);
      CHECK(std::abs(*yukawa_energy(gc, N, x0_source::Exact{})) < 1e-8 * gc);
      for (double g : {3.0, 10.0, 50.0})
        CHECK(yukawa_ybar(g, N) == doctest::Approx(2.0 / (e * e) * gc / g));
    }
    CHECK(yukawa_critical_height({0, 0}, yukawa_critical::EmpiricalG{}) == doctest::Approx(2.0 * 0.839908));
    CHECK(yukawa_critical_height({0, 0}, yukawa_critical::FittedSqrtNL{}) == doctest::Approx(1.296 * 1.296));
    CHECK(yukawa_critical_height({0, 0}, yukawa_critical::AfmN{1.0}) == doctest::Approx(e));
    CHECK(yukawa_critical_height({2, 1}, yukawa_critical::CalibratedExact{}) ==
          doctest::Approx(std::pow(1.243 * 2 + 1.649 + 1.296, 2)));
    CHECK(yukawa_critical_height({2, 1}, yukawa_critical::CalibratedVariational{}) ==
          doctest::Approx(std::pow(1.291 * 2 + 1.649 + 1.296, 2)));
    CHECK(yukawa_critical_height({2, 1}, yukawa_critical::EmpiricalGAsymptotic{}) ==
          doctest::Approx(std::pow(1.248 * 2 + 1.652 + 1.296, 2)));
    // S_l versus S_0 only matters for n > 0 and l > 0.
    CHECK(yukawa_critical_height({0, 3}, yukawa_critical::EmpiricalG{true}) ==
          yukawa_critical_height({0, 3}, yukawa_critical::EmpiricalG{false}));
    CHECK(yukawa_critical_height({2, 1}, yukawa_critical::EmpiricalG{true}) <
          yukawa_critical_height({2, 1}, yukawa_critical::EmpiricalG{false}));
    CHECK_THROWS_AS(yukawa_critical_height({0, 0}, yukawa_critical::AfmN{-1.0}), DomainError);
  }

  TEST_CASE("empirical energy vanishes at its critical height") {
    for (QuantumNumbers q : {QuantumNumbers{0, 0}, QuantumNumbers{1, 2}, QuantumNumbers{3, 1}}) {
      const double gG = yukawa_critical_height(q, yukawa_critical::EmpiricalG{true});
      CHECK_FALSE(yukawa_energy_empirical(gG, q).has_value());
      const auto just_above = yukawa_energy_empirical(gG * (1.0 + 1e-9), q);
      REQUIRE(just_above.has_value());
      CHECK(std::abs(*just_above) < 1e-6);
    }
  }

  TEST_CASE("Hulthen constants") {
    CHECK(hulthen_critical_estimate(0) == doctest::Approx(1.6801).epsilon(1e-4));
    CHECK(hulthen_critical_estimate(1) == doctest::Approx(6.6926).epsilon(1e-4));
    CHECK(hulthen_one_parameter_estimate() == doctest::Approx(1.73803).epsilon(1e-5));
    CHECK_THROWS_AS(hulthen_critical_estimate(2), DomainError);
  }

  TEST_CASE("upper bounds on the exact spectrum") {
    for (double g : {10.0, 20.0, 30.0, 50.0}) {
      const auto spec = bound_spectrum({g, -1.0});
      for (const auto& lv : spec.levels) {
        const auto afm = yukawa_energy(g, lv.q.n + lv.q.l + 1.0, x0_source::Exact{});
        if (afm) CHECK(*afm >= lv.epsilon - 1e-6);
      }
    }
  }

  TEST_CASE("no bound state beyond Fbar") {
    const double g = 10.0;
    const double N = std::sqrt(0.31 * e * g / 2.0);
    CHECK_FALSE(yukawa_energy(g, N).has_value());
    CHECK_FALSE(envelope_upper_bound(g, N).has_value());
  }
}
