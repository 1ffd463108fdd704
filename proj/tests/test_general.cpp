#include <doctest.h>

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "afm/errors.hpp"
#include "afm/exponential.hpp"
#include "afm/general.hpp"
#include "afm/oracle.hpp"
#include "afm/power_law.hpp"
#include "afm/yukawa.hpp"

using namespace afm;

namespace {

// Stationary minimum of N^2/x^2 - g x^lambda e^{-x} left of a + lambda.
double brute_min(double g, double lambda, double N) {
  const double hi = GeneralGeometry::of(lambda).a + lambda;
  // Searched in log x: deep levels sit at very small x.
  auto f = [&](double t) {
    const double x = std::exp(t);
    return N * N / (x * x) - g * std::pow(x, lambda) * std::exp(-x);
  };
  return boost::math::tools::brent_find_minima(f, -60.0, std::log(hi), 60).second;
}

double F(double x, double lambda) {
  return x * std::pow(std::max(0.0, lambda - lambert_w(Branch::Lower, -x)), lambda + 2.0);
}

}  // namespace

TEST_SUITE("general") {
  TEST_CASE("geometry reduces to the Yukawa one") {
    const auto g1 = GeneralGeometry::of(-1.0);
    const auto y = YukawaGeometry::get();
    CHECK(g1.xbar == doctest::Approx(y.xbar).epsilon(1e-14));
    CHECK(g1.fbar == doctest::Approx(y.fbar).epsilon(1e-14));
    CHECK(g1.x_start == doctest::Approx(1.0 / std::numbers::e).epsilon(1e-15));
    for (double lambda : {-1.0, -1.3, -1.6, -1.9}) {
      const auto geo = GeneralGeometry::of(lambda);
      CHECK(F(geo.xbar, lambda) == doctest::Approx(geo.fbar).epsilon(1e-12));
      CHECK(F(geo.x_start, lambda) == doctest::Approx(0.0));
      const double h = 1e-6;
      CHECK(std::abs(F(geo.xbar + h, lambda) - F(geo.xbar - h, lambda)) < 1e-9);
    }
    CHECK_THROWS_AS(GeneralGeometry::of(-2.0), DomainError);
  }

  TEST_CASE("i_lambda inverts k_lambda") {
    for (double lambda : {-1.0, -1.5, -1.9})
      for (double x : {0.01, 0.3, 1.0, 4.0, 20.0})
        CHECK(i_lambda(k_lambda(x, 7.0, lambda), 7.0, lambda, Branch::Lower) == doctest::Approx(x).epsilon(1e-12));
    // For lambda > -1 the two branches split at x = lambda + 1.
    const double lambda = -0.5;
    for (double x : {0.05, 0.3})
      CHECK(i_lambda(k_lambda(x, 3.0, lambda), 3.0, lambda, Branch::Principal) == doctest::Approx(x).epsilon(1e-12));
    for (double x : {0.8, 3.0})
      CHECK(i_lambda(k_lambda(x, 3.0, lambda), 3.0, lambda, Branch::Lower) == doctest::Approx(x).epsilon(1e-12));
    CHECK_THROWS_AS(i_lambda(1.0, 3.0, -1.5, Branch::Principal), DomainError);
    CHECK_THROWS_AS(i_lambda(1.0, 3.0, 0.0, Branch::Lower), DomainError);
    CHECK_THROWS_AS(k_lambda(1.0, 3.0, 0.0), DomainError);
  }

  TEST_CASE("x0 root is continuous and decreasing") {
    for (double lambda : {-1.0, -1.25, -1.5, -1.75, -1.95}) {
      const auto geo = GeneralGeometry::of(lambda);
      CHECK(solve_x0_general(0.0, lambda) == geo.x_start);
      CHECK(solve_x0_general(1e-12 * geo.fbar, lambda) == doctest::Approx(geo.x_start).epsilon(1e-4));
      double prev = geo.x_start;
      for (int i = 1; i < 100; ++i) {
        const double y = geo.fbar * i / 100.0;
        const double x = solve_x0_general(y, lambda);
        CHECK(x <= prev + 1e-15);
        // F is steep near x_start when lambda + 2 is small; check the sign change instead.
        const double dx = 1e-12;
        CHECK(F(x - dx, lambda) >= y - 1e-13);
        CHECK(F(std::min(x + dx, geo.x_start), lambda) <= y + 1e-13);
        prev = x;
      }
      CHECK(solve_x0_general(geo.fbar, lambda) == geo.xbar);
    }
  }

  TEST_CASE("A_lambda fit") {
    CHECK(a_lambda_fit(-1.0) == 2.0);
    for (double lambda : {-1.0, -1.2, -1.4, -1.6, -1.8}) {
      const auto geo = GeneralGeometry::of(lambda);
      double worst = 0.0;
      for (int i = 0; i <= 400; ++i) {
        const double y = geo.fbar * i / 400.0;
        worst = std::max(worst, std::abs(x0_fit_general(y, lambda) - solve_x0_general(y, lambda)));
      }
      CHECK(worst <= 0.03);
    }
  }

  TEST_CASE("lambda = -1 equals the Yukawa formula") {
    for (double g : {3.0, 10.0, 30.0, 200.0})
      for (double N : {1.0, 2.0, 3.0}) {
        const auto ye = yukawa_energy(g, N, x0_source::Exact{});
        const auto ge = general_energy(g, -1.0, N, GeneralX0::Exact);
        REQUIRE(ye.has_value() == ge.has_value());
        if (!ye) continue;
        CHECK(*ge == doctest::Approx(*ye).epsilon(1e-11));
        CHECK(*general_energy(g, -1.0, N, GeneralX0::Fit) ==
              doctest::Approx(*yukawa_energy(g, N, x0_source::Fit{2.0})).epsilon(1e-11));
      }
  }

  TEST_CASE("energy equals the envelope minimum") {
    for (double lambda : {-1.0, -1.3, -1.5, -1.8})
      for (double g : {5.0, 20.0, 100.0})
        for (double N : {1.0, 1.7, 3.0}) {
          const auto eps = general_energy(g, lambda, N);
          if (!eps || *eps >= 0.0) continue;
          CHECK(*eps == doctest::Approx(brute_min(g, lambda, N)).epsilon(1e-8));
        }
  }

  TEST_CASE("critical height") {
    for (double lambda : {-1.0, -1.4, -1.8})
      for (double N : {1.0, 2.5}) {
        const double gc = general_critical_height(lambda, N);
        CHECK(std::abs(*general_energy(gc, lambda, N)) < 1e-8 * gc);
        CHECK(*general_energy(gc * 1.01, lambda, N) < 0.0);
      }
    CHECK(general_critical_height(-1.0, 1.0) == doctest::Approx(std::numbers::e));
    CHECK(general_critical_height(0.0, 1.0) == doctest::Approx(std::pow(std::numbers::e / 2.0, 2.0)));
  }

  TEST_CASE("lambda -> 0 form matches the exponential") {
    for (double g : {4.0, 10.0, 40.0, 300.0})
      for (double N : {1.0, 1.5, 2.5}) {
        const auto a = lambda_zero_limit_check(g, N);
        const auto b = exp_energy(g, N);
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(*a == doctest::Approx(*b).epsilon(1e-12));
      }
  }

  TEST_CASE("small beta approaches the power law") {
    const double lambda = -1.5, N = 1.3;
    auto gap = [&](double beta) {
      const PhysicalPotential p{1.0, 2.0, beta, lambda};
      return *general_energy_physical(p, N) - power_law_energy(1.0, 2.0, lambda, N);
    };
    const double r = gap(1e-3) / gap(5e-4);
    CHECK(r == doctest::Approx(2.0).epsilon(0.05));
    CHECK(std::abs(gap(1e-4)) < 1e-3);
  }

  TEST_CASE("upper bound on the exact spectrum") {
    const auto spec = bound_spectrum({10.0, -1.5});
    REQUIRE(spec.size() > 0);
    for (const auto& lv : spec.levels) {
      const auto afm = general_energy(10.0, -1.5, n_eta(-1.0, lv.q));
      if (afm) CHECK(*afm >= lv.epsilon - 1e-6);
    }
  }

  TEST_CASE("unsupported powers") {
    CHECK_THROWS_AS(general_energy(10.0, -0.5, 1.0), UnsupportedLambda);
    CHECK_THROWS_AS(general_energy(10.0, 0.0, 1.0), UnsupportedLambda);
    CHECK_THROWS_AS(general_energy(10.0, -2.0, 1.0), DomainError);
    CHECK_THROWS_AS(solve_x0_general(1.0, -1.5), DomainError);
    CHECK_FALSE(general_energy(1.0, -1.5, 3.0).has_value());
  }
}
