#include <doctest.h>

#include <cmath>

#include "afm/errors.hpp"
#include "afm/nmodel.hpp"

using namespace afm;

TEST_SUITE("nmodel") {
  TEST_CASE("hyperbola") {
    const Hyperbola h{1.42, -12.76, -8.62};
    CHECK(h.pole() == 8.62);
    CHECK(h(40.0) == doctest::Approx((1.42 * 40.0 - 12.76) / (40.0 - 8.62)));
    CHECK(h(1e9) == doctest::Approx(1.42).epsilon(1e-8));
    CHECK_THROWS_AS(h(8.62), DomainError);
    const Quadratic s{1.0, -2.0, 3.0};
    CHECK(s(2.0) == 3.0);
  }

  TEST_CASE("presets") {
    const QuantumNumbers q{2, 3};
    const double g = 40.0;
    const auto bc = preset(NPreset::BcExp);
    CHECK(bc(g, q) == doctest::Approx(2.0 * (1.42 * g - 12.76) / (g - 8.62) + 3.0 + (1.32 * g + 16.88) / (g + 14.95)));
    CHECK(bc.kind() == NModel::Kind::HyperbolaBC);
    CHECK(bc.name() == "bcexp");
    const auto by = preset(NPreset::BcYuk);
    CHECK(by(g, q) == doctest::Approx(2.0 * (0.99 * g - 5.92) / (g - 5.08) + 3.0 + (1.00 * g - 1.68) / (g - 1.58)));
    const auto ay = preset(NPreset::AbcdYuk);
    const double s = (-0.000233 * g + 0.0202) * g - 0.480;
    CHECK(ay(g, q) == doctest::Approx(2.0 * (0.99 * g - 7.16) / (g - 6.64) + 3.0 * (1.00 * g + 2.51) / (g + 3.16) +
                                      (1.00 * g - 1.89) / (g - 1.79) + s * std::sqrt(6.0)));
    // sqrt(n l) only acts when both are non-zero.
    const auto ae = preset(NPreset::AbcdExp);
    CHECK(ae(g, {0, 4}) == doctest::Approx((0.95 * g - 1.36) / (g - 0.33) * 4.0 + (1.43 * g + 23.09) / (g + 20.60)));
    CHECK(preset(NPreset::CoulombN)(g, q) == 6.0);
    CHECK(preset(NPreset::FixedEta, -1.0)(g, q) == doctest::Approx(6.0));
    CHECK(preset(NPreset::FixedEta, 2.0)(g, q) == doctest::Approx(2.0 * 2 + 3 + 1.5));
  }

  TEST_CASE("poles are rejected") {
    CHECK_THROWS_AS(preset(NPreset::BcExp)(8.62, {0, 0}), DomainError);
    CHECK_THROWS_AS(preset(NPreset::BcYuk)(5.08, {1, 0}), DomainError);
    CHECK_THROWS_AS(preset(NPreset::BcYuk)(1.58, {0, 0}), DomainError);
  }

  TEST_CASE("fixed coefficients") {
    const auto m = NModel::fixed(1.5, 1.3);
    CHECK(m(7.0, {2, 1}) == doctest::Approx(1.5 * 2 + 1 + 1.3));
    const auto m4 = NModel::fixed(1.5, 1.3, 0.9, 0.1);
    CHECK(m4(7.0, {2, 2}) == doctest::Approx(3.0 + 1.8 + 1.3 + 0.2));
    CHECK_THROWS_AS(m(7.0, {-1, 0}), DomainError);
  }

  TEST_CASE("parse") {
    for (const char* name : {"coulomb", "bcexp", "abcdexp", "bcyuk", "abcdyuk"}) CHECK(parse_nmodel(name).name() == name);
    CHECK(parse_nmodel("bcdef:-1")(1.0, {1, 1}) == doctest::Approx(3.0));
    CHECK(parse_nmodel("fixed:1.5,1.25")(1.0, {1, 1}) == doctest::Approx(3.75));
    CHECK_THROWS_AS(parse_nmodel("fixed:1.5"), DomainError);
    CHECK_THROWS_AS(parse_nmodel("fixed:1.5,x"), DomainError);
    CHECK_THROWS_AS(parse_nmodel("bcdef:"), DomainError);
    CHECK_THROWS_AS(parse_nmodel("bcdef:-3"), DomainError);
    CHECK_THROWS_AS(parse_nmodel("nope"), DomainError);
  }
}
