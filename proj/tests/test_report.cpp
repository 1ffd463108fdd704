#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <random>
#include <sstream>
#include <string>

#include "afm/report.hpp"

using namespace afm;

namespace {

std::vector<Approximant> exp_set() {
  return {afm_approximant({1.0, 0.0}, preset(NPreset::BcExp), "BcExp"),
          afm_approximant({1.0, 0.0}, preset(NPreset::AbcdExp), "AbcdExp")};
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("relative error") {
    CHECK(relative_error_pct(-1.1, -1.0) == doctest::Approx(10.0));
    CHECK(relative_error_pct(-0.9, -1.0) == doctest::Approx(10.0));
  }

  TEST_CASE("statistics ignore absent and non-negative values") {
    std::vector<ReportRow> rows{
        {{0, 0}, -10.0, {-11.0}, false},
        {{1, 0}, -2.0, {std::nullopt}, false},
        {{0, 1}, -1.0, {0.2}, false},
        {{0, 2}, -0.5, {-0.49}, false},
    };
    const auto s = summarize(rows, 0, "m");
    CHECK(s.found == 2);
    CHECK(s.total == 4);
    CHECK(*s.delta_min == doctest::Approx(2.0));
    CHECK(*s.delta_max == doctest::Approx(10.0));
    CHECK(*s.delta_mean == doctest::Approx(6.0));
    const auto none = summarize({{{0, 0}, -1.0, {std::nullopt}, false}}, 0, "m");
    CHECK(none.found == 0);
    CHECK_FALSE(none.delta_mean.has_value());
  }

  TEST_CASE("statistics are permutation invariant") {
    const auto rep = build_report(DimensionlessProblem{40.0, 0.0}, exp_set());
    auto rows = rep.rows;
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(rows.begin(), rows.end(), rng);
      for (std::size_t k = 0; k < rep.labels.size(); ++k) {
        const auto s = summarize(rows, k, rep.labels[k]);
        CHECK(s.found == rep.stats[k].found);
        CHECK(*s.delta_max == *rep.stats[k].delta_max);
        CHECK(*s.delta_mean == doctest::Approx(*rep.stats[k].delta_mean).epsilon(1e-14));
      }
    }
  }

  TEST_CASE("weak coupling quality line") {
    const auto rep = build_report(DimensionlessProblem{5.0, 0.0}, exp_set());
    REQUIRE(rep.stats.size() == 2);
    CHECK(rep.stats[0].found == 1);
    CHECK(rep.stats[0].total == 1);
    CHECK(*rep.stats[0].delta_mean == doctest::Approx(0.8).epsilon(0.5 / 0.8));
  }

  TEST_CASE("csv uses * for absent cells") {
    const auto rep = build_report(DimensionlessProblem{40.0, 0.0}, exp_set());
    std::ostringstream os;
    write_csv(os, rep);
    std::istringstream is(os.str());
    std::string header;
    std::getline(is, header);
    CHECK(header == "n,l,eps_exact,eps_BcExp,eps_AbcdExp,rel_err_pct_BcExp,rel_err_pct_AbcdExp");
    std::size_t lines = 0;
    bool star = false;
    for (std::string line; std::getline(is, line);) {
      ++lines;
      CHECK(std::count(line.begin(), line.end(), ',') == 6);
      star = star || line.find('*') != std::string::npos;
    }
    CHECK(lines == rep.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i)
      for (std::size_t k = 0; k < 2; ++k)
        if (!rep.retained(i, k)) CHECK(star);

    std::ostringstream st;
    write_stats_csv(st, rep);
    CHECK(st.str().rfind("model,found,total,delta_min,delta_max,delta_mean\n", 0) == 0);
  }

  TEST_CASE("json schema") {
    const auto rep = build_report(DimensionlessProblem{30.0, -1.0},
                                  {afm_approximant({1.0, -1.0}, preset(NPreset::BcYuk), "BcYuk"),
                                   named_approximant({1.0, -1.0}, "empirical")});
    const auto j = nlohmann::json::parse(to_json(rep));
    CHECK(j.at("g") == 30.0);
    CHECK(j.at("lambda") == -1.0);
    CHECK(j.at("approximants").size() == 2);
    CHECK(j.at("rows").size() == rep.rows.size());
    for (const auto& row : j.at("rows")) {
      CHECK(row.contains("n"));
      CHECK(row.contains("l"));
      CHECK(row.contains("eps_exact"));
      CHECK(row.contains("near_zero"));
      CHECK(row.at("eps").size() == 2);
    }
    CHECK(j.at("stats").size() == 2);
  }

  TEST_CASE("cell formatting") {
    CHECK(format_cell(std::nullopt) == "*");
    CHECK(format_cell(-17.534) == "-17.53");
    CHECK(format_cell(-0.029) != "-0.00");
  }
}
