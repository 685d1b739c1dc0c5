#include "doctest.h"
#include "raolab/constructors.hpp"
#include "raolab/lefschetz.hpp"
#include "raolab/reproduce.hpp"

using namespace raolab;

TEST_CASE("WLP is the m = 1 sweep") {
  const auto cfg = general_skew_lines(7, 3);
  const VerdictOptions opt{5, 11, false};
  CHECK(to_json(wlp_verdict(cfg, opt)) == to_json(slp_range_verdict(cfg, 1, opt)));
  CHECK(wlp_verdict(cfg, opt).verdict == Verdict::Holds);
  CHECK(wlp_verdict(quadric_ruling_lines(8, 3), opt).verdict == Verdict::Holds);
}

TEST_CASE("report rows") {
  const auto rep = slp_range_verdict(general_skew_lines(9, 2), 2);
  for (const auto& row : rep.rows) {
    CHECK(row.dim_src + row.dim_tgt > 0);
    CHECK(row.maximal == (row.rank == std::min(row.dim_src, row.dim_tgt)));
  }
  CHECK(rep.verdict == Verdict::Holds);
  CHECK_FALSE(rep.samples.empty());
  CHECK_FALSE(rep.probabilistic);
}

TEST_CASE("SLP for twelve general lines") {
  const RaoProfile p = rao_profile(general_skew_lines(12, 5));
  CHECK(slp_range_verdict(p, 2).verdict == Verdict::Holds);
  CHECK(slp_range_verdict(p, 3).verdict == Verdict::Holds);
  // powers past the support span have nothing to check
  const int span = p.support()->second - p.support()->first;
  CHECK(slp_range_verdict(p, span + 1).verdict == Verdict::Vacuous);
  CHECK(slp_range_verdict(general_skew_lines(1, 1), 1).verdict == Verdict::Vacuous);
}

TEST_CASE("all but two lines on a quadric fail WLP into degree 3") {
  const auto rep = wlp_verdict(quadric_plus_general(10, 2, 4));
  CHECK(rep.verdict == Verdict::Fails);
  CHECK(rep.failing_degrees == std::vector<int>{3});
  CHECK(rep.probabilistic);
  CHECK(rep.samples.size() == 5);
  CHECK(to_json(rep)["caveat"] == "probabilistic");
}

TEST_CASE("shortcut agrees with the full rank computation") {
  for (int r = 5; r <= 9; ++r) {
    const auto cfg = general_skew_lines(r, 40 + r);
    for (int m = 1; m <= 3; ++m) {
      const auto full = slp_range_verdict(cfg, m, {3, 1, false});
      const auto quick = slp_range_verdict(cfg, m, {3, 1, true});
      CHECK(full.verdict == quick.verdict);
      REQUIRE(full.rows.size() == quick.rows.size());
      for (std::size_t i = 0; i < full.rows.size(); ++i) CHECK(full.rows[i].rank == quick.rows[i].rank);
    }
  }
}

TEST_CASE("injectivity check for ruling lines agrees with the sweep") {
  for (int r = 4; r <= 9; ++r) {
    const RaoProfile p0 = rao_profile(quadric_ruling_lines(r, r, FieldSpec(), 0));
    const RaoProfile p1 = rao_profile(quadric_ruling_lines(r, r + 100, FieldSpec(), 1));
    const auto inj = ruling_lines_injectivity_check(p0);
    REQUIRE(inj.has_value());
    CHECK(*inj == (slp_range_verdict(p0, 1).verdict == Verdict::Holds));
    // the other ruling is in the same liaison class
    CHECK(slp_range_verdict(p1, 1).verdict == slp_range_verdict(p0, 1).verdict);
  }
  CHECK_FALSE(ruling_lines_injectivity_check(rao_profile(quadric_plus_general(8, 2, 1))).has_value());
}

TEST_CASE("rational curves of degree 8 have WLP") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    CHECK(wlp_verdict(rational_curve(8, seed)).verdict == Verdict::Holds);
  }
}

TEST_CASE("h-vectors of sections of 29 general lines") {
  const auto cfg = general_skew_lines(29, 1);
  std::mt19937_64 rng(2);
  const auto L = random_linear_form(FieldSpec(), 4, rng);
  const auto h1 = h_vector_of_section(cfg, L, 1);
  CHECK(h1.entries == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7, 1});
  CHECK(h1.degree == 29);
  const auto h2 = h_vector_of_section(cfg, L, 2);
  CHECK(h2.entries == std::vector<std::int64_t>{1, 3, 5, 7, 9, 11, 13, 9});
  CHECK(h2.degree == 58);
}

TEST_CASE("flat fat genericity") {
  CHECK_FALSE(genericity_test_flatfat(2, 3).generic);
  CHECK(genericity_test_flatfat(2, 3).observed[2] == 5);
  CHECK(genericity_test_flatfat(4, 3).generic);
  for (int m = 4; m <= 5; ++m) {
    const int s = 2 * m - 4;
    const auto rep = genericity_test_flatfat(s, m);
    CHECK_FALSE(rep.generic);
    CHECK(rep.observed[s] <= static_cast<std::int64_t>(binomial(s + 2, 2)) - 1);
  }
}

TEST_CASE("conjecture scans") {
  const auto cells = conjecture_scan({{"kind", "slp"}, {"r", {3, 5}}, {"m", {1, 2}}, {"trials", 2}});
  REQUIRE(cells.size() == 6);
  CHECK(cells.front().key == nlohmann::json{{"r", 3}, {"m", 1}});
  for (const auto& c : cells) {
    CHECK_FALSE(c.error);
    CHECK(c.result["verdict"] != "fails");
  }
  CHECK(conjecture_scan({{"kind", "slp"}, {"r", {5, 4}}, {"m", {1, 1}}}).empty());
  const auto bad = conjecture_scan({{"kind", "slp"}, {"r", {0, 1}}, {"m", 1}});
  REQUIRE(bad.size() == 2);
  CHECK(bad[0].error);
  CHECK_FALSE(bad[1].error);
  const auto ff = conjecture_scan({{"kind", "flat-fat"}, {"s", {3, 6}}, {"m", 4}, {"trials", 2}});
  REQUIRE(ff.size() == 4);
  CHECK(ff[1].result["generic"] == false);  // s = 4
  CHECK(ff[2].result["generic"] == true);   // s = 5
  CHECK_THROWS(conjecture_scan({{"kind", "cones"}, {"m", 1}}));
}

TEST_CASE("cross-engine audit on small configurations") {
  const auto rep = cross_engine_audit(4, 6, 3);
  CHECK(rep.cases == 16);
  CHECK(rep.comparisons > 0);
  CHECK(rep.discrepancies.empty());
  CHECK(cross_engine_audit(0, 8, 1).cases == 0);
}

TEST_CASE("golden diffs") {
  const nlohmann::json computed = {{"a", 1}, {"b", {{"c", {1, 2}}, {"d", 3}}}, {"extra", 0}};
  CHECK(golden_diff(computed, {{"a", 1}, {"b", {{"c", {1, 2}}}}}).empty());
  const auto d = golden_diff(computed, {{"a", 2}, {"b", {{"c", {1, 3}}}}, {"z", 1}});
  CHECK(d.size() == 3);
  CHECK_THROWS_AS(run_reproduction("table-9"), std::invalid_argument);
  CHECK(run_reproduction("cubic-intersection")["dim_3"] == 1);
}
