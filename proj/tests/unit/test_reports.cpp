#include "bernpoly/errors.hpp"
#include "bernpoly/reports.hpp"

#include <doctest.h>

#include "support.hpp"

using namespace bernpoly;
using testsupport::rat;

TEST_SUITE_BEGIN("reports");

TEST_CASE("default verification grid") {
  const auto grid = default_verify_grid(12);
  CHECK(!grid.empty());
  for (size_t i = 0; i < grid.size(); ++i) {
    CHECK(grid[i].p() > 0);
    CHECK(grid[i].p() <= rat("1/2"));
    CHECK(grid[i].t() <= 12);
    if (i > 0) CHECK(grid[i - 1].p() < grid[i].p());  // sorted, distinct
  }
  // 1/2 and 1/3 are both present exactly once
  int halves = 0;
  int thirds = 0;
  for (const auto& p : grid) {
    halves += p.p() == rat("1/2") ? 1 : 0;
    thirds += p.p() == rat("1/3") ? 1 : 0;
  }
  CHECK(halves == 1);
  CHECK(thirds == 1);
}

TEST_CASE("verification passes on honest tables") {
  for (const char* p_text : {"1/4", "1/3", "2/5", "1/2"}) {
    const VerifyRecord record = verify_closed_form(MarginParam::parse(p_text));
    CAPTURE(record.line());
    CHECK(record.pass());
    CHECK(record.line().starts_with("PASS"));
  }
}

TEST_CASE("a corrupted table entry is caught") {
  const VerifyRecord record =
      verify_closed_form(MarginParam{rat("2/5")}, std::make_pair(0, 0));
  CHECK(!record.pass());
  CHECK(!record.set_equal);
  CHECK(record.line().starts_with("FAIL"));
  CHECK(record.detail.find("closed-only") != std::string::npos);
}

TEST_CASE("small sweep is deterministic and self-checked") {
  const auto records = sweep_d4(10, 12, 2);
  REQUIRE(records.size() == 3);
  for (const auto& r : records) {
    CHECK(r.vertex_count > 0);
    CHECK(r.p == Rational{r.s, 100});
  }
  const auto again = sweep_d4(10, 12, 1);
  for (size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].vertex_count == again[i].vertex_count);
  }
  CHECK_THROWS_AS(sweep_d4(30, 10, 1), OutOfRange);
  CHECK_THROWS_AS(sweep_d4(0, 10, 1), OutOfRange);
  CHECK_THROWS_AS(sweep_d4(10, 51, 1), OutOfRange);
}

TEST_CASE("sweep csv schema") {
  std::vector<SweepRecord> records{{25, 100, rat("1/4"), 42, 7}};
  CHECK(sweep_to_csv(records) == "s,p,nr,elapsed_ms\n25,1/4,42,7\n");
}

TEST_CASE("sigma-cm report carries the exact quantities") {
  const std::string report = sigma_cm_report(MarginParam{rat("2/5")});
  CHECK(report.find("mu2_plus = 1/5") != std::string::npos);
  CHECK(report.find("V(S) = 4/25") != std::string::npos);
  CHECK(report.find("-7/18") != std::string::npos);   // equi-correlation
  CHECK(report.find("-2/25") != std::string::npos);   // generator allocation
  CHECK(report.find("4/75") != std::string::npos);    // exchangeable allocation

  const std::string low = sigma_cm_report(MarginParam{rat("1/4")});
  CHECK(low.find("generators: 1") != std::string::npos);
  CHECK(low.find("1/16") != std::string::npos);

  const std::string third = sigma_cm_report(MarginParam{rat("1/3")});
  CHECK(third.find("joint mix") != std::string::npos);
}

TEST_CASE("pmf report") {
  const MarginParam p{rat("2/5")};
  const std::string report = pmf_report(table2_column(p, 9));
  CHECK(report.find("p = 2/5") != std::string::npos);
  CHECK(report.find("-1/4") != std::string::npos);
  CHECK(report.find("P-NC") != std::string::npos);
  CHECK(report.find("sigma-countermonotone: no") != std::string::npos);

  CHECK_THROWS_AS(
      pmf_report(make_pmf(3, {rat("1/2"), rat("1/4"), rat("0"), rat("0"), rat("0"),
                              rat("0"), rat("0"), rat("1/4")})),
      NotAMember);
}

TEST_CASE("extremals report shows decimals only on request") {
  const ExtremalSet es = closed_form_extremals(MarginParam{rat("2/5")});
  const std::string exact = extremals_report(es);
  CHECK(exact.find("2/5") != std::string::npos);
  CHECK(exact.find("0.4") == std::string::npos);
  const std::string decorated = extremals_report(es, 3);
  CHECK(decorated.find("2/5 (0.400)") != std::string::npos);
}

TEST_SUITE_END();
