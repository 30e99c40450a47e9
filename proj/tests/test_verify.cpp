#include <algorithm>

#include "doctest.h"
#include "susyext/errors.hpp"
#include "susyext/verify.hpp"

using namespace susyext;

TEST_CASE("suite names") {
  for (auto s : {Suite::identities, Suite::spectra, Suite::qes, Suite::pct, Suite::all})
    CHECK(suite_from_string(to_string(s)) == s);
  CHECK_THROWS_AS(suite_from_string("bogus"), InvalidParameter);
}

TEST_CASE("suite membership") {
  const auto all = suite_checks(Suite::all);
  CHECK(all.size() >= 12);
  CHECK(std::is_sorted(all.begin(), all.end()));
  std::size_t total = 0;
  for (auto s : {Suite::identities, Suite::spectra, Suite::qes, Suite::pct}) {
    const auto names = suite_checks(s);
    total += names.size();
    for (const auto& n : names) CHECK(std::find(all.begin(), all.end(), n) != all.end());
  }
  CHECK(total == all.size());
}

TEST_CASE("identities suite is deterministic under a fixed seed") {
  VerifyConfig cfg;
  const auto a = run_suite(Suite::identities, cfg);
  const auto b = run_suite(Suite::identities, cfg);
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].name == b.rows[i].name);
    CHECK(a.rows[i].value == b.rows[i].value);
  }
  CHECK(a.passed());

  cfg.threads = 1;
  const auto serial = run_suite(Suite::identities, cfg);
  for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(serial.rows[i].value == a.rows[i].value);
}

TEST_CASE("overall pass is the conjunction of rows") {
  VerifyConfig cfg;
  cfg.tolerance_overrides["identities.riccati"] = 1e-30;
  const auto report = run_suite(Suite::identities, cfg);
  CHECK_FALSE(report.passed());
  const auto it = std::find_if(report.rows.begin(), report.rows.end(), [](const auto& r) { return r.name == "identities.riccati"; });
  REQUIRE(it != report.rows.end());
  CHECK_FALSE(it->passed);
  CHECK(it->tolerance == 1e-30);

  cfg.tolerance_overrides = {{"identities.unknown", 1.0}};
  CHECK_THROWS_AS(run_suite(Suite::identities, cfg), InvalidParameter);
}

TEST_CASE("single checks") {
  VerifyConfig cfg;
  const auto row = run_check("pct.radial_round_trip_ulps", cfg);
  CHECK(row.passed);
  CHECK(row.comparison == Comparison::at_most);
  CHECK(to_string(Comparison::at_least) == ">=");
  CHECK_THROWS_AS(run_check("pct.nothing", cfg), InvalidParameter);
}
