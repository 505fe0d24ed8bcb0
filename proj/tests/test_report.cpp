#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"
#include "lnp/report.hpp"

using namespace lnp;

TEST_CASE("stabilization index") {
  CHECK(stabilization_index(1) == 1);
  CHECK(stabilization_index(2) == 2);
  CHECK(stabilization_index(3) == 2);
  CHECK(stabilization_index(5) == 3);
  for (int32_t n = 2; n <= 12; ++n) {
    const int32_t s = stabilization_index(n);
    for (int32_t j = 0; j < n; ++j) CHECK(closed_form(n, j, s).value == n);
    bool some_below = false;
    for (int32_t j = 0; j < n && !some_below; ++j)
      some_below = closed_form(n, j, s - 1).value < n;
    if (s > 1) CHECK(some_below);
  }
  // the chain tops out no later than the binary-logarithm bound, and the
  // index is exactly min{i >= 1 : 2^{i+1} >= 2n+1}
  for (int32_t n = 1; n <= 40; ++n) {
    const int32_t s = stabilization_index(n);
    CHECK((int64_t{1} << (s + 1)) >= 2 * n + 1);
    if (s > 1) CHECK((int64_t{1} << s) < 2 * n + 1);
  }
}

TEST_CASE("invariant table values") {
  SUBCASE("n=2") {
    const auto t = invariant_table(2, 1);
    REQUIRE(t.size() == 2);
    CHECK(t[0].invariant == 1);
    CHECK(t[1].invariant == 2);
    CHECK(t[0].sources == (kSourceFull | kSourceReduced | kSourceFormula));
  }
  SUBCASE("n=3 at i=1") {
    const auto t = invariant_table(3, 1);
    REQUIRE(t.size() == 3);
    CHECK(t[0].invariant == 2);
    CHECK(t[1].invariant == 2);
    CHECK(t[2].invariant == 3);
  }
  SUBCASE("n=5 grid matches the published rows") {
    const auto t = invariant_table(5, 3);
    REQUIRE(t.size() == 15);
    const std::vector<std::vector<int64_t>> rows{
        {3, 4, 5}, {3, 5, 5}, {4, 5, 5}, {4, 5, 5}, {5, 5, 5}};
    for (const auto& rec : t) {
      CHECK(rec.invariant == rows[rec.j][rec.i - 1]);
      CHECK((rec.sources & kSourceFull) != 0);
    }
  }
  SUBCASE("full confirmation switches off above the bound") {
    const auto t = invariant_table(3, 1, /*full_algebra_max=*/0);
    for (const auto& rec : t)
      CHECK(rec.sources == (kSourceReduced | kSourceFormula));
  }
}

TEST_CASE("csv emission") {
  const auto t = invariant_table(2, 1);
  CHECK(invariant_csv(t) ==
        "n,j,i,invariant,source_flags\n"
        "2,0,1,1,7\n"
        "2,1,1,2,7\n");
  const auto parsed = nlohmann::json::parse(invariant_json(t));
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 2);
  CHECK(parsed[0]["invariant"] == 1);
  CHECK(parsed[0]["sources"].size() == 3);
}

TEST_CASE("distinguish reports") {
  SUBCASE("n=2 is completely separated") {
    const auto rep = distinguish(2);
    REQUIRE(rep.pairs.size() == 1);
    CHECK(rep.pairs[0].distinguished);
    CHECK(rep.pairs[0].at_i == 1);
    CHECK(rep.cartan_det == 4);
    CHECK(rep.simple_modules == 2);
  }
  SUBCASE("n=3 leaves {0,1} open") {
    const auto rep = distinguish(3);
    for (const auto& p : rep.pairs) {
      if (p.j == 0 && p.k == 1)
        CHECK_FALSE(p.distinguished);
      else
        CHECK(p.distinguished);
    }
  }
  SUBCASE("n=5 leaves exactly {2,3} open; {0,1} separates at i=2") {
    const auto rep = distinguish(5);
    int32_t open = 0;
    for (const auto& p : rep.pairs) {
      if (!p.distinguished) {
        ++open;
        CHECK(p.j == 2);
        CHECK(p.k == 3);
      }
      if (p.j == 0 && p.k == 1) {
        CHECK(p.distinguished);
        CHECK(p.at_i == 2);
      }
    }
    CHECK(open == 1);
  }
  SUBCASE("pairs at distance two or more separate at i=1") {
    for (int32_t n = 2; n <= 9; ++n)
      for (const auto& p : distinguish(n).pairs)
        if (p.k - p.j >= 2) {
          CHECK(p.distinguished);
          CHECK(p.at_i == 1);
        }
  }
  SUBCASE("the top pair {n-2, n-1} always separates") {
    for (int32_t n = 2; n <= 9; ++n)
      for (const auto& p : distinguish(n).pairs)
        if (p.j == n - 2 && p.k == n - 1) CHECK(p.distinguished);
  }
  SUBCASE("json and csv carry the status") {
    const auto rep = distinguish(3);
    const auto j = nlohmann::json::parse(distinguish_json(rep));
    CHECK(j["n"] == 3);
    CHECK(j["cartan_note"]["det"] == 8);
    CHECK(j["pairs"][0]["status"] == "open");
    const std::string csv = distinguish_csv(rep);
    CHECK(csv.find("3,0,1,open,") != std::string::npos);
    CHECK(csv.find("3,1,2,distinguished,1") != std::string::npos);
  }
}

TEST_CASE("verify suite smoke run") {
  SUBCASE("degenerate n=1") {
    const auto results = verify_suite(1);
    CHECK(!results.empty());
    for (const auto& r : results) {
      INFO(r.name, ": ", r.detail);
      CHECK(r.pass);
    }
  }
  SUBCASE("n up to 3") {
    for (const auto& r : verify_suite(3)) {
      INFO(r.name, ": ", r.detail);
      CHECK(r.pass);
    }
  }
}
