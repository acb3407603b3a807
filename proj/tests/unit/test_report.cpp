#include "helpers.hpp"
#include "json.hpp"
#include "lrclab/report.hpp"

using namespace lrclab;
using Json = nlohmann::json;

TEST_CASE("analyze report for the Hamming code") {
  const auto rep = analyze(testing::hamming74());
  const auto j = Json::parse(json_analyze(rep));
  CHECK(j["n"] == 7);
  CHECK(j["k"] == 4);
  CHECK(j["d"] == 3);
  CHECK(j["r"] == 3);
  CHECK(j["slack"] == 0);
  CHECK(j["optimal"] == true);
  CHECK(j["disjoint_partition"].is_null());
}

TEST_CASE("analyze report for the repetition code") {
  const auto j = Json::parse(json_analyze(analyze(testing::repetition(2, 5))));
  CHECK(j["r"] == 1);
  CHECK(j["slack"] == 0);
  CHECK(j["optimal"] == true);
}

TEST_CASE("claimed locality is cross-checked") {
  const auto rep = analyze(testing::extended_hamming84(), 4);
  CHECK(rep.optimality.claimed_r == 4);
  CHECK(rep.optimality.true_r == 3);
  CHECK(rep.optimality.slack_true == 0);
  CHECK(rep.optimality.slack_claimed == 1);
  // Optimal for the true locality, not for the claimed one.
  CHECK_FALSE(rep.optimality.optimal);
  const auto j = Json::parse(json_analyze(rep));
  CHECK(j["claimed_r"] == 4);
  CHECK(j["disjoint_partition"].size() == 2);
}

TEST_CASE("rationals are exact") {
  CHECK(rational_string(Rational(3)) == "3");
  CHECK(rational_string(Rational(-6, 4)) == "-3/2");
  CHECK(rational_string(Rational(0)) == "0");
}

TEST_CASE("bound table and JSON") {
  BoundQuery q;
  q.q = 16;
  q.k = 6;
  q.r = 3;
  q.flags.assume_mds_conjecture = true;
  const auto rows = evaluate_bounds(q);
  const auto table = bound_table(rows);
  CHECK(table.find("mds_regime") != std::string::npos);
  CHECK(table.find("25") != std::string::npos);
  const auto j = Json::parse(json_bounds(rows));
  bool seen = false;
  for (const auto& row : j)
    if (row["name"] == "mds_regime") {
      seen = true;
      CHECK(row["value"] == 25);
      CHECK(row["kind"] == "certified_finite");
    }
  CHECK(seen);
}

TEST_CASE("equal inputs give identical bytes") {
  const auto a = json_analyze(analyze(testing::hamming74()));
  const auto b = json_analyze(analyze(testing::hamming74()));
  CHECK(a == b);
  CHECK(a.back() == '\n');

  SearchTask t;
  t.q = 2;
  t.n = 6;
  t.k = 3;
  t.d_target = 3;
  t.r_target = 2;
  t.workers = 1;
  const auto one = json_search(search_singleton_optimal(t));
  t.workers = 3;
  CHECK(json_search(search_singleton_optimal(t)) == one);
  const auto j = Json::parse(one);
  CHECK(j.contains("status"));
  CHECK_FALSE(j.contains("workers"));
}
