#include <random>

#include "helpers.hpp"
#include "lrclab/search.hpp"
#include "lrclab/transform.hpp"
#include "oracles.hpp"

using namespace lrclab;
using testing::error_name;

namespace {

const LinearCode& fixture() {
  static const LinearCode c = evaluation_fixture(13, 3, 6);
  return c;
}

std::size_t oracle_distance(const LinearCode& c) {
  const oracle::PolyField f(c.field().q());
  return oracle::distance_by_columns(f, oracle::grid(c.generator()));
}

}  // namespace

TEST_CASE("deleting no rows returns the code") {
  const auto nf = build_normal_form(testing::hamming74(), 3);
  const auto rep = derive_ci(nf, {});
  REQUIRE(rep.result);
  CHECK(*rep.result == testing::hamming74());
  CHECK(rep.contract_holds);
}

TEST_CASE("deleting one Hamming row leaves a repetition code") {
  const auto nf = build_normal_form(testing::hamming74(), 3);
  const auto rep = derive_ci(nf, {0});
  REQUIRE(rep.result);
  CHECK(rep.n_actual == 3);
  CHECK(rep.k_actual == 1);
  CHECK(rep.d_actual == 3u);
  CHECK(rep.removed.size() == 4);
}

TEST_CASE("deleting one fixture row") {
  const auto nf = build_normal_form(fixture(), 3);
  const auto rep = derive_ci(nf, {0});
  CHECK(rep.n_actual == 8);
  CHECK(rep.k_actual >= 3);
  REQUIRE(rep.result);
  CHECK(oracle_distance(*rep.result) >= 6);
  CHECK(rep.contract_holds);
}

TEST_CASE("residual and MDS derivations") {
  const auto res = derive_residual(testing::hamming74(), 3);
  CHECK(res.rows.empty());
  CHECK(res.k_actual == 4);
  CHECK(res.dimension_is_n_minus_d == true);
  CHECK(res.residual_cap_holds == true);

  const auto fres = derive_residual(fixture(), 3);
  CHECK(fres.n_actual == 12);
  CHECK(fres.k_actual == 6);

  const auto mds = derive_mds(testing::hamming74(), 3);
  REQUIRE(mds.result);
  CHECK(mds.n_actual == 3);
  CHECK(mds.k_actual == 1);
  CHECK(mds.mds == true);
  CHECK(mds.nontrivial == false);
  CHECK(mds.nontrivial_expected == false);

  const auto fmds = derive_mds(fixture(), 3);
  REQUIRE(fmds.result);
  CHECK(fmds.n_actual == 8);
  CHECK(fmds.k_actual >= 3);
  CHECK(fmds.mds == true);
  CHECK(fmds.nontrivial == true);
  CHECK(classify(*fmds.result).defect == 0);

  const auto bad = testing::gen(2, 2, 5, {1, 0, 1, 1, 0, 0, 1, 0, 1, 1});
  CHECK(error_name([&] { (void)derive_mds(bad, 3); }) == "PreconditionFailed");
}

TEST_CASE("pipeline on the Hamming code is vacuous") {
  const auto p = run_pipeline(build_normal_form(testing::hamming74(), 3));
  CHECK(p.a == 3);
  CHECK(p.b == 4);
  CHECK(p.ell1 == 3);
  CHECK(p.ck_n == 0);
  CHECK(p.vacuous);
  CHECK_FALSE(p.distance_claim_holds.has_value());
  CHECK(p.n_f_identity_holds);
}

TEST_CASE("pipeline on the fixture") {
  const auto p = run_pipeline(build_normal_form(fixture(), 3));
  CHECK(p.a == 12);
  CHECK(p.b == 0);
  CHECK(p.ell1 == 3);
  CHECK(p.h == 3);
  REQUIRE(p.kmat);
  CHECK(p.kmat->rows() == 3);
  CHECK(p.kmat->cols() == 9);
  REQUIRE(p.ck);
  CHECK(p.ck->k() >= 6);
  CHECK(oracle_distance(*p.ck) >= 3);
  CHECK(p.f == Rational(1, 3));
  CHECK(p.g == Rational(0));
  CHECK(p.c == Rational(3));
  CHECK(p.epsilon == Rational(1));
  CHECK(p.s == 0);
  CHECK(p.t == 2);
  CHECK(p.n_f_identity_holds);
  CHECK(p.h_equals_c);
  CHECK(p.g_range_holds);
  CHECK(p.b_bound_holds);
}

TEST_CASE("every floor((d-1)/2) columns of L3 are independent") {
  const auto p = run_pipeline(build_normal_form(fixture(), 3));
  REQUIRE(p.l3);
  const std::size_t t = (p.d - 1) / 2;
  const oracle::PolyField f(13);
  const auto l3 = oracle::grid(*p.l3);
  const std::size_t cols = p.l3->cols();
  std::vector<std::size_t> pick(t);
  for (std::size_t i = 0; i < t; ++i) pick[i] = i;
  std::size_t subsets = 0;
  while (true) {
    oracle::Grid sub(l3.size(), std::vector<std::uint32_t>(t));
    for (std::size_t i = 0; i < l3.size(); ++i)
      for (std::size_t j = 0; j < t; ++j) sub[i][j] = l3[i][pick[j]];
    CHECK(oracle::rank(f, sub) == t);
    ++subsets;
    std::size_t i = t;
    while (i > 0 && pick[i - 1] == cols - t + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < t; ++j) pick[j] = pick[j - 1] + 1;
  }
  CHECK(subsets == 66);
}

TEST_CASE("pipeline column operations keep the column rank profile") {
  // L1 is a column-scaled copy of the A-columns of H, L3 differs by column
  // operations inside blocks; both keep the rank of every block-closed column set.
  const auto nf = build_normal_form(fixture(), 3);
  const auto p = run_pipeline(nf);
  const oracle::PolyField f(13);
  const auto h = oracle::grid(nf.stacked());
  oracle::Grid a_cols(h.size());
  for (std::size_t i = 0; i < h.size(); ++i)
    for (auto j : p.columns) a_cols[i].push_back(h[i][j]);
  CHECK(oracle::rank(f, oracle::grid(*p.l1)) == oracle::rank(f, a_cols));
  CHECK(oracle::rank(f, oracle::grid(*p.l3)) == oracle::rank(f, a_cols));
}

TEST_CASE("optimal propagation") {
  const auto two = propagate_optimal(fixture(), 3, 2);
  REQUIRE(two.result);
  CHECK(two.after.n == 8);
  CHECK(two.after.k == 4);
  CHECK(two.after.d == 4u);
  CHECK(two.after.r == 3u);
  CHECK(two.slack_after == 0);
  CHECK(two.disjoint_after);
  CHECK(oracle_distance(*two.result) == 4);

  const auto zero = propagate_optimal(fixture(), 3, 0);
  REQUIRE(zero.result);
  CHECK(zero.after.k == 6);
  CHECK(zero.after.d == 2u);
  CHECK(zero.optimal_preserved);

  CHECK(error_name([] { (void)propagate_optimal(fixture(), 3, 3); }) == "CeilingMismatch");
  CHECK(error_name([] { (void)propagate_optimal(fixture(), 3, 5); }) == "RangeError");
  // [5,1,5;1]: no disjoint recovery sets.
  CHECK(error_name([] { (void)propagate_optimal(testing::repetition(2, 5), 1, 0); }) == "NoDisjointPartition");
  // [4,1,4;1] with a = 0 would need distance 2 ... then [2,1,2;1] and d = 0 next.
  CHECK(error_name([] { (void)propagate_optimal(testing::repetition(2, 2), 1, 0); }) == "DegenerateDistance");
}

TEST_CASE("distance reduction") {
  const auto rep = reduce_distance(fixture(), 3);
  CHECK(rep.b == 2);
  CHECK(rep.planned_steps == 1);
  REQUIRE(rep.result);
  CHECK(rep.after.n == 8);
  CHECK(rep.after.k == 6);
  CHECK(rep.after.d == 2u);
  CHECK(rep.completed);

  // d <= r+1: nothing to do.
  const auto ham = reduce_distance(testing::hamming74(), 3);
  CHECK(ham.planned_steps == 0);
  CHECK(ham.steps.empty());
  REQUIRE(ham.result);
  CHECK(*ham.result == testing::hamming74());
}

TEST_CASE("C_I contract on random codes") {
  std::mt19937_64 rng(77);
  int codes = 0;
  while (codes < 40) {
    const std::uint32_t q = codes % 2 ? 2 : 3;
    const std::size_t n = 6 + rng() % 4, k = 2 + rng() % (n - 4);
    const auto c = random_code(FieldSpec::from_order(q), n, k, rng());
    const std::size_t d = min_distance(c);
    if (d < 3) continue;
    ++codes;
    const std::size_t r = locality(c).r;
    const auto nf = build_normal_form(c, r);
    for (std::size_t i = 0; i < nf.ell(); ++i) {
      try {
        const auto rep = derive_ci(nf, {i});
        CHECK(static_cast<std::int64_t>(rep.n_actual) >= rep.n_min);
        CHECK(static_cast<std::int64_t>(rep.k_actual) >= rep.k_min);
        if (rep.result) CHECK(oracle_distance(*rep.result) >= d);
        CHECK(rep.contract_holds);
      } catch (const Error& e) {
        CHECK(e.code() == Errc::EmptyResult);
      }
    }
  }
}
