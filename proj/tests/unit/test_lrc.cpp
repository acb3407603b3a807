#include <random>

#include "helpers.hpp"
#include "lrclab/lrc.hpp"
#include "lrclab/search.hpp"
#include "oracles.hpp"

using namespace lrclab;
using testing::error_name;
using testing::gen;

TEST_CASE("locality examples") {
  const auto ham = locality(testing::hamming74());
  CHECK(ham.r == 3);
  const auto rep = locality(testing::repetition(2, 5));
  CHECK(rep.r == 1);
  CHECK(error_name([] { (void)locality(gen(2, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1})); }) == "NoLocality");
  CHECK(error_name([] { (void)locality(testing::hamming74(), 2); }) == "NoLocality");
}

TEST_CASE("every reported support carries a dual codeword with that support") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    const std::uint32_t q = std::vector<std::uint32_t>{2, 3, 4}[i % 3];
    const std::size_t n = 4 + rng() % 6, k = 1 + rng() % (n - 2);
    const auto c = random_code(FieldSpec::from_order(q), n, k, rng());
    LocalityProfile p;
    try {
      p = locality(c);
    } catch (const Error&) {
      continue;
    }
    const oracle::PolyField f(q);
    const auto g = oracle::grid(c.generator());
    for (const auto& s : p.supports) {
      CHECK(SupportSet::of_vector(s.dual_word) == s.support);
      std::vector<std::uint32_t> w;
      for (auto e : s.dual_word) w.push_back(e.value);
      CHECK(oracle::in_dual(f, g, w));
      CHECK(s.support.size() <= p.r + 1);
    }
    std::vector<bool> covered(n);
    for (auto idx : p.cover_witness)
      for (auto j : p.supports[idx].support.coords()) covered[j] = true;
    CHECK(std::all_of(covered.begin(), covered.end(), [](bool b) { return b; }));
    // Minimality, against the reference computation.
    CHECK(p.r == std::max<std::size_t>(1, *oracle::locality(f, g)));
    if (p.r > 1) CHECK(error_name([&] { (void)locality(c, p.r - 1); }) == "NoLocality");
  }
}

TEST_CASE("disjoint partitions") {
  const auto ext = disjoint_partition(testing::extended_hamming84(), 3);
  REQUIRE(ext);
  CHECK(ext->size() == 2);
  CHECK(!disjoint_partition(testing::repetition(2, 5), 1));
  const auto six = disjoint_partition(testing::repetition(2, 6), 1);
  REQUIRE(six);
  CHECK(six->size() == 3);
  CHECK((*six)[0] == SupportSet({0, 1}));
}

TEST_CASE("exact cover search") {
  const std::vector<std::uint64_t> family = {0b0011, 0b0110, 0b1100, 0b1001};
  const auto cover = exact_cover(4, family);
  REQUIRE(cover);
  CHECK(*cover == std::vector<std::size_t>{0, 2});
  CHECK(!exact_cover(3, {0b011, 0b110}));
}

TEST_CASE("slack and optimality") {
  CHECK(singleton_slack(5, 1, 5, 1) == 0);
  CHECK(singleton_slack(7, 4, 3, 3) == 0);
  CHECK(singleton_slack(7, 4, 3, 4) == 1);
  CHECK(error_name([] { (void)singleton_slack(7, 4, 4, 3); }) == "NegativeSlack");
  const auto rep = is_singleton_optimal(testing::repetition(2, 5), 1);
  CHECK(rep.optimal);
  CHECK(rep.slack_true == 0);
  const auto ham = is_singleton_optimal(testing::hamming74(), 3);
  CHECK(ham.optimal);
  const auto ham4 = is_singleton_optimal(testing::hamming74(), 4);
  CHECK_FALSE(ham4.optimal);
  CHECK(ham4.slack_claimed == 1);
  CHECK(ham4.true_r == 3);
  const auto a = standing_assumptions(12, 6, 6, 3);
  CHECK(a.r_lt_k);
  CHECK(a.n_ge_2r2);
  CHECK(a.d_ge_3);
  CHECK(a.divisible);
}

TEST_CASE("solving for the dimension") {
  CHECK(solve_k(7, 3, 3) == 4);
  CHECK(solve_k(12, 6, 3) == 6);
  CHECK(!solve_k(8, 5, 1));
  for (std::int64_t n = 1; n <= 64; ++n)
    for (std::int64_t r = 1; r <= n; ++r)
      for (std::int64_t d = 1; d <= n; ++d) {
        std::vector<std::int64_t> ks;
        for (std::int64_t k = 1; k <= n; ++k)
          if (oracle::singleton_rhs(n, k, r) == d) ks.push_back(k);
        const auto got = solve_k(n, d, r);
        REQUIRE(ks.size() <= 1);
        if (ks.empty()) REQUIRE(!got);
        else REQUIRE(got == ks[0]);
      }
}

TEST_CASE("divisibility identity") {
  CHECK(divisibility_identity(12, 6, 6, 3));
  CHECK(divisibility_identity(8, 4, 4, 3));
  CHECK(error_name([] { (void)divisibility_identity(7, 4, 3, 3); }) == "NotDivisible");
}

TEST_CASE("normal form of the Hamming code") {
  const auto nf = build_normal_form(testing::hamming74(), 3);
  CHECK(nf.ell() == 3);
  CHECK(nf.h() == 0);
  CHECK(nf.a.size() == 3);
  CHECK(nf.b.size() == 4);
  CHECK(nf.code.generator().mul_transpose(nf.stacked()).is_zero());
  CHECK(rank(nf.stacked()) == 3);
  // Each support adds something new.
  std::uint64_t seen = 0;
  for (const auto& s : nf.supports) {
    CHECK((s.mask() & ~seen) != 0);
    seen |= s.mask();
  }
  CHECK(seen == 0x7f);
}

TEST_CASE("normal form of the evaluation fixture") {
  const auto nf = build_normal_form(evaluation_fixture(13, 3, 6), 3);
  CHECK(nf.ell() == 3);
  CHECK(nf.h() == 3);
  CHECK(nf.a.size() == 12);
  CHECK(nf.b.empty());
}

TEST_CASE("normal form bounds on random codes with d >= 3") {
  std::mt19937_64 rng(33);
  int done = 0;
  while (done < 80) {
    const std::uint32_t q = done % 2 ? 2 : 3;
    const std::size_t n = 6 + rng() % 5, k = 2 + rng() % (n - 4);
    const auto c = random_code(FieldSpec::from_order(q), n, k, rng());
    if (min_distance(c) < 3) continue;
    ++done;
    const std::size_t r = locality(c).r;
    const auto nf = build_normal_form(c, r);
    CHECK(k * (r + 1) < n * r);
    CHECK(n <= nf.ell() * (r + 1));
    CHECK(nf.ell() + nf.h() == n - k);
    CHECK((r + 1) * nf.ell() >= n + nf.b.size());
  }
}

TEST_CASE("recovery sets of full size") {
  CHECK(has_full_size_recovery_set(testing::hamming74(), 3).has_full_size_set);
  CHECK(has_full_size_recovery_set(testing::repetition(2, 5), 1).has_full_size_set);
  const auto fx = has_full_size_recovery_set(evaluation_fixture(13, 3, 6), 3);
  CHECK(fx.has_full_size_set);
  CHECK_FALSE(fx.regime_holds);  // 15 < 12 - 6 fails
}
