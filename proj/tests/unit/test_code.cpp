#include <random>

#include "helpers.hpp"
#include "lrclab/search.hpp"
#include "oracles.hpp"

using namespace lrclab;
using testing::error_name;
using testing::gen;
using testing::mat;

TEST_CASE("construction from generator and parity check") {
  const auto rep = testing::repetition(2, 5);
  CHECK(rep.n() == 5);
  CHECK(rep.k() == 1);
  const auto ham = testing::hamming74();
  CHECK(ham.k() == 4);
  CHECK(ham.generator().mul_transpose(ham.parity_check()).is_zero());
  const auto dup = gen(2, 3, 5, {1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0});
  CHECK(dup.k() == 1);
  CHECK(error_name([] { (void)gen(3, 2, 3, {0, 0, 0, 0, 0, 0}); }) == "ZeroMatrix");
  CHECK(LinearCode::from_parity(mat(2, 1, 4, {0, 0, 0, 0}), true).k() == 4);
}

TEST_CASE("dual codes") {
  const auto ham = testing::hamming74();
  const auto simplex = dual(ham);
  CHECK(simplex.k() == 3);
  CHECK(min_distance(simplex) == 4);
  CHECK(weight_distribution(simplex) == std::map<std::size_t, std::uint64_t>{{0, 1}, {4, 7}});
  const auto sum_zero = dual(testing::repetition(2, 6));
  CHECK(sum_zero.k() == 5);
  CHECK(min_distance(sum_zero) == 2);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    const std::uint32_t q = std::vector<std::uint32_t>{2, 3, 4, 5}[i % 4];
    const std::size_t n = 2 + rng() % 9, k = 1 + rng() % (n - 1);
    const auto c = random_code(FieldSpec::from_order(q), n, k, rng());
    CHECK(dual(dual(c)) == c);
  }
  CHECK(error_name([] { (void)dual(gen(2, 2, 2, {1, 0, 0, 1})); }) == "RangeError");
}

TEST_CASE("minimum distance and weight distribution") {
  const auto ham = testing::hamming74();
  CHECK(min_distance(ham) == 3);
  CHECK(weight_distribution(ham) == std::map<std::size_t, std::uint64_t>{{0, 1}, {3, 7}, {4, 7}, {7, 1}});
  CHECK(min_distance(testing::repetition(2, 5)) == 5);
  CHECK(min_distance(gen(3, 3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1})) == 1);
  CHECK(weight_distribution(testing::repetition(2, 2)) == std::map<std::size_t, std::uint64_t>{{0, 1}, {2, 1}});
  std::mt19937_64 rng(9);
  for (int i = 0; i < 60; ++i) {
    const std::uint32_t q = std::vector<std::uint32_t>{2, 3, 4, 5, 7}[i % 5];
    const std::size_t n = 3 + rng() % 8, k = 1 + rng() % std::min<std::size_t>(n, 4);
    const auto c = random_code(FieldSpec::from_order(q), n, k, rng());
    std::uint64_t total = 0, qk = 1;
    for (auto [w, count] : weight_distribution(c)) total += count;
    for (std::size_t j = 0; j < k; ++j) qk *= q;
    CHECK(total == qk);
    CHECK(min_distance(c) <= n - k + 1);
    CHECK(distance_at_least(c, min_distance(c)));
    CHECK_FALSE(distance_at_least(c, min_distance(c) + 1));
  }
}

TEST_CASE("distance and weight enumeration budgets") {
  // [12,6] over GF(13): the column test is cheaper than 13^6 messages.
  const auto fx = evaluation_fixture(13, 3, 6);
  CHECK(min_distance(fx) == 6);
  CHECK(error_name([&] { (void)weight_distribution(fx, 1000000); }) == "BudgetExceeded");
  const auto wd = weight_distribution(fx);
  CHECK(wd.begin()->first == 0);
  CHECK(std::next(wd.begin())->first == 6);
  std::uint64_t total = 0;
  for (const auto& [w, cnt] : wd) total += cnt;
  CHECK(total == 4826809);
}

TEST_CASE("information-set sampling gives an upper bound") {
  const auto ham = testing::hamming74();
  const auto est = min_distance_upper_bound(ham, 50, 1);
  CHECK(est.upper_bound >= 3);
  CHECK_FALSE(est.exact);
}

TEST_CASE("puncturing and shortening") {
  const auto ham = testing::hamming74();
  const auto p = puncture(ham, 1);
  CHECK(p.n() == 6);
  CHECK(p.k() == 4);
  CHECK(min_distance(p) >= 2);
  const auto s = shorten(ham, 1);
  CHECK(s.n() == 6);
  CHECK(s.k() == 3);
  CHECK(min_distance(s) >= 3);
  CHECK(error_name([&] { (void)puncture(ham, 3); }) == "RangeError");
  CHECK(error_name([&] { (void)shorten(ham, 4); }) == "RangeError");

  std::mt19937_64 rng(13);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    int done = 0;
    while (done < 100) {
      const std::size_t n = 4 + rng() % 6, k = 2 + rng() % (n - 3);
      const auto c = random_code(FieldSpec::from_order(q), n, k, rng());
      const std::size_t d = min_distance(c);
      if (d < 2) continue;
      ++done;
      const std::size_t sp = 1 + rng() % (d - 1);
      const auto pc = puncture(c, sp);
      CHECK(pc.n() == n - sp);
      CHECK(min_distance(pc) + sp >= d);
      CHECK(pc.generator().mul_transpose(pc.parity_check()).is_zero());
      const std::size_t ss = 1 + rng() % (k - 1);
      const auto sc = shorten(c, ss);
      CHECK(sc.n() == n - ss);
      CHECK(sc.k() >= k - ss);
      CHECK(min_distance(sc) >= d);
    }
  }
}

TEST_CASE("explicit coordinate sets and permutations") {
  const auto ham = testing::hamming74();
  const auto s = shorten(ham, SupportSet({0}));
  CHECK(s.k() == 3);
  const std::vector<std::size_t> order = {6, 5, 4, 3, 2, 1, 0};
  const auto rev = permute(ham, order);
  CHECK(min_distance(rev) == 3);
  CHECK(permute(rev, order) == ham);
  CHECK(leading_subcode(ham, 2).k() == 2);
}

TEST_CASE("Singleton defect and classification") {
  auto ham = classify(testing::hamming74());
  CHECK(ham.defect == 1);
  CHECK(ham.kind == CodeClass::AMDS);
  auto rep = classify(testing::repetition(2, 5));
  CHECK(rep.defect == 0);
  CHECK(rep.kind == CodeClass::MDS);
  CHECK(rep.trivial);
  CHECK(classify(testing::repetition(3, 3)).trivial);
  CHECK(to_string(CodeClass::AMDS) == "AMDS");
}

TEST_CASE("supports") {
  const SupportSet s({4, 1, 7});
  CHECK(s.coords() == std::vector<std::size_t>{1, 4, 7});
  CHECK(s.one_based() == std::vector<std::size_t>{2, 5, 8});
  CHECK(SupportSet::from_mask(s.mask()) == s);
  CHECK(error_name([] { (void)SupportSet({64}).mask(); }) == "RangeError");
}
