#include <random>

#include "helpers.hpp"
#include "lrclab/field.hpp"
#include "oracles.hpp"

using namespace lrclab;
using testing::error_name;

TEST_CASE("construction and published moduli") {
  const auto gf2 = FieldSpec::create(2, 1);
  CHECK(gf2.q() == 2);
  const auto gf4 = FieldSpec::create(2, 2);
  CHECK(gf4.q() == 4);
  CHECK(std::vector<std::uint32_t>(gf4.modulus().begin(), gf4.modulus().end()) == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(error_name([] { FieldSpec::create(4, 1); }) == "NotPrime");
  CHECK(error_name([] { FieldSpec::create(2, 17); }) == "OrderExceedsCap");
  CHECK(error_name([] { FieldSpec::create(3, 3, 20); }) == "OrderExceedsCap");
  CHECK(error_name([] { FieldSpec::from_order(6); }) == "UnknownField");
  CHECK(error_name([] { FieldSpec::with_modulus(2, {1, 0, 1}); }) == "NotIrreducible");  // x^2 + 1 = (x+1)^2
}

TEST_CASE("every table modulus is irreducible") {
  std::size_t entries = 0;
  for (std::uint32_t p = 2; p <= 256; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t q = p;
    for (std::uint32_t m = 2; q * p <= kDefaultFieldCap; ++m) {
      q *= p;
      const auto mod = published_modulus(p, m);
      REQUIRE(mod.size() == m + 1);
      CHECK(mod.back() == 1);
      CHECK(is_irreducible(p, mod));
      ++entries;
    }
  }
  CHECK(entries > 20);
}

TEST_CASE("small arithmetic examples") {
  const auto gf5 = FieldSpec::from_order(5);
  CHECK(gf5.inv(FieldElement{2}).value == 3);
  const auto gf4 = FieldSpec::from_order(4);
  CHECK(gf4.mul(FieldElement{2}, FieldElement{2}).value == 3);  // x * x = x + 1
  const auto gf2 = FieldSpec::from_order(2);
  CHECK(gf2.add(FieldElement{1}, FieldElement{1}).value == 0);
  CHECK(error_name([&] { (void)gf5.inv(FieldElement{0}); }) == "InverseOfZero");
  CHECK(error_name([&] { (void)gf5.element(5); }) == "RangeError");
}

TEST_CASE("tables agree with polynomial arithmetic") {
  for (std::uint32_t q : {2u, 3u, 4u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 81u, 121u, 125u, 128u}) {
    CAPTURE(q);
    const auto f = FieldSpec::from_order(q);
    const oracle::PolyField ref(q);
    std::size_t bad = 0;
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        bad += f.add(FieldElement{a}, FieldElement{b}).value != ref.add(a, b);
        bad += f.mul(FieldElement{a}, FieldElement{b}).value != ref.mul(a, b);
      }
    CHECK(bad == 0);
  }
}

TEST_CASE("axioms on sampled triples for larger fields") {
  std::mt19937 rng(3);
  for (std::uint32_t q : {256u, 243u, 1024u, 4096u, 65536u, 65521u}) {
    CAPTURE(q);
    const auto f = FieldSpec::from_order(q);
    for (int i = 0; i < 20000; ++i) {
      const FieldElement a{static_cast<std::uint32_t>(rng() % q)}, b{static_cast<std::uint32_t>(rng() % q)}, c{static_cast<std::uint32_t>(rng() % q)};
      REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      REQUIRE(f.mul(a, b) == f.mul(b, a));
      REQUIRE(f.add(a, f.neg(a)).is_zero());
      if (!a.is_zero()) REQUIRE(f.mul(a, f.inv(a)) == f.one());
      if (!a.is_zero()) REQUIRE(f.pow(a, q - 1) == f.one());
    }
  }
}

TEST_CASE("encoding round trip") {
  for (std::uint32_t q : {2u, 9u, 64u, 343u}) {
    const auto f = FieldSpec::from_order(q);
    for (std::uint32_t v = 0; v < q; ++v) {
      const auto digits = f.decode(FieldElement{v});
      CHECK(digits.size() == f.m());
      CHECK(f.encode(digits).value == v);
    }
  }
}

TEST_CASE("prime power factoring") {
  CHECK(factor_prime_power(1024).p == 2);
  CHECK(factor_prime_power(1024).m == 10);
  CHECK(factor_prime_power(12).p == 0);
  CHECK(factor_prime_power(13).m == 1);
  CHECK(is_prime(65521));
  CHECK(!is_prime(65535));
}
