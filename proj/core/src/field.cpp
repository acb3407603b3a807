#include "lrclab/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>

#include "lrclab/error.hpp"

namespace lrclab {

namespace detail {
extern const std::string_view kModuliTable;
}

namespace {

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients mod p

Poly to_digits(std::uint32_t v, std::uint32_t p, std::uint32_t m) {
  Poly d(m, 0);
  for (std::uint32_t i = 0; i < m; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

std::uint32_t from_digits(const Poly& d, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
  return v;
}

// a * b mod (monic) f, all over GF(p); a and b have degree < m.
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  const std::size_t m = f.size() - 1;
  std::vector<std::uint64_t> prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t deg = 2 * m; deg-- > m;) {
    const std::uint64_t top = prod[deg];
    if (top == 0) continue;
    prod[deg] = 0;
    for (std::size_t i = 0; i < m; ++i) {
      prod[deg - m + i] = (prod[deg - m + i] + (p - top) * f[i]) % p;
    }
  }
  Poly out(m);
  for (std::size_t i = 0; i < m; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

// Remainder of a modulo monic g.
Poly polymod(Poly a, const Poly& g, std::uint32_t p) {
  const std::size_t dg = g.size() - 1;
  while (a.size() > dg) {
    const std::uint64_t top = a.back();
    const std::size_t shift = a.size() - 1 - dg;
    if (top != 0) {
      for (std::size_t i = 0; i <= dg; ++i) {
        a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - top) * g[i]) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

struct TableEntry {
  std::uint32_t p, m;
  Poly modulus;
};

const std::vector<TableEntry>& moduli_table() {
  static const std::vector<TableEntry> table = [] {
    std::vector<TableEntry> out;
    std::istringstream in{std::string(detail::kModuliTable)};
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      TableEntry e{};
      if (!(ls >> e.p >> e.m)) continue;
      e.modulus.resize(e.m + 1);
      for (auto& c : e.modulus) ls >> c;
      out.push_back(std::move(e));
    }
    return out;
  }();
  return table;
}

std::shared_ptr<const detail::FieldTables> build_tables(std::uint32_t p, std::uint32_t m, Poly modulus) {
  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->m = m;
  std::uint32_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) q *= p;
  t->q = q;
  t->modulus = modulus;

  if (p == 2) {
    t->add_kind = detail::AddKind::Xor;
  } else if (m == 1) {
    t->add_kind = detail::AddKind::PrimeMod;
  } else if (q <= 256) {
    t->add_kind = detail::AddKind::Table;
  } else {
    t->add_kind = detail::AddKind::Digits;
  }

  t->neg.resize(q);
  for (std::uint32_t v = 0; v < q; ++v) {
    Poly d = to_digits(v, p, m);
    for (auto& c : d) c = (p - c) % p;
    t->neg[v] = static_cast<std::uint16_t>(from_digits(d, p));
  }
  if (t->add_kind == detail::AddKind::Table) {
    t->add.resize(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) t->add[std::size_t{a} * q + b] = t->add_digits(a, b);
  }

  t->exp.assign(2 * std::size_t{q - 1}, 0);
  t->log.assign(q, 0);
  if (q == 2) {
    t->generator = 1;
    t->exp = {1, 1};
    return t;
  }
  // Smallest multiplicative generator; x itself for the published (primitive) moduli.
  std::vector<std::uint32_t> candidates;
  if (m > 1) candidates.push_back(p);
  for (std::uint32_t g = 2; g < q; ++g)
    if (g != p || m == 1) candidates.push_back(g);
  for (std::uint32_t g : candidates) {
    const Poly gd = to_digits(g, p, m);
    Poly cur = to_digits(1, p, m);
    bool ok = true;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      const std::uint32_t v = from_digits(cur, p);
      if (i > 0 && v == 1) {
        ok = false;
        break;
      }
      t->exp[i] = static_cast<std::uint16_t>(v);
      if (m == 1) {
        cur[0] = static_cast<std::uint32_t>((std::uint64_t{cur[0]} * g) % p);
      } else {
        cur = mulmod(cur, gd, modulus, p);
      }
    }
    if (!ok) continue;
    t->generator = static_cast<std::uint16_t>(g);
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      t->exp[i + q - 1] = t->exp[i];
      t->log[t->exp[i]] = i;
    }
    return t;
  }
  fail(Errc::NotIrreducible, "no multiplicative generator; modulus is not irreducible");
}

std::shared_ptr<const detail::FieldTables> cached_tables(std::uint32_t p, std::uint32_t m, const Poly& modulus) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, Poly>, std::shared_ptr<const detail::FieldTables>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_tuple(p, m, modulus);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto t = build_tables(p, m, modulus);
  cache.emplace(std::move(key), t);
  return t;
}

void check_order(std::uint32_t p, std::uint32_t m, std::uint32_t cap) {
  if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (m < 1) fail(Errc::RangeError, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > cap || q > kDefaultFieldCap)
      fail(Errc::OrderExceedsCap, std::to_string(p) + "^" + std::to_string(m) + " exceeds cap");
  }
}

}  // namespace

namespace detail {

std::uint16_t FieldTables::add_digits(std::uint16_t a, std::uint16_t b) const noexcept {
  std::uint32_t out = 0;
  std::uint32_t scale = 1;
  std::uint32_t x = a;
  std::uint32_t y = b;
  for (std::uint32_t i = 0; i < m; ++i) {
    out += ((x % p + y % p) % p) * scale;
    x /= p;
    y /= p;
    scale *= p;
  }
  return static_cast<std::uint16_t>(out);
}

}  // namespace detail

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePower factor_prime_power(std::uint64_t q) noexcept {
  if (q < 2) return {};
  std::uint64_t p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  std::uint32_t m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return {};
  return {static_cast<std::uint32_t>(p), m};
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  const std::size_t m = monic.size() - 1;
  if (m == 1) return true;
  const Poly f(monic.begin(), monic.end());
  for (std::size_t deg = 1; deg <= m / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly g(deg + 1);
      std::uint64_t x = v;
      for (std::size_t i = 0; i < deg; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      g[deg] = 1;
      Poly rem = polymod(f, g, p);
      if (std::all_of(rem.begin(), rem.end(), [](std::uint32_t c) { return c == 0; })) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> published_modulus(std::uint32_t p, std::uint32_t m) {
  for (const auto& e : moduli_table())
    if (e.p == p && e.m == m) return e.modulus;
  return {};
}

FieldSpec FieldSpec::create(std::uint32_t p, std::uint32_t m, std::uint32_t cap) {
  check_order(p, m, cap);
  if (m == 1) return FieldSpec(cached_tables(p, 1, Poly{0, 1}));
  Poly modulus = published_modulus(p, m);
  if (modulus.empty()) fail(Errc::UnknownField, "no published modulus for (" + std::to_string(p) + "," + std::to_string(m) + ")");
  return with_modulus(p, std::move(modulus), cap);
}

FieldSpec FieldSpec::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus, std::uint32_t cap) {
  if (modulus.size() < 2) fail(Errc::RangeError, "modulus must have degree >= 1");
  const auto m = static_cast<std::uint32_t>(modulus.size() - 1);
  check_order(p, m, cap);
  for (auto c : modulus)
    if (c >= p) fail(Errc::RangeError, "modulus coefficient out of range");
  if (modulus.back() != 1) fail(Errc::NotIrreducible, "modulus must be monic");
  if (m == 1) return FieldSpec(cached_tables(p, 1, Poly{0, 1}));
  if (!is_irreducible(p, modulus)) fail(Errc::NotIrreducible, "modulus is reducible over GF(" + std::to_string(p) + ")");
  return FieldSpec(cached_tables(p, m, modulus));
}

FieldSpec FieldSpec::from_order(std::uint32_t q, std::uint32_t cap) {
  const PrimePower pp = factor_prime_power(q);
  if (pp.p == 0) fail(Errc::UnknownField, std::to_string(q) + " is not a prime power");
  return create(pp.p, pp.m, cap);
}

FieldElement FieldSpec::element(std::uint32_t value) const {
  if (value >= t_->q) fail(Errc::RangeError, "element " + std::to_string(value) + " outside GF(" + std::to_string(t_->q) + ")");
  return FieldElement{value};
}

FieldElement FieldSpec::inv(FieldElement a) const {
  if (a.value == 0) fail(Errc::InverseOfZero, "inverse of zero");
  const std::uint32_t l = t_->log[a.value];
  return FieldElement{t_->exp[l == 0 ? 0 : (t_->q - 1) - l]};
}

FieldElement FieldSpec::pow(FieldElement a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.value == 0) return {};
  const std::uint64_t l = (std::uint64_t{t_->log[a.value]} * (e % (t_->q - 1))) % (t_->q - 1);
  return FieldElement{t_->exp[l]};
}

std::vector<std::uint32_t> FieldSpec::decode(FieldElement a) const { return to_digits(a.value, t_->p, t_->m); }

FieldElement FieldSpec::encode(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != t_->m) fail(Errc::DimensionMismatch, "coefficient vector length must equal m");
  for (auto c : coeffs)
    if (c >= t_->p) fail(Errc::RangeError, "coefficient out of range");
  return FieldElement{from_digits(Poly(coeffs.begin(), coeffs.end()), t_->p)};
}

bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
  return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->m == b.t_->m && a.t_->modulus == b.t_->modulus);
}

}  // namespace lrclab
