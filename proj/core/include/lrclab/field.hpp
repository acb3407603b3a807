#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace lrclab {

/// Canonical encoding of an element of GF(p^m): the residue polynomial
/// sum c_i x^i is stored as the base-p integer sum c_i p^i.
struct FieldElement {
  std::uint16_t value{0};

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t v) : value(static_cast<std::uint16_t>(v)) {}

  [[nodiscard]] constexpr bool is_zero() const noexcept { return value == 0; }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

inline constexpr std::uint32_t kDefaultFieldCap = 1u << 16;

namespace detail {

enum class AddKind : std::uint8_t { Xor, PrimeMod, Table, Digits };

struct FieldTables {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;  // c_0 .. c_m, monic
  std::uint16_t generator = 0;
  AddKind add_kind = AddKind::Xor;
  std::vector<std::uint16_t> exp;  // length 2(q-1), exp[i] = g^i
  std::vector<std::uint32_t> log;  // log[0] unused
  std::vector<std::uint16_t> add;  // q*q when add_kind == Table
  std::vector<std::uint16_t> neg;  // additive inverse

  [[nodiscard]] std::uint16_t add_digits(std::uint16_t a, std::uint16_t b) const noexcept;
};

}  // namespace detail

/// A finite field GF(p^m) with q = p^m <= 2^16 and a fixed irreducible modulus.
///
/// Copies share immutable lookup tables. Elements carry no back-reference;
/// every operation takes the FieldSpec explicitly.
class FieldSpec {
 public:
  /// Field with the repo's published modulus for (p, m). Throws NotPrime or OrderExceedsCap.
  static FieldSpec create(std::uint32_t p, std::uint32_t m, std::uint32_t cap = kDefaultFieldCap);
  /// Field with a caller-supplied monic modulus c_0..c_m, verified irreducible.
  static FieldSpec with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus,
                                std::uint32_t cap = kDefaultFieldCap);
  /// Resolves an order q = p^m through the modulus table. Throws UnknownField.
  static FieldSpec from_order(std::uint32_t q, std::uint32_t cap = kDefaultFieldCap);

  [[nodiscard]] std::uint32_t p() const noexcept { return t_->p; }
  [[nodiscard]] std::uint32_t m() const noexcept { return t_->m; }
  [[nodiscard]] std::uint32_t q() const noexcept { return t_->q; }
  /// For m = 1 this is the placeholder x - 0, i.e. {0, 1}.
  [[nodiscard]] std::span<const std::uint32_t> modulus() const noexcept { return t_->modulus; }
  [[nodiscard]] FieldElement generator() const noexcept { return FieldElement{t_->generator}; }

  [[nodiscard]] FieldElement element(std::uint32_t value) const;  // RangeError if value >= q
  [[nodiscard]] bool contains(FieldElement a) const noexcept { return a.value < t_->q; }

  [[nodiscard]] FieldElement add(FieldElement a, FieldElement b) const noexcept {
    switch (t_->add_kind) {
      case detail::AddKind::Xor: return FieldElement{static_cast<std::uint32_t>(a.value ^ b.value)};
      case detail::AddKind::PrimeMod: {
        std::uint32_t s = std::uint32_t{a.value} + b.value;
        return FieldElement{s >= t_->p ? s - t_->p : s};
      }
      case detail::AddKind::Table: return FieldElement{t_->add[std::size_t{a.value} * t_->q + b.value]};
      case detail::AddKind::Digits: return FieldElement{t_->add_digits(a.value, b.value)};
    }
    return {};
  }
  [[nodiscard]] FieldElement neg(FieldElement a) const noexcept { return FieldElement{t_->neg[a.value]}; }
  [[nodiscard]] FieldElement sub(FieldElement a, FieldElement b) const noexcept { return add(a, neg(b)); }
  [[nodiscard]] FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    if (a.value == 0 || b.value == 0) return {};
    return FieldElement{t_->exp[t_->log[a.value] + t_->log[b.value]]};
  }
  [[nodiscard]] FieldElement inv(FieldElement a) const;  // InverseOfZero
  [[nodiscard]] FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  [[nodiscard]] FieldElement pow(FieldElement a, std::uint64_t e) const noexcept;
  [[nodiscard]] FieldElement one() const noexcept { return FieldElement{1}; }

  /// Coefficient vector c_0..c_{m-1} of the residue polynomial.
  [[nodiscard]] std::vector<std::uint32_t> decode(FieldElement a) const;
  [[nodiscard]] FieldElement encode(std::span<const std::uint32_t> coeffs) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept;

 private:
  explicit FieldSpec(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
  std::shared_ptr<const detail::FieldTables> t_;
};

[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// Irreducibility over GF(p) of a monic polynomial given by c_0..c_m (trial division).
[[nodiscard]] bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

/// (p, m) for a prime power q, or {0, 0} when q is not a prime power.
struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
};
[[nodiscard]] PrimePower factor_prime_power(std::uint64_t q) noexcept;

/// Published modulus for (p, m), m >= 2, from the repo table; empty if absent.
[[nodiscard]] std::vector<std::uint32_t> published_modulus(std::uint32_t p, std::uint32_t m);

}  // namespace lrclab
