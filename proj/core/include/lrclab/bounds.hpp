#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lrclab/arith.hpp"

namespace lrclab {

using BigInt = boost::multiprecision::cpp_int;

enum class BoundKind { CertifiedFinite, AsymptoticAdvisory, Nonexistence };
std::string to_string(BoundKind k);

/// Leading term coefficient * base^exponent of an O(.) statement.
/// base is "q", "r" or "1"; hidden constants are not represented.
struct Growth {
  Rational coefficient{1};
  std::string base = "1";
  Rational exponent{0};
};
std::string to_string(const Growth& g);

struct BoundReport {
  std::string name;
  std::string source;  // short human label of the statement the row comes from
  BoundKind kind = BoundKind::AsymptoticAdvisory;
  std::optional<BigInt> value;          // certified integer value (largest admissible n, code size, ...)
  std::optional<Rational> strict_upper;  // n < strict_upper, when the statement is strict
  std::optional<Growth> growth;          // advisory rows
  std::vector<std::string> conditions;   // assumptions consumed
};

struct BoundFlags {
  bool assume_mds_conjecture = false;
  bool divisible = false;          // (r+1) | n
  bool disjoint_recovery = false;
};

/// Parameters for the `bound` front end; any subset may be given.
struct BoundQuery {
  std::optional<std::int64_t> q, n, k, d, r;
  std::optional<Rational> lambda;  // d = lambda * n
  BoundFlags flags;
};

/// floor(q^n / sum_{i <= (d-1)/2} C(n,i)(q-1)^i).
BigInt hamming_bound(std::int64_t q, std::int64_t n, std::int64_t d);
/// sum_{i<k} ceil(d / q^i): the least length of an [n,k,d]_q code.
std::int64_t griesmer_bound(std::int64_t q, std::int64_t k, std::int64_t d);
/// n - k - ceil(k/r) + 2.
std::int64_t singleton_type_max_d(std::int64_t n, std::int64_t k, std::int64_t r);
/// Distance cap 2q for [n, n-d, >=d] codes with k >= 2.
std::int64_t residual_distance_cap(std::int64_t q);

/// Certified n <= floor(2q/lambda); with the MDS conjecture flag and k != 1 (mod r)
/// also an advisory q/lambda + O(1). `k_mod_r_is_one` is consulted only for the advisory.
std::vector<BoundReport> proportional_bound(std::int64_t q, const Rational& lambda, bool assume_mds_conjecture,
                                            std::optional<bool> k_mod_r_is_one = std::nullopt);
/// floor(q + 1 + k + k/r); requires the MDS conjecture flag and k != 1 (mod r).
BoundReport mds_regime_bound(std::int64_t q, std::int64_t k, std::int64_t r, bool assume_mds_conjecture);
/// n < (d+r)(r-1+(d-2)r)/(r-d+2) inside s+2 < d < r+2. WindowEmpty outside.
BoundReport window_bound(std::int64_t d, std::int64_t r, std::int64_t s);

struct AsymptoticBoundInputs {
  std::int64_t t = 0;     // {d mod 4}
  Rational epsilon;       // {k mod r} / r
  std::int64_t d1 = 0;    // (d - t) / 4
};
AsymptoticBoundInputs asymptotic_inputs(std::int64_t d, std::int64_t r, std::int64_t k_mod_r);

/// Leading terms of the length bound for rd = o(n). Rows: the locality-aware
/// exponent, the locality-free exponent and their minimum.
std::vector<BoundReport> asymptotic_length_bound(std::int64_t q, std::int64_t d, std::int64_t r,
                                                 std::int64_t k_mod_r);

/// Every table row whose side conditions hold. `k_mod_r` is any representative of k
/// modulo r; rows that depend on it are skipped when it is absent. OutOfTable if nothing applies.
std::vector<BoundReport> classify_regime(std::int64_t d, std::int64_t r, std::optional<std::int64_t> k_mod_r,
                                         const BoundFlags& flags);

struct MuValue {
  std::int64_t value = 0;
  bool exact = false;  // false: upper bound only
};
/// Maximum length of an [n, n-r-1, r+1]_q code, r in {2, 3}.
MuValue mu_max_amds_length(std::int64_t r, std::int64_t q);

/// Everything applicable to `query`, for the CLI table. Rows whose preconditions fail are skipped.
std::vector<BoundReport> evaluate_bounds(const BoundQuery& query);

}  // namespace lrclab
