#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lrclab/bounds.hpp"
#include "lrclab/lrc.hpp"

namespace lrclab {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

/// Number of k-dimensional subspaces of GF(q)^n.
BigInt gaussian_binomial(std::int64_t q, std::int64_t n, std::int64_t k);

/// `fallback`, unless LRC_LAB_CAP holds a positive integer.
std::uint64_t enumeration_cap(std::uint64_t fallback = kDefaultEnumerationCap);

/// Calls `visit` once per k-dimensional subspace of GF(q)^n with its canonical
/// RREF generator. Pivot patterns in lexicographic order, free entries in
/// increasing base-q order column by column. Returning false stops.
/// CapExceeded if the subspace count is above `cap` (default: enumeration_cap()).
void enumerate_subspaces(const FieldSpec& field, std::size_t n, std::size_t k,
                         const std::function<bool(const GFMatrix&)>& visit,
                         std::optional<std::uint64_t> cap = std::nullopt);

enum class SearchMode { Exhaustive, Random };
enum class SearchStatus { Found, ExhaustedNone, BudgetExceeded };
std::string to_string(SearchStatus s);

struct SearchTask {
  std::uint32_t q = 2;
  std::size_t n = 0, k = 0, d_target = 0, r_target = 0;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t random_count = 0;
  std::uint64_t seed = 0;
  bool require_disjoint = false;
  bool require_divisible = false;
  std::optional<std::uint64_t> cap;  // subspace-count cap; default enumeration_cap()
  std::uint64_t node_budget = 0;     // leaves examined in full; 0 = unlimited
  std::size_t max_witnesses = 0;     // 0 = keep all
  unsigned workers = 1;
};

struct SearchWitness {
  LinearCode code;
  LocalityProfile profile;
  OptimalityReport report;
};

struct SearchCertificate {
  std::string scheme;  // how the space was enumerated
  BigInt total;        // Gaussian binomial
  std::uint64_t visited = 0;
  bool complete = false;  // visited == total
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNone;
  std::vector<SearchWitness> witnesses;
  std::uint64_t subspaces_visited = 0;
  std::uint64_t distance_survivors = 0;  // candidates with d >= d_target
  std::uint64_t locality_survivors = 0;  // ... and locality <= r_target
  std::optional<SearchCertificate> certificate;  // exhaustive mode only
};

/// Singleton-optimal [n, k, d_target; r_target]_q codes. Exhaustive mode walks
/// every subspace (pruning on partial codeword weights); random mode samples.
/// The outcome does not depend on the number of workers.
SearchOutcome search_singleton_optimal(const SearchTask& task);

/// Uniform full-rank k x n generator by rejection on rank; deterministic per seed.
LinearCode random_code(const FieldSpec& field, std::size_t n, std::size_t k, std::uint64_t seed);

/// Evaluation code of polynomials sum_{i<r, j<k/r} a_ij x^i (x^(r+1))^j on the
/// first n/(r+1) cosets of the (r+1)-th roots of unity (all of them by default).
/// Emitted only if it checks out as Singleton-optimal with disjoint recovery
/// sets; ParameterUnsupported otherwise.
LinearCode evaluation_fixture(std::uint32_t q, std::size_t r, std::size_t k, std::optional<std::size_t> n = std::nullopt);

}  // namespace lrclab
