#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lrclab/code.hpp"

namespace lrclab {

/// Support of a dual codeword together with one codeword realizing it.
struct RecoverySupport {
  SupportSet support;
  std::vector<FieldElement> dual_word;
};

inline constexpr std::uint64_t kDefaultCoverNodeCap = 10'000'000;

struct LocalityProfile {
  std::size_t r = 0;
  std::vector<RecoverySupport> supports;         // every dual support of size <= r+1, lexicographic
  std::vector<std::size_t> cover_witness;        // indices into supports, union is [n]
  std::optional<std::vector<std::size_t>> disjoint_partition;  // indices into supports
  bool has_full_size_set = false;
};

/// All exact supports of nonzero dual codewords with at most `max_size`
/// coordinates, in lexicographic order. Picks subset testing or dual
/// enumeration, whichever is cheaper. Needs n <= 64.
std::vector<RecoverySupport> recovery_supports(const LinearCode& c, std::size_t max_size);

/// Minimum locality r <= r_max (default n-1) with witnesses. NoLocality when no cover exists.
LocalityProfile locality(const LinearCode& c, std::optional<std::size_t> r_max = std::nullopt,
                         std::uint64_t node_cap = kDefaultCoverNodeCap);

/// Exact cover of [n] by members of `family` (bitmasks). Deterministic DFS: the
/// lowest uncovered coordinate is branched on first, candidates in family order.
/// Returns indices into `family`.
std::optional<std::vector<std::size_t>> exact_cover(std::size_t n, const std::vector<std::uint64_t>& family,
                                                    std::uint64_t node_cap = kDefaultCoverNodeCap);

std::optional<std::vector<SupportSet>> disjoint_partition(const LinearCode& c, std::size_t r,
                                                          std::uint64_t node_cap = kDefaultCoverNodeCap);

/// (n - k - ceil(k/r) + 2) - d. NegativeSlack if the bound is violated.
std::int64_t singleton_slack(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t r);
/// Same quantity without the sign check.
std::int64_t signed_singleton_slack(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t r);

struct StandingAssumptions {
  bool r_lt_k = false;
  bool n_ge_2r2 = false;  // n >= 2(r+1)
  bool d_ge_3 = false;
  bool divisible = false;  // (r+1) | n
};

StandingAssumptions standing_assumptions(std::size_t n, std::size_t k, std::size_t d, std::size_t r);

struct OptimalityReport {
  std::size_t n = 0, k = 0, d = 0;
  std::size_t claimed_r = 0;
  std::size_t true_r = 0;
  std::int64_t slack_claimed = 0;
  std::int64_t slack_true = 0;
  bool optimal = false;
  StandingAssumptions assumptions;
};

OptimalityReport is_singleton_optimal(const LinearCode& c, std::size_t claimed_r);

/// The unique k in [1, n] meeting the Singleton-type bound with equality, if any.
std::optional<std::int64_t> solve_k(std::int64_t n, std::int64_t d, std::int64_t r);

/// n - k == n/(r+1) + d - 2 - floor((d-2)/(r+1)). NotDivisible unless (r+1) | n.
bool divisibility_identity(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t r);

/// Parity-check matrix H = [H1; H2]: H1 holds greedily chosen low-weight dual
/// codewords covering [n], H2 completes a basis of the dual code.
struct NormalForm {
  LinearCode code;
  std::size_t r = 0;
  std::vector<SupportSet> supports;  // supp(u_i), one per row of H1
  GFMatrix h1;
  GFMatrix h2;
  SupportSet a;  // columns with exactly one nonzero in H1
  SupportSet b;  // columns with at least two

  [[nodiscard]] std::size_t ell() const noexcept { return h1.rows(); }
  [[nodiscard]] std::size_t h() const noexcept { return h2.rows(); }
  [[nodiscard]] GFMatrix stacked() const { return h1.stack(h2); }
};

NormalForm build_normal_form(const LinearCode& c, std::size_t r);

struct FullSizeReport {
  bool has_full_size_set = false;
  bool regime_holds = false;  // r^2 + 2r < n - d
};

FullSizeReport has_full_size_recovery_set(const LinearCode& c, std::size_t r);

}  // namespace lrclab
