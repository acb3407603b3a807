#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lrclab/matrix.hpp"

namespace lrclab {

/// Sorted set of coordinate indices. Stored 0-based; `one_based()` gives the
/// [1, n] labelling used in reports and files.
class SupportSet {
 public:
  SupportSet() = default;
  explicit SupportSet(std::vector<std::size_t> coords);
  static SupportSet of_vector(std::span<const FieldElement> v);
  static SupportSet range(std::size_t first, std::size_t last);  // [first, last)

  [[nodiscard]] const std::vector<std::size_t>& coords() const noexcept { return coords_; }
  [[nodiscard]] std::size_t size() const noexcept { return coords_.size(); }
  [[nodiscard]] bool empty() const noexcept { return coords_.empty(); }
  [[nodiscard]] bool contains(std::size_t i) const noexcept;
  [[nodiscard]] std::vector<std::size_t> one_based() const;
  [[nodiscard]] std::uint64_t mask() const;  // requires every index < 64
  static SupportSet from_mask(std::uint64_t mask);

  friend auto operator<=>(const SupportSet&, const SupportSet&) = default;

 private:
  std::vector<std::size_t> coords_;
};

inline constexpr std::uint64_t kDefaultDistanceBudget = std::uint64_t{1} << 24;

/// A q-ary [n, k] linear code. Immutable; the generator and parity-check
/// matrices are stored in canonical reduced row echelon form, so two codes
/// compare equal exactly when their row spaces agree.
class LinearCode {
 public:
  static LinearCode from_generator(const GFMatrix& generator);
  /// `allow_zero` admits the zero matrix and yields the full space GF(q)^n.
  static LinearCode from_parity(const GFMatrix& parity_check, bool allow_zero = false);

  [[nodiscard]] const FieldSpec& field() const noexcept { return generator_.field(); }
  [[nodiscard]] std::size_t n() const noexcept { return generator_.cols(); }
  [[nodiscard]] std::size_t k() const noexcept { return generator_.rows(); }
  [[nodiscard]] const GFMatrix& generator() const noexcept { return generator_; }
  [[nodiscard]] const GFMatrix& parity_check() const noexcept { return parity_; }
  [[nodiscard]] const std::vector<std::size_t>& info_set() const noexcept { return pivots_; }

  [[nodiscard]] std::optional<std::size_t> cached_distance() const noexcept;
  void cache_distance(std::size_t d) const noexcept;

  /// Codeword for a length-k message.
  [[nodiscard]] std::vector<FieldElement> encode(std::span<const FieldElement> message) const;
  [[nodiscard]] bool contains(std::span<const FieldElement> word) const;

  friend bool operator==(const LinearCode& a, const LinearCode& b) noexcept;

 private:
  LinearCode(GFMatrix g, GFMatrix h, std::vector<std::size_t> pivots);

  GFMatrix generator_;
  GFMatrix parity_;
  std::vector<std::size_t> pivots_;
  std::shared_ptr<std::atomic<std::int64_t>> d_cache_;
};

[[nodiscard]] LinearCode dual(const LinearCode& c);

/// Calls `visit` once per nonzero codeword up to scalar multiples (the first
/// nonzero message symbol is 1). Returning false from `visit` stops early.
void for_each_projective_codeword(const LinearCode& c,
                                  const std::function<bool(std::span<const FieldElement>)>& visit);

/// Exact minimum distance, by message enumeration or by searching for the
/// smallest linearly dependent set of parity-check columns, whichever is
/// cheaper. BudgetExceeded when neither fits `budget`. Cached on the code.
std::size_t min_distance(const LinearCode& c, std::uint64_t budget = kDefaultDistanceBudget);
/// Early-exit test: every nonzero codeword has weight >= threshold.
bool distance_at_least(const LinearCode& c, std::size_t threshold, std::uint64_t budget = kDefaultDistanceBudget);

/// Information-set sampling; the value is an upper bound, never flagged exact.
struct DistanceEstimate {
  std::size_t upper_bound = 0;
  bool exact = false;
};
DistanceEstimate min_distance_upper_bound(const LinearCode& c, std::size_t samples, std::uint64_t seed);

/// weight -> number of codewords (including the zero word). Counts sum to q^k.
std::map<std::size_t, std::uint64_t> weight_distribution(const LinearCode& c,
                                                         std::uint64_t budget = kDefaultDistanceBudget);

/// Removes the trailing `s` coordinates. Puncture needs 1 <= s <= d-1.
LinearCode puncture(const LinearCode& c, std::size_t s);
LinearCode puncture(const LinearCode& c, const SupportSet& coords);
/// Keeps codewords vanishing on the trailing `s` coordinates, then deletes them. Needs 1 <= s <= k-1.
LinearCode shorten(const LinearCode& c, std::size_t s);
LinearCode shorten(const LinearCode& c, const SupportSet& coords);

/// Moves coordinates: result coordinate j is input coordinate order[j].
LinearCode permute(const LinearCode& c, std::span<const std::size_t> order);
/// Subcode generated by the first `dim` rows of the canonical generator.
LinearCode leading_subcode(const LinearCode& c, std::size_t dim);

enum class CodeClass { MDS, AMDS, Other };

struct Classification {
  std::size_t defect = 0;
  CodeClass kind = CodeClass::Other;
  bool trivial = false;  // k in {0, 1, n-1, n}
};

std::size_t singleton_defect(const LinearCode& c, std::uint64_t budget = kDefaultDistanceBudget);
Classification classify(const LinearCode& c, std::uint64_t budget = kDefaultDistanceBudget);
std::string to_string(CodeClass k);

}  // namespace lrclab
