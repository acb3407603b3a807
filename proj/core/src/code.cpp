#include "lrclab/code.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "lrclab/error.hpp"

namespace lrclab {

SupportSet::SupportSet(std::vector<std::size_t> coords) : coords_(std::move(coords)) {
  std::sort(coords_.begin(), coords_.end());
  coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());
}

SupportSet SupportSet::of_vector(std::span<const FieldElement> v) {
  std::vector<std::size_t> c;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) c.push_back(i);
  return SupportSet(std::move(c));
}

SupportSet SupportSet::range(std::size_t first, std::size_t last) {
  std::vector<std::size_t> c;
  for (std::size_t i = first; i < last; ++i) c.push_back(i);
  return SupportSet(std::move(c));
}

bool SupportSet::contains(std::size_t i) const noexcept {
  return std::binary_search(coords_.begin(), coords_.end(), i);
}

std::vector<std::size_t> SupportSet::one_based() const {
  std::vector<std::size_t> out(coords_);
  for (auto& c : out) ++c;
  return out;
}

std::uint64_t SupportSet::mask() const {
  std::uint64_t m = 0;
  for (auto c : coords_) {
    if (c >= 64) fail(Errc::RangeError, "support mask needs coordinates below 64");
    m |= std::uint64_t{1} << c;
  }
  return m;
}

SupportSet SupportSet::from_mask(std::uint64_t mask) {
  std::vector<std::size_t> c;
  while (mask) {
    c.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return SupportSet(std::move(c));
}

LinearCode::LinearCode(GFMatrix g, GFMatrix h, std::vector<std::size_t> pivots)
    : generator_(std::move(g)),
      parity_(std::move(h)),
      pivots_(std::move(pivots)),
      d_cache_(std::make_shared<std::atomic<std::int64_t>>(-1)) {}

LinearCode LinearCode::from_generator(const GFMatrix& generator) {
  if (generator.cols() == 0) fail(Errc::DimensionMismatch, "generator has no columns");
  if (generator.is_zero()) fail(Errc::ZeroMatrix, "generator matrix is zero");
  EchelonForm g = rref(generator);
  GFMatrix h = rref(kernel_basis(g.matrix)).matrix;
  return LinearCode(std::move(g.matrix), std::move(h), std::move(g.pivots));
}

LinearCode LinearCode::from_parity(const GFMatrix& parity_check, bool allow_zero) {
  if (parity_check.cols() == 0) fail(Errc::DimensionMismatch, "parity-check matrix has no columns");
  if (!allow_zero && parity_check.is_zero()) fail(Errc::ZeroMatrix, "parity-check matrix is zero");
  GFMatrix h = rref(parity_check).matrix;
  EchelonForm g = rref(kernel_basis(h));
  if (g.rank() == 0) fail(Errc::RangeError, "parity-check matrix has full column rank; code is {0}");
  return LinearCode(std::move(g.matrix), std::move(h), std::move(g.pivots));
}

std::optional<std::size_t> LinearCode::cached_distance() const noexcept {
  const auto v = d_cache_->load(std::memory_order_relaxed);
  if (v < 0) return std::nullopt;
  return static_cast<std::size_t>(v);
}

void LinearCode::cache_distance(std::size_t d) const noexcept {
  d_cache_->store(static_cast<std::int64_t>(d), std::memory_order_relaxed);
}

std::vector<FieldElement> LinearCode::encode(std::span<const FieldElement> message) const {
  if (message.size() != k()) fail(Errc::DimensionMismatch, "message length must equal k");
  std::vector<FieldElement> out(n());
  for (std::size_t i = 0; i < k(); ++i) axpy(field(), out, message[i], generator_.row(i));
  return out;
}

bool LinearCode::contains(std::span<const FieldElement> word) const {
  if (word.size() != n()) return false;
  for (std::size_t i = 0; i < parity_.rows(); ++i)
    if (!dot(field(), parity_.row(i), word).is_zero()) return false;
  return true;
}

bool operator==(const LinearCode& a, const LinearCode& b) noexcept { return a.generator_ == b.generator_; }

LinearCode dual(const LinearCode& c) {
  if (c.k() == c.n()) fail(Errc::RangeError, "dual of the full space is {0}");
  return LinearCode::from_generator(c.parity_check());
}

namespace {

std::uint64_t message_count(const LinearCode& c, std::uint64_t budget) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < c.k(); ++i) {
    if (total > budget / c.field().q()) {
      fail(Errc::BudgetExceeded, "q^k = " + std::to_string(c.field().q()) + "^" + std::to_string(c.k()) +
                                     " exceeds enumeration budget " + std::to_string(budget));
    }
    total *= c.field().q();
  }
  return total;
}

// Binary codes up to length 64: Gray-code walk over all nonzero messages.
template <typename Visit>
void walk_binary(const LinearCode& c, Visit&& visit) {
  std::vector<std::uint64_t> rows(c.k());
  for (std::size_t i = 0; i < c.k(); ++i) rows[i] = SupportSet::of_vector(c.generator().row(i)).mask();
  std::uint64_t word = 0;
  const std::uint64_t total = std::uint64_t{1} << c.k();
  for (std::uint64_t i = 1; i < total; ++i) {
    word ^= rows[static_cast<std::size_t>(std::countr_zero(i))];
    if (!visit(word)) return;
  }
}

bool packed_binary(const LinearCode& c) { return c.field().q() == 2 && c.n() <= 64; }

}  // namespace

void for_each_projective_codeword(const LinearCode& c,
                                  const std::function<bool(std::span<const FieldElement>)>& visit) {
  const FieldSpec& f = c.field();
  const std::size_t k = c.k();
  const std::size_t n = c.n();
  const std::uint32_t q = f.q();
  // partial[level] holds the sum of rows 0..level-1 with the chosen coefficients.
  std::vector<std::vector<FieldElement>> partial(k + 1, std::vector<FieldElement>(n));
  std::vector<std::uint32_t> coef(k, 0);
  std::vector<bool> started(k + 1, false);
  std::size_t level = 0;
  coef[0] = 0;
  bool stop = false;
  // Iterative DFS; coef[level] is the next coefficient to try at `level`.
  while (!stop) {
    if (level == k) {
      if (started[k] && !visit(partial[k])) stop = true;
      --level;
      continue;
    }
    const std::uint32_t limit = started[level] ? q : 2;
    if (coef[level] >= limit) {
      coef[level] = 0;
      if (level == 0) break;
      --level;
      continue;
    }
    const FieldElement a{coef[level]++};
    auto& next = partial[level + 1];
    std::copy(partial[level].begin(), partial[level].end(), next.begin());
    axpy(f, next, a, c.generator().row(level));
    started[level + 1] = started[level] || !a.is_zero();
    ++level;
    if (level < k) coef[level] = 0;
  }
}

namespace {

// Number of column subsets of size <= s_max, saturating at `limit`.
std::uint64_t subset_count(std::size_t n, std::size_t s_max, std::uint64_t limit) {
  std::uint64_t total = 0, binom = 1;
  for (std::size_t s = 1; s <= s_max; ++s) {
    binom = binom * (n - s + 1) / s;
    total += binom;
    if (total > limit || binom > limit) return limit + 1;
  }
  return total;
}

// Smallest s <= s_max such that some s columns of H are linearly dependent.
std::optional<std::size_t> dependent_columns(const LinearCode& c, std::size_t s_max) {
  const GFMatrix& h = c.parity_check();
  const std::size_t n = c.n();
  for (std::size_t s = 1; s <= std::min(s_max, n); ++s) {
    std::vector<std::size_t> pick(s);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      if (h.rows() == 0 || rank(h.select_columns(pick)) < s) return s;
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == n - s + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

enum class DistanceMethod { Messages, Columns };

// Message enumeration costs about q^(k-1) n, the column test about
// sum_{s <= n-k+1} C(n, s) (n-k) s; both must fit in `budget`.
DistanceMethod pick_method(const LinearCode& c, std::size_t s_max, std::uint64_t budget) {
  const std::uint64_t subsets = subset_count(c.n(), s_max, budget);
  std::optional<std::uint64_t> msgs;
  try {
    msgs = message_count(c, budget);
  } catch (const Error&) {
    if (subsets > budget) throw;
    return DistanceMethod::Columns;
  }
  if (subsets > budget || packed_binary(c)) return DistanceMethod::Messages;
  const double msg_cost = static_cast<double>(*msgs) / (c.field().q() - 1) * static_cast<double>(c.n());
  const double col_cost = static_cast<double>(subsets) * static_cast<double>((c.n() - c.k()) * s_max + 1);
  return col_cost < msg_cost ? DistanceMethod::Columns : DistanceMethod::Messages;
}

}  // namespace

std::size_t min_distance(const LinearCode& c, std::uint64_t budget) {
  if (auto d = c.cached_distance()) return *d;
  std::size_t best = c.n();
  if (c.k() == c.n()) {
    best = 1;
  } else if (pick_method(c, c.n() - c.k() + 1, budget) == DistanceMethod::Columns) {
    best = dependent_columns(c, c.n() - c.k() + 1).value_or(c.n());
  } else if (packed_binary(c)) {
    walk_binary(c, [&](std::uint64_t w) {
      best = std::min<std::size_t>(best, static_cast<std::size_t>(std::popcount(w)));
      return best > 1;
    });
  } else {
    for_each_projective_codeword(c, [&](std::span<const FieldElement> w) {
      best = std::min(best, weight(w));
      return best > 1;
    });
  }
  c.cache_distance(best);
  return best;
}

bool distance_at_least(const LinearCode& c, std::size_t threshold, std::uint64_t budget) {
  if (auto d = c.cached_distance()) return *d >= threshold;
  if (threshold <= 1) return true;
  if (c.k() == c.n()) return false;
  const std::size_t s_max = std::min(threshold - 1, c.n() - c.k() + 1);
  if (pick_method(c, s_max, budget) == DistanceMethod::Columns) return !dependent_columns(c, s_max).has_value();
  bool ok = true;
  if (packed_binary(c)) {
    walk_binary(c, [&](std::uint64_t w) {
      ok = static_cast<std::size_t>(std::popcount(w)) >= threshold;
      return ok;
    });
  } else {
    for_each_projective_codeword(c, [&](std::span<const FieldElement> w) {
      ok = weight(w) >= threshold;
      return ok;
    });
  }
  return ok;
}

DistanceEstimate min_distance_upper_bound(const LinearCode& c, std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(c.n());
  std::iota(perm.begin(), perm.end(), 0);
  DistanceEstimate est{c.n() - c.k() + 1, false};
  for (std::size_t s = 0; s < samples; ++s) {
    std::shuffle(perm.begin(), perm.end(), rng);
    const EchelonForm ef = rref(c.generator().select_columns(perm));
    for (std::size_t i = 0; i < ef.rank(); ++i) est.upper_bound = std::min(est.upper_bound, weight(ef.matrix.row(i)));
  }
  if (auto d = c.cached_distance()) est = {*d, true};
  return est;
}

std::map<std::size_t, std::uint64_t> weight_distribution(const LinearCode& c, std::uint64_t budget) {
  message_count(c, budget);
  std::map<std::size_t, std::uint64_t> out{{0, 1}};
  const std::uint64_t scale = c.field().q() - 1;
  if (packed_binary(c)) {
    walk_binary(c, [&](std::uint64_t w) {
      ++out[static_cast<std::size_t>(std::popcount(w))];
      return true;
    });
  } else {
    for_each_projective_codeword(c, [&](std::span<const FieldElement> w) {
      out[weight(w)] += scale;
      return true;
    });
  }
  return out;
}

namespace {

std::vector<std::size_t> complement(std::size_t n, const SupportSet& s) {
  for (auto i : s.coords())
    if (i >= n) fail(Errc::RangeError, "coordinate " + std::to_string(i + 1) + " outside [1, n]");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (!s.contains(i)) keep.push_back(i);
  return keep;
}

}  // namespace

LinearCode puncture(const LinearCode& c, const SupportSet& coords) {
  const auto keep = complement(c.n(), coords);
  if (keep.empty()) fail(Errc::RangeError, "puncturing every coordinate");
  const GFMatrix g = c.generator().select_columns(keep);
  if (g.is_zero()) fail(Errc::RangeError, "punctured code is {0}");
  return LinearCode::from_generator(g);
}

LinearCode puncture(const LinearCode& c, std::size_t s) {
  const std::size_t d = min_distance(c);
  if (s < 1 || s + 1 > d) fail(Errc::RangeError, "puncture needs 1 <= s <= d-1");
  return puncture(c, SupportSet::range(c.n() - s, c.n()));
}

LinearCode shorten(const LinearCode& c, const SupportSet& coords) {
  const auto keep = complement(c.n(), coords);
  if (keep.empty()) fail(Errc::RangeError, "shortening every coordinate");
  // Messages m with m * G_J = 0 give the codewords vanishing on J.
  const GFMatrix pinned = c.generator().select_columns(coords.coords());
  const GFMatrix msgs = kernel_basis(pinned.transpose());
  if (msgs.rows() == 0) fail(Errc::RangeError, "shortened code is {0}");
  const GFMatrix sub = (msgs * c.generator()).select_columns(keep);
  return LinearCode::from_generator(sub);
}

LinearCode shorten(const LinearCode& c, std::size_t s) {
  if (s < 1 || s + 1 > c.k()) fail(Errc::RangeError, "shorten needs 1 <= s <= k-1");
  return shorten(c, SupportSet::range(c.n() - s, c.n()));
}

LinearCode permute(const LinearCode& c, std::span<const std::size_t> order) {
  std::vector<std::size_t> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i || sorted.size() != c.n()) fail(Errc::RangeError, "not a permutation of [n]");
  LinearCode out = LinearCode::from_generator(c.generator().select_columns(order));
  if (auto d = c.cached_distance()) out.cache_distance(*d);
  return out;
}

LinearCode leading_subcode(const LinearCode& c, std::size_t dim) {
  if (dim < 1 || dim > c.k()) fail(Errc::RangeError, "subcode dimension outside [1, k]");
  std::vector<std::size_t> rows(dim);
  std::iota(rows.begin(), rows.end(), 0);
  return LinearCode::from_generator(c.generator().select_rows(rows));
}

std::size_t singleton_defect(const LinearCode& c, std::uint64_t budget) {
  return c.n() - c.k() + 1 - min_distance(c, budget);
}

Classification classify(const LinearCode& c, std::uint64_t budget) {
  Classification out;
  out.defect = singleton_defect(c, budget);
  out.kind = out.defect == 0 ? CodeClass::MDS : out.defect == 1 ? CodeClass::AMDS : CodeClass::Other;
  out.trivial = c.k() <= 1 || c.k() + 1 >= c.n();
  return out;
}

std::string to_string(CodeClass k) {
  switch (k) {
    case CodeClass::MDS: return "MDS";
    case CodeClass::AMDS: return "AMDS";
    case CodeClass::Other: return "other";
  }
  return "other";
}

}  // namespace lrclab
