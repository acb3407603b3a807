#include "lrclab/lrc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

#include "lrclab/arith.hpp"
#include "lrclab/error.hpp"

namespace lrclab {

namespace {

constexpr double kSupportWorkCap = 5e7;

// A full-support vector in the row span of `basis`, if one exists.
std::optional<std::vector<FieldElement>> full_support_vector(const GFMatrix& basis) {
  const std::size_t dim = basis.rows();
  const std::size_t len = basis.cols();
  if (dim == 0) return std::nullopt;
  for (std::size_t j = 0; j < len; ++j) {
    bool any = false;
    for (std::size_t i = 0; i < dim && !any; ++i) any = !basis.at(i, j).is_zero();
    if (!any) return std::nullopt;
  }
  std::optional<std::vector<FieldElement>> found;
  const LinearCode span = LinearCode::from_generator(basis);
  for_each_projective_codeword(span, [&](std::span<const FieldElement> w) {
    if (weight(w) != len) return true;
    found.emplace(w.begin(), w.end());
    return false;
  });
  return found;
}

double binomial_sum(std::size_t n, std::size_t up_to) {
  double total = 0, term = 1;
  for (std::size_t j = 1; j <= up_to && j <= n; ++j) {
    term = term * static_cast<double>(n - j + 1) / static_cast<double>(j);
    total += term;
  }
  return total;
}

// Subset testing, by increasing size. With stop_at_cover, stops after the
// first size at which every coordinate lies in some support.
std::vector<RecoverySupport> by_subsets(const LinearCode& c, std::size_t max_size, bool stop_at_cover) {
  const std::size_t n = c.n();
  std::vector<RecoverySupport> out;
  std::uint64_t covered = 0;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::size_t s = 1; s <= std::min(max_size, n); ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      const GFMatrix cols = c.generator().select_columns(idx);
      if (auto v = full_support_vector(kernel_basis(cols))) {
        std::vector<FieldElement> word(n);
        for (std::size_t i = 0; i < s; ++i) word[idx[i]] = (*v)[i];
        SupportSet sup(idx);
        covered |= sup.mask();
        out.push_back({std::move(sup), std::move(word)});
      }
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == n - s + pos - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (stop_at_cover && covered == full) break;
  }
  return out;
}

std::vector<RecoverySupport> by_dual_words(const LinearCode& c, std::size_t max_size) {
  std::map<SupportSet, std::vector<FieldElement>> seen;
  for_each_projective_codeword(dual(c), [&](std::span<const FieldElement> w) {
    if (weight(w) <= max_size) seen.try_emplace(SupportSet::of_vector(w), w.begin(), w.end());
    return true;
  });
  std::vector<RecoverySupport> out;
  for (auto& [s, w] : seen) out.push_back({s, w});
  return out;
}

std::vector<RecoverySupport> collect(const LinearCode& c, std::size_t max_size, bool stop_at_cover) {
  if (c.n() > 64) fail(Errc::Unsupported, "locality analysis supports n <= 64");
  if (c.k() == c.n()) return {};
  const double subset_work = binomial_sum(c.n(), max_size) * static_cast<double>(max_size * c.k());
  const double dual_work = std::pow(static_cast<double>(c.field().q()), static_cast<double>(c.n() - c.k())) *
                           static_cast<double>(c.n());
  std::vector<RecoverySupport> out;
  if (dual_work <= subset_work) {
    if (dual_work > kSupportWorkCap * 4) fail(Errc::BudgetExceeded, "dual enumeration too large");
    out = by_dual_words(c, max_size);
  } else {
    if (subset_work > kSupportWorkCap * 4 && !stop_at_cover)
      fail(Errc::BudgetExceeded, "support subset enumeration too large");
    out = by_subsets(c, max_size, stop_at_cover);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.support < y.support; });
  return out;
}

}  // namespace

std::vector<RecoverySupport> recovery_supports(const LinearCode& c, std::size_t max_size) {
  return collect(c, max_size, false);
}

std::optional<std::vector<std::size_t>> exact_cover(std::size_t n, const std::vector<std::uint64_t>& family,
                                                    std::uint64_t node_cap) {
  if (n > 64) fail(Errc::Unsupported, "exact cover supports n <= 64");
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::vector<std::size_t>> containing(n);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::uint64_t m = family[i]; m; m &= m - 1) containing[static_cast<std::size_t>(std::countr_zero(m))].push_back(i);

  std::vector<std::size_t> chosen;
  std::uint64_t nodes = 0;
  auto dfs = [&](auto&& self, std::uint64_t covered) -> bool {
    if (covered == full) return true;
    if (++nodes > node_cap) fail(Errc::SearchBudgetExceeded, "exact cover exceeded node cap");
    const auto col = static_cast<std::size_t>(std::countr_one(covered));
    for (auto i : containing[col]) {
      if (family[i] & covered) continue;
      chosen.push_back(i);
      if (self(self, covered | family[i])) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (dfs(dfs, 0)) return chosen;
  return std::nullopt;
}

LocalityProfile locality(const LinearCode& c, std::optional<std::size_t> r_max, std::uint64_t node_cap) {
  const std::size_t n = c.n();
  if (c.k() == n) fail(Errc::NoLocality, "dual code is {0}");
  const std::size_t cap = r_max.value_or(n - 1);
  auto family = collect(c, cap + 1, true);

  std::vector<std::size_t> best(n, n + 1);
  for (const auto& s : family)
    for (auto i : s.support.coords()) best[i] = std::min(best[i], s.support.size());
  const std::size_t worst = *std::max_element(best.begin(), best.end());
  if (worst > cap + 1) fail(Errc::NoLocality, "no cover by dual supports of size <= " + std::to_string(cap + 1));

  LocalityProfile p;
  p.r = std::max<std::size_t>(1, worst - 1);
  std::erase_if(family, [&](const auto& s) { return s.support.size() > p.r + 1; });
  p.supports = std::move(family);

  std::uint64_t covered = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (covered >> i & 1) continue;
    std::size_t pick = p.supports.size();
    for (std::size_t j = 0; j < p.supports.size(); ++j) {
      const auto& s = p.supports[j].support;
      if (!s.contains(i)) continue;
      if (pick == p.supports.size() || s.size() < p.supports[pick].support.size()) pick = j;
    }
    p.cover_witness.push_back(pick);
    covered |= p.supports[pick].support.mask();
  }

  std::vector<std::uint64_t> masks;
  for (const auto& s : p.supports) {
    masks.push_back(s.support.mask());
    if (s.support.size() == p.r + 1) p.has_full_size_set = true;
  }
  p.disjoint_partition = exact_cover(n, masks, node_cap);
  return p;
}

std::optional<std::vector<SupportSet>> disjoint_partition(const LinearCode& c, std::size_t r, std::uint64_t node_cap) {
  const auto family = recovery_supports(c, r + 1);
  std::vector<std::uint64_t> masks;
  for (const auto& s : family) masks.push_back(s.support.mask());
  auto idx = exact_cover(c.n(), masks, node_cap);
  if (!idx) return std::nullopt;
  std::vector<SupportSet> out;
  for (auto i : *idx) out.push_back(family[i].support);
  return out;
}

std::int64_t signed_singleton_slack(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t r) {
  if (r < 1 || k < 1 || k > n || d < 1) fail(Errc::RangeError, "need r >= 1, 1 <= k <= n, d >= 1");
  return (n - k - ceil_div(k, r) + 2) - d;
}

std::int64_t singleton_slack(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t r) {
  const std::int64_t s = signed_singleton_slack(n, k, d, r);
  if (s < 0)
    fail(Errc::NegativeSlack, "d = " + std::to_string(d) + " exceeds the Singleton-type bound at r = " +
                                  std::to_string(r) + "; the claimed locality is below the true one");
  return s;
}

StandingAssumptions standing_assumptions(std::size_t n, std::size_t k, std::size_t d, std::size_t r) {
  return {r < k, n >= 2 * (r + 1), d >= 3, n % (r + 1) == 0};
}

OptimalityReport is_singleton_optimal(const LinearCode& c, std::size_t claimed_r) {
  OptimalityReport rep;
  rep.n = c.n();
  rep.k = c.k();
  rep.d = min_distance(c);
  rep.claimed_r = claimed_r;
  rep.true_r = locality(c).r;
  const auto n = static_cast<std::int64_t>(rep.n), k = static_cast<std::int64_t>(rep.k),
             d = static_cast<std::int64_t>(rep.d);
  rep.slack_claimed = signed_singleton_slack(n, k, d, static_cast<std::int64_t>(claimed_r));
  rep.slack_true = singleton_slack(n, k, d, static_cast<std::int64_t>(rep.true_r));
  rep.optimal = rep.slack_true == 0 && claimed_r == rep.true_r;
  rep.assumptions = standing_assumptions(rep.n, rep.k, rep.d, rep.true_r);
  return rep;
}

std::optional<std::int64_t> solve_k(std::int64_t n, std::int64_t d, std::int64_t r) {
  if (n < 1 || d < 1 || r < 1) fail(Errc::RangeError, "solve_k needs n, d, r >= 1");
  // n - k - ceil(k/r) + 2 strictly decreases in k.
  for (std::int64_t k = 1; k <= n; ++k) {
    const std::int64_t bound = n - k - ceil_div(k, r) + 2;
    if (bound == d) return k;
    if (bound < d) break;
  }
  return std::nullopt;
}

bool divisibility_identity(std::int64_t n, std::int64_t k, std::int64_t d, std::int64_t r) {
  if (r < 1 || n % (r + 1) != 0) fail(Errc::NotDivisible, "(r+1) does not divide n");
  return n - k == n / (r + 1) + d - 2 - floor_div(d - 2, r + 1);
}

NormalForm build_normal_form(const LinearCode& c, std::size_t r) {
  const std::size_t n = c.n();
  const FieldSpec& f = c.field();
  if (c.k() == n) fail(Errc::NoLocality, "dual code is {0}");
  const auto family = recovery_supports(c, r + 1);

  NormalForm nf{c, r, {}, GFMatrix(f, 0, n), GFMatrix(f, 0, n), {}, {}};
  std::uint64_t covered = 0;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  while (covered != full) {
    const auto i = static_cast<std::size_t>(std::countr_one(covered));
    const RecoverySupport* pick = nullptr;
    int pick_gain = -1;
    for (const auto& s : family) {
      if (!s.support.contains(i)) continue;
      const int gain = std::popcount(s.support.mask() & ~covered);
      // family is in lexicographic order, so strict > keeps the smallest on ties
      if (gain > pick_gain) {
        pick = &s;
        pick_gain = gain;
      }
    }
    if (!pick) fail(Errc::NoLocality, "coordinate " + std::to_string(i + 1) + " has no recovery set of size <= r+1");
    nf.supports.push_back(pick->support);
    nf.h1.append_row(pick->dual_word);
    covered |= pick->support.mask();
  }

  GFMatrix basis = nf.h1;
  EchelonForm ef = rref(basis);
  for (std::size_t i = 0; i < c.parity_check().rows() && ef.rank() < n - c.k(); ++i) {
    const auto row = c.parity_check().row(i);
    if (in_row_space(ef, row)) continue;
    nf.h2.append_row(row);
    basis.append_row(row);
    ef = rref(basis);
  }

  std::vector<std::size_t> a, b;
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t nz = 0;
    for (std::size_t i = 0; i < nf.ell(); ++i) nz += !nf.h1.at(i, j).is_zero();
    (nz == 1 ? a : b).push_back(j);
  }
  nf.a = SupportSet(std::move(a));
  nf.b = SupportSet(std::move(b));

  auto check = [](bool ok, const char* what) {
    if (!ok) fail(Errc::InvariantViolation, std::string("normal form: ") + what);
  };
  const std::size_t ell = nf.ell();
  check(ef.rank() == n - c.k() && ell + nf.h() == n - c.k(), "rows do not form a basis of the dual");
  check(c.generator().mul_transpose(basis).is_zero(), "rows are not dual codewords");
  check(n <= ell * (r + 1), "n > ell(r+1)");
  check(nf.a.size() + nf.b.size() == n, "|A| + |B| != n");
  check((r + 1) * ell >= n + nf.b.size(), "(r+1) ell - |B| < n");
  std::uint64_t seen = 0;
  for (const auto& s : nf.supports) {
    check((s.mask() & ~seen) != 0, "support contained in the union of its predecessors");
    seen |= s.mask();
  }
  // k/r < n/(r+1) needs d >= 3; only check when the distance is affordable.
  try {
    if (min_distance(c) >= 3) check(c.k() * (r + 1) < n * r, "k/r >= n/(r+1)");
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
  }
  return nf;
}

FullSizeReport has_full_size_recovery_set(const LinearCode& c, std::size_t r) {
  FullSizeReport rep;
  for (const auto& s : recovery_supports(c, r + 1))
    if (s.support.size() == r + 1) rep.has_full_size_set = true;
  const auto n = static_cast<std::int64_t>(c.n());
  const auto d = static_cast<std::int64_t>(min_distance(c));
  const auto rr = static_cast<std::int64_t>(r);
  rep.regime_holds = rr * rr + 2 * rr < n - d;
  return rep;
}

}  // namespace lrclab
