#include "lrclab/transform.hpp"

#include <algorithm>
#include <numeric>

#include "lrclab/error.hpp"

namespace lrclab {

namespace {

std::optional<std::size_t> distance_if_affordable(const LinearCode& c) {
  try {
    return min_distance(c);
  } catch (const Error& e) {
    if (e.code() != Errc::BudgetExceeded) throw;
    return std::nullopt;
  }
}

void require_optimal(const LinearCode& c, std::size_t r) {
  const auto rep = is_singleton_optimal(c, r);
  if (!rep.optimal)
    fail(Errc::PreconditionFailed, "code is not Singleton-optimal with locality " + std::to_string(r));
  if (rep.d < 3) fail(Errc::PreconditionFailed, "derivation needs d >= 3");
}

std::vector<std::size_t> prefix(std::size_t count) {
  std::vector<std::size_t> v(count);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

DerivationReport derive_ci(const NormalForm& nf, const std::vector<std::size_t>& rows) {
  const LinearCode& c = nf.code;
  const std::size_t n = c.n();
  DerivationReport rep;
  rep.rows = rows;
  std::sort(rep.rows.begin(), rep.rows.end());
  rep.rows.erase(std::unique(rep.rows.begin(), rep.rows.end()), rep.rows.end());

  std::vector<std::size_t> removed;
  for (std::size_t j = 0; j < n; ++j)
    for (auto i : rep.rows) {
      if (i >= nf.ell()) fail(Errc::RangeError, "row index outside [1, ell]");
      if (!nf.h1.at(i, j).is_zero()) {
        removed.push_back(j);
        break;
      }
    }
  rep.removed = SupportSet(removed);
  if (removed.size() == n) fail(Errc::EmptyResult, "rows I touch every column");

  std::vector<std::size_t> keep_rows, keep_cols;
  const GFMatrix h = nf.stacked();
  for (std::size_t i = 0; i < h.rows(); ++i)
    if (!std::binary_search(rep.rows.begin(), rep.rows.end(), i)) keep_rows.push_back(i);
  for (std::size_t j = 0; j < n; ++j)
    if (!rep.removed.contains(j)) keep_cols.push_back(j);
  const GFMatrix hi = h.select_rows(keep_rows).select_columns(keep_cols);

  const auto sz = static_cast<std::int64_t>(rep.rows.size());
  const auto r = static_cast<std::int64_t>(nf.r);
  rep.n_min = static_cast<std::int64_t>(n) - sz * (r + 1);
  rep.k_min = static_cast<std::int64_t>(c.k()) - r * sz;
  rep.d_min = min_distance(c);
  rep.n_actual = keep_cols.size();
  rep.k_actual = rep.n_actual - rank(hi);
  if (rep.k_actual > 0) {
    rep.result = LinearCode::from_parity(hi, true);
    rep.d_actual = distance_if_affordable(*rep.result);
  }
  rep.contract_holds = static_cast<std::int64_t>(rep.n_actual) >= rep.n_min &&
                       static_cast<std::int64_t>(rep.k_actual) >= rep.k_min &&
                       (!rep.d_actual || *rep.d_actual >= rep.d_min);
  return rep;
}

DerivationReport derive_residual(const LinearCode& c, std::size_t r) {
  require_optimal(c, r);
  const auto k = static_cast<std::int64_t>(c.k());
  const std::int64_t rows = ceil_div(k, static_cast<std::int64_t>(r)) - 2;
  if (rows < 0) fail(Errc::PreconditionFailed, "needs ceil(k/r) >= 2, i.e. r < k");
  const NormalForm nf = build_normal_form(c, r);
  DerivationReport rep = derive_ci(nf, prefix(static_cast<std::size_t>(rows)));
  const std::size_t d = rep.d_min;
  rep.dimension_is_n_minus_d = rep.k_actual + d == rep.n_actual;
  rep.nontrivial = rep.k_actual >= 2 && rep.k_actual + 2 <= rep.n_actual;
  if (rep.k_actual >= 2) rep.residual_cap_holds = d <= 2 * static_cast<std::size_t>(c.field().q());
  return rep;
}

DerivationReport derive_mds(const LinearCode& c, std::size_t r) {
  require_optimal(c, r);
  const auto k = static_cast<std::int64_t>(c.k());
  const std::int64_t rows = ceil_div(k, static_cast<std::int64_t>(r)) - 1;
  const NormalForm nf = build_normal_form(c, r);
  DerivationReport rep = derive_ci(nf, prefix(static_cast<std::size_t>(rows)));
  if (rep.d_actual) rep.mds = rep.n_actual - rep.k_actual + 1 == *rep.d_actual;
  rep.nontrivial = rep.k_actual >= 2 && rep.k_actual + 2 <= rep.n_actual;
  rep.nontrivial_expected = mod_principal(k, static_cast<std::int64_t>(r)) != 1 && rep.d_min >= 3;
  return rep;
}

PipelineReport run_pipeline(const NormalForm& nf) {
  const LinearCode& code = nf.code;
  const FieldSpec& f = code.field();
  PipelineReport p;
  p.n = code.n();
  p.k = code.k();
  p.d = min_distance(code);
  p.r = nf.r;
  p.a = nf.a.size();
  p.b = nf.b.size();
  p.ell = nf.ell();
  p.h = nf.h();
  const GFMatrix h = nf.stacked();
  const std::size_t rows = h.rows();

  // Step 1: A-columns grouped by the H1 row holding their single nonzero.
  std::vector<std::vector<std::size_t>> blocks(p.ell);
  for (auto j : nf.a.coords())
    for (std::size_t i = 0; i < p.ell; ++i)
      if (!nf.h1.at(i, j).is_zero()) blocks[i].push_back(j);
  GFMatrix l1(f, rows, p.a);
  std::size_t col = 0;
  std::vector<std::pair<std::size_t, std::size_t>> spans;  // [begin, end) in L1 per nonempty block
  for (std::size_t i = 0; i < p.ell; ++i) {
    if (blocks[i].empty()) continue;
    const std::size_t begin = col;
    for (auto j : blocks[i]) {
      const FieldElement scale = f.inv(nf.h1.at(i, j));
      for (std::size_t row = 0; row < rows; ++row) l1.set(row, col, f.mul(scale, h.at(row, j)));
      p.columns.push_back(j);
      ++col;
    }
    spans.emplace_back(begin, col);
    p.leaders.push_back(blocks[i].front());
  }
  p.ell1 = spans.size();

  // Step 2: subtract the leader from the rest of its block.
  GFMatrix l3 = l1;
  std::vector<std::size_t> non_leaders;
  for (auto [begin, end] : spans)
    for (std::size_t j = begin + 1; j < end; ++j) {
      for (std::size_t row = 0; row < rows; ++row) l3.set(row, j, f.sub(l3.at(row, j), l3.at(row, begin)));
      non_leaders.push_back(j);
    }

  // Step 3: lower parts of the non-leader columns.
  std::vector<std::size_t> lower(p.h);
  std::iota(lower.begin(), lower.end(), p.ell);
  GFMatrix kmat = l3.select_rows(lower).select_columns(non_leaders);
  p.l1 = l1;
  p.l3 = l3;
  p.kmat = kmat;
  p.ck_n = kmat.cols();
  p.distance_claim = (p.d - 1) / 2 + 1;
  p.vacuous = p.ck_n == 0;
  if (!p.vacuous) {
    p.ck = LinearCode::from_parity(kmat, true);
    p.ck_k = p.ck->k();
    p.ck_d = distance_if_affordable(*p.ck);
    if (p.ck_d) p.distance_claim_holds = *p.ck_d >= p.distance_claim;
    p.ck_dimension_holds = p.ck->k() + p.h >= p.ck_n;
  } else {
    p.ck_dimension_holds = true;
  }

  const auto n = static_cast<std::int64_t>(p.n), k = static_cast<std::int64_t>(p.k),
             d = static_cast<std::int64_t>(p.d), r = static_cast<std::int64_t>(p.r);
  const std::int64_t brace_k = mod_brace(k, r);
  p.s = r - brace_k;
  p.t = mod_brace(d, 4);
  p.epsilon = Rational(brace_k, r);
  p.f = Rational(d, n) - (Rational(2) - Rational(p.s, r)) / n;
  p.g = Rational(static_cast<std::int64_t>(p.ell)) - Rational(n, r + 1);
  const Rational cap = p.f * Rational(r * n, r + 1);
  p.c = cap - p.g;
  p.n_f_identity_holds = p.f * n == Rational(d - 1) - p.epsilon;
  p.g_range_holds = p.g >= 0 && p.g <= cap;
  p.h_equals_c = p.c == Rational(static_cast<std::int64_t>(p.h));
  p.b_bound_holds = Rational(static_cast<std::int64_t>(p.b)) <= Rational(r + 1) * p.g;
  return p;
}

namespace {

CodeParams params_of(const LinearCode& c) {
  CodeParams p{c.n(), c.k(), distance_if_affordable(c), std::nullopt};
  try {
    p.r = locality(c).r;
  } catch (const Error& e) {
    if (e.code() != Errc::NoLocality) throw;
  }
  return p;
}

}  // namespace

PropagationReport propagate_optimal(const LinearCode& c, std::size_t r, std::size_t a) {
  if (a > r + 1) fail(Errc::RangeError, "a must lie in [0, r+1]");
  const auto k = static_cast<std::int64_t>(c.k());
  const auto rr = static_cast<std::int64_t>(r);
  const auto ai = static_cast<std::int64_t>(a);
  if (ceil_div(k, rr) != ceil_div(k - ai, rr))
    fail(Errc::CeilingMismatch, "ceil(k/r) = " + std::to_string(ceil_div(k, rr)) + " but ceil((k-a)/r) = " +
                                    std::to_string(ceil_div(k - ai, rr)));
  const auto d = static_cast<std::int64_t>(min_distance(c));
  if (d - (rr + 1) + ai < 1) fail(Errc::DegenerateDistance, "d - (r+1) + a < 1");
  require_optimal(c, r);

  PropagationReport rep;
  rep.a = a;
  rep.before = {c.n(), c.k(), static_cast<std::size_t>(d), r};
  rep.regime_holds = rr * rr + 2 * rr < static_cast<std::int64_t>(c.n()) - d;

  const auto partition = disjoint_partition(c, r);
  if (!partition) fail(Errc::NoDisjointPartition, "no partition of [n] into recovery sets");
  auto full = std::find_if(partition->begin(), partition->end(), [&](const SupportSet& s) { return s.size() == r + 1; });
  if (full == partition->end()) fail(Errc::NoFullSizeRecoverySet, "partition has no recovery set of size r+1");
  rep.relocated = *full;

  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < c.n(); ++j)
    if (!full->contains(j)) order.push_back(j);
  order.insert(order.end(), full->coords().begin(), full->coords().end());
  LinearCode cur = permute(c, order);

  const std::size_t n = c.n();
  if (a > 0) cur = shorten(cur, SupportSet::range(n - a, n));
  if (r + 1 > a) cur = puncture(cur, SupportSet::range(n - r - 1, n - a));
  const std::size_t target = c.k() - a;
  if (cur.k() < target) fail(Errc::InvariantViolation, "propagated code lost dimension");
  if (cur.k() > target) cur = leading_subcode(cur, target);

  rep.after = params_of(cur);
  rep.slack_after = signed_singleton_slack(static_cast<std::int64_t>(rep.after.n), static_cast<std::int64_t>(rep.after.k),
                                           static_cast<std::int64_t>(rep.after.d.value_or(0)), rr);
  rep.disjoint_after = disjoint_partition(cur, r).has_value();
  rep.optimal_preserved = rep.slack_after == 0 && rep.after.r == r && rep.disjoint_after;
  rep.result = std::move(cur);
  return rep;
}

ReductionReport reduce_distance(const LinearCode& c, std::size_t r) {
  ReductionReport rep;
  const std::size_t d = min_distance(c);
  rep.b = static_cast<std::size_t>(mod_brace(static_cast<std::int64_t>(d), static_cast<std::int64_t>(r + 1)));
  rep.planned_steps = (d - rep.b) / (r + 1);
  rep.before = params_of(c);
  LinearCode cur = c;
  for (std::size_t i = 0; i < rep.planned_steps; ++i) {
    try {
      rep.steps.push_back(propagate_optimal(cur, r, 0));
    } catch (const Error& e) {
      if (e.code() != Errc::NoFullSizeRecoverySet) throw;
      rep.stopped = std::string(errc_name(Errc::RegimeViolated));
      break;
    }
    cur = *rep.steps.back().result;
  }
  rep.completed = rep.steps.size() == rep.planned_steps;
  rep.after = params_of(cur);
  rep.result = std::move(cur);
  return rep;
}

}  // namespace lrclab
