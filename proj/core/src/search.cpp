#include "lrclab/search.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <mutex>
#include <random>
#include <thread>

#include "lrclab/error.hpp"

namespace lrclab {

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::ExhaustedNone: return "exhausted_none";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
  }
  return "exhausted_none";
}

BigInt gaussian_binomial(std::int64_t q, std::int64_t n, std::int64_t k) {
  if (q < 2 || n < 0) fail(Errc::RangeError, "need q >= 2 and n >= 0");
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= BigInt(pow(BigInt(q), static_cast<unsigned>(n - i))) - 1;
    den *= BigInt(pow(BigInt(q), static_cast<unsigned>(i + 1))) - 1;
  }
  return num / den;
}

std::uint64_t enumeration_cap(std::uint64_t fallback) {
  const char* env = std::getenv("LRC_LAB_CAP");
  if (env == nullptr) return fallback;
  std::uint64_t v = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, v);
  if (ec != std::errc() || ptr != end || v == 0) return fallback;
  return v;
}

namespace {

std::uint64_t checked_total(std::uint32_t q, std::size_t n, std::size_t k, std::uint64_t cap) {
  const BigInt total = gaussian_binomial(q, static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
  if (total > cap)
    fail(Errc::CapExceeded, "[" + std::to_string(n) + " choose " + std::to_string(k) + "]_" + std::to_string(q) +
                                " = " + total.str() + " subspaces exceeds cap " + std::to_string(cap));
  return total.convert_to<std::uint64_t>();
}

std::vector<std::vector<std::size_t>> pivot_patterns(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Columns of an RREF generator are coded as integers sum_i value(row i) q^i.
// For a pivot pattern, a non-pivot column j may use only the rows whose pivot
// lies left of j, so its codes are exactly 0 .. q^free(j) - 1.
struct Layout {
  std::vector<std::uint64_t> lo, hi;  // admissible codes per column, [lo, hi)
};

Layout layout_for(std::uint32_t q, std::size_t n, const std::vector<std::size_t>& pivots) {
  Layout l{std::vector<std::uint64_t>(n), std::vector<std::uint64_t>(n)};
  std::size_t row = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (row < pivots.size() && pivots[row] == j) {
      l.lo[j] = ipow(q, row);
      l.hi[j] = l.lo[j] + 1;
      ++row;
    } else {
      l.lo[j] = 0;
      l.hi[j] = ipow(q, row);
    }
  }
  return l;
}

struct ColumnCodec {
  FieldSpec field;
  std::size_t k;
  std::uint64_t size;  // q^k

  [[nodiscard]] std::vector<FieldElement> decode(std::uint64_t v) const {
    std::vector<FieldElement> out(k);
    for (std::size_t i = 0; i < k; ++i) {
      out[i] = FieldElement{static_cast<std::uint32_t>(v % field.q())};
      v /= field.q();
    }
    return out;
  }
  [[nodiscard]] std::uint64_t encode(std::span<const FieldElement> x) const {
    std::uint64_t v = 0;
    for (std::size_t i = k; i-- > 0;) v = v * field.q() + x[i].value;
    return v;
  }
  [[nodiscard]] GFMatrix matrix(std::span<const std::uint64_t> cols) const {
    GFMatrix g(field, k, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const auto col = decode(cols[j]);
      for (std::size_t i = 0; i < k; ++i) g.set(i, j, col[i]);
    }
    return g;
  }
};

void walk_pattern(const ColumnCodec& codec, const Layout& l, std::vector<std::uint64_t>& cols, std::size_t j,
                  const std::function<bool(const GFMatrix&)>& visit, bool& stop) {
  if (stop) return;
  if (j == cols.size()) {
    if (!visit(codec.matrix(cols))) stop = true;
    return;
  }
  for (std::uint64_t v = l.lo[j]; v < l.hi[j] && !stop; ++v) {
    cols[j] = v;
    walk_pattern(codec, l, cols, j + 1, visit, stop);
  }
}

}  // namespace

void enumerate_subspaces(const FieldSpec& field, std::size_t n, std::size_t k,
                         const std::function<bool(const GFMatrix&)>& visit, std::optional<std::uint64_t> cap) {
  if (k == 0 || k > n) fail(Errc::RangeError, "need 1 <= k <= n");
  checked_total(field.q(), n, k, cap.value_or(enumeration_cap()));
  const ColumnCodec codec{field, k, ipow(field.q(), k)};
  bool stop = false;
  std::vector<std::uint64_t> cols(n);
  for (const auto& pattern : pivot_patterns(n, k)) {
    walk_pattern(codec, layout_for(field.q(), n, pattern), cols, 0, visit, stop);
    if (stop) return;
  }
}

namespace {

// Shared tables for the pruned walk.
struct SearchTables {
  ColumnCodec codec;
  std::size_t messages = 0;          // projective messages
  std::vector<std::uint8_t> nonzero;  // [code * messages + m]: message m is nonzero on the column
  std::vector<std::uint64_t> projective;  // column code -> code of its normalized multiple
  std::vector<std::vector<std::uint64_t>> multiples;  // column code -> all nonzero multiples
};

SearchTables make_tables(const FieldSpec& f, std::size_t k) {
  const std::uint64_t size = ipow(f.q(), k);
  SearchTables t{ColumnCodec{f, k, size}, 0, {}, {}, {}};
  std::vector<std::vector<FieldElement>> msgs;
  for (std::uint64_t v = 1; v < size; ++v) {
    const auto m = t.codec.decode(v);
    const auto lead = std::find_if(m.begin(), m.end(), [](FieldElement e) { return !e.is_zero(); });
    if (*lead == f.one()) msgs.push_back(m);
  }
  t.messages = msgs.size();
  if (size * t.messages > (std::uint64_t{1} << 26))
    fail(Errc::BudgetExceeded, "q^k too large for the tabulated search");
  t.nonzero.resize(size * t.messages);
  t.projective.resize(size);
  t.multiples.resize(size);
  for (std::uint64_t v = 0; v < size; ++v) {
    const auto col = t.codec.decode(v);
    for (std::size_t m = 0; m < t.messages; ++m) t.nonzero[v * t.messages + m] = !dot(f, msgs[m], col).is_zero();
    std::uint64_t best = v;
    for (std::uint32_t a = 1; a < f.q(); ++a) {
      std::vector<FieldElement> s(col);
      for (auto& e : s) e = f.mul(FieldElement{a}, e);
      const auto code = t.codec.encode(s);
      if (v != 0) t.multiples[v].push_back(code);
      best = std::min(best, code);
    }
    t.projective[v] = best;
  }
  return t;
}

// Every coordinate lies in a dual codeword of weight <= r+1, i.e. each column
// is a combination of at most r other columns.
bool locality_at_most(const SearchTables& t, std::span<const std::uint64_t> cols, std::size_t r) {
  const std::size_t n = cols.size();
  const FieldSpec& f = t.codec.field;
  const bool char2 = f.p() == 2;  // digits are bit fields and addition is xor
  auto add = [&](std::uint64_t a, std::uint64_t b) {
    if (char2) return a ^ b;
    std::uint64_t out = 0, scale = 1;
    for (std::size_t i = 0; i < t.codec.k; ++i) {
      const auto x = f.add(FieldElement{static_cast<std::uint32_t>(a % f.q())},
                           FieldElement{static_cast<std::uint32_t>(b % f.q())});
      out += x.value * scale;
      scale *= f.q();
      a /= f.q();
      b /= f.q();
    }
    return out;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t target = cols[i];
    if (target == 0 || r == 0) {
      if (target == 0) continue;
      return false;
    }
    bool covered = false;
    if (r == 1) {
      for (std::size_t j = 0; j < n && !covered; ++j)
        covered = j != i && cols[j] != 0 && t.projective[cols[j]] == t.projective[target];
    } else {
      // DFS over subsets j1 < j2 < ... of size <= r with nonzero coefficients.
      std::function<void(std::size_t, std::size_t, std::uint64_t)> dfs = [&](std::size_t from, std::size_t depth,
                                                                               std::uint64_t acc) {
        for (std::size_t j = from; j < n && !covered; ++j) {
          if (j == i || cols[j] == 0) continue;
          for (auto m : t.multiples[cols[j]]) {
            const auto next = add(acc, m);
            if (next == target) {
              covered = true;
              return;
            }
            if (depth + 1 < r) dfs(j + 1, depth + 1, next);
            if (covered) return;
          }
        }
      };
      dfs(0, 0, 0);
    }
    if (!covered) return false;
  }
  return true;
}

struct Shard {
  std::size_t pattern = 0;
  std::optional<std::size_t> column;  // the split column, if any
  std::uint64_t value = 0;
};

struct ShardResult {
  std::uint64_t visited = 0, distance_survivors = 0, locality_survivors = 0;
  std::vector<SearchWitness> witnesses;
};

struct Context {
  const SearchTask& task;
  const SearchTables& tables;
  std::atomic<std::uint64_t> examined{0};
  std::atomic<bool> out_of_budget{false};
};

// Full check of a candidate. Recomputes everything from the generator alone.
std::optional<SearchWitness> verify_candidate(const SearchTask& task, const LinearCode& code) {
  OptimalityReport rep = is_singleton_optimal(code, task.r_target);
  if (!rep.optimal || rep.d != task.d_target) return std::nullopt;
  if (task.require_divisible && code.n() % (task.r_target + 1) != 0) return std::nullopt;
  LocalityProfile profile = locality(code);
  if (task.require_disjoint && !profile.disjoint_partition) return std::nullopt;
  return SearchWitness{code, std::move(profile), rep};
}

class PrunedWalk {
 public:
  PrunedWalk(Context& ctx, Layout layout, ShardResult& out)
      : ctx_(ctx), l_(std::move(layout)), out_(out), n_(l_.lo.size()), m_(ctx.tables.messages) {
    cols_.assign(n_, 0);
    cnt_.assign((n_ + 1) * m_, 0);
    leaves_below_.assign(n_ + 1, 1);
    for (std::size_t j = n_; j-- > 0;) leaves_below_[j] = leaves_below_[j + 1] * (l_.hi[j] - l_.lo[j]);
  }

  void run() { step(0); }

 private:
  // Returns false once the budget is gone.
  bool step(std::size_t j) {
    if (j == n_) return leaf();
    const std::size_t d = ctx_.task.d_target;
    const std::size_t remaining = n_ - 1 - j;
    const std::uint8_t* cur = &cnt_[j * m_];
    std::uint8_t* next = &cnt_[(j + 1) * m_];
    for (std::uint64_t v = l_.lo[j]; v < l_.hi[j]; ++v) {
      const std::uint8_t* nz = &ctx_.tables.nonzero[v * m_];
      bool dead = false;
      for (std::size_t m = 0; m < m_; ++m) {
        next[m] = static_cast<std::uint8_t>(cur[m] + nz[m]);
        dead |= next[m] + remaining < d;
      }
      if (dead) {
        out_.visited += leaves_below_[j + 1];
        continue;
      }
      cols_[j] = v;
      if (!step(j + 1)) return false;
    }
    return true;
  }

  bool leaf() {
    ++out_.visited;
    ++out_.distance_survivors;
    const auto budget = ctx_.task.node_budget;
    if (budget != 0 && ctx_.examined.fetch_add(1) >= budget) {
      ctx_.out_of_budget = true;
      --out_.visited;
      --out_.distance_survivors;
      return false;
    }
    if (ctx_.out_of_budget) return false;
    if (!locality_at_most(ctx_.tables, cols_, ctx_.task.r_target)) return true;
    ++out_.locality_survivors;
    const auto code = LinearCode::from_generator(ctx_.tables.codec.matrix(cols_));
    if (auto w = verify_candidate(ctx_.task, code)) out_.witnesses.push_back(std::move(*w));
    return true;
  }

  Context& ctx_;
  Layout l_;
  ShardResult& out_;
  std::size_t n_, m_;
  std::vector<std::uint64_t> cols_;
  std::vector<std::uint8_t> cnt_;
  std::vector<std::uint64_t> leaves_below_;
};

template <typename Job>
void run_parallel(std::size_t jobs, unsigned workers, Job&& job) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs; i = next++) job(i);
  };
  const unsigned count = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(jobs, 1))));
  if (count == 1) {
    worker();
    return;
  }
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < count; ++w)
    pool.emplace_back([&, w] {
      try {
        worker();
      } catch (...) {
        errors[w] = std::current_exception();
        next = jobs;
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SearchOutcome merge(std::vector<ShardResult>& parts, const SearchTask& task, bool budget_hit) {
  SearchOutcome out;
  for (auto& p : parts) {
    out.subspaces_visited += p.visited;
    out.distance_survivors += p.distance_survivors;
    out.locality_survivors += p.locality_survivors;
    for (auto& w : p.witnesses) {
      if (task.max_witnesses != 0 && out.witnesses.size() >= task.max_witnesses) break;
      out.witnesses.push_back(std::move(w));
    }
  }
  if (!out.witnesses.empty()) out.status = SearchStatus::Found;
  else if (budget_hit) out.status = SearchStatus::BudgetExceeded;
  else out.status = SearchStatus::ExhaustedNone;
  return out;
}

void validate(const SearchTask& task) {
  if (task.k == 0 || task.k > task.n) fail(Errc::RangeError, "need 1 <= k <= n");
  if (task.n > 64) fail(Errc::Unsupported, "search supports n <= 64");
  if (task.r_target == 0) fail(Errc::RangeError, "r must be positive");
}

}  // namespace

SearchOutcome search_singleton_optimal(const SearchTask& task) {
  validate(task);
  const FieldSpec field = FieldSpec::from_order(task.q);

  if (task.mode == SearchMode::Random) {
    std::vector<ShardResult> parts(task.random_count);
    std::atomic<std::uint64_t> examined{0};
    std::atomic<bool> hit{false};
    run_parallel(parts.size(), task.workers, [&](std::size_t i) {
      if (hit) return;
      if (task.node_budget != 0 && examined.fetch_add(1) >= task.node_budget) {
        hit = true;
        return;
      }
      auto& p = parts[i];
      const auto code = random_code(field, task.n, task.k, mix(task.seed + i));
      p.visited = 1;
      if (!distance_at_least(code, task.d_target)) return;
      ++p.distance_survivors;
      try {
        if (locality(code, task.r_target).r > task.r_target) return;
      } catch (const Error& e) {
        if (e.code() == Errc::NoLocality) return;
        throw;
      }
      ++p.locality_survivors;
      if (auto w = verify_candidate(task, code)) p.witnesses.push_back(std::move(*w));
    });
    return merge(parts, task, hit);
  }

  const std::uint64_t total = checked_total(task.q, task.n, task.k, task.cap.value_or(enumeration_cap()));
  const SearchTables tables = make_tables(field, task.k);
  const auto patterns = pivot_patterns(task.n, task.k);

  // Shards: one per pivot pattern, split further on the first column with a free entry.
  std::vector<Shard> shards;
  std::vector<Layout> layouts;
  for (std::size_t p = 0; p < patterns.size(); ++p) {
    layouts.push_back(layout_for(task.q, task.n, patterns[p]));
    const Layout& l = layouts.back();
    std::optional<std::size_t> split;
    for (std::size_t j = 0; j < task.n && !split; ++j)
      if (l.hi[j] - l.lo[j] > 1) split = j;
    if (!split) {
      shards.push_back({p, std::nullopt, 0});
      continue;
    }
    for (std::uint64_t v = l.lo[*split]; v < l.hi[*split]; ++v) shards.push_back({p, split, v});
  }

  Context ctx{task, tables};
  std::vector<ShardResult> parts(shards.size());
  run_parallel(shards.size(), task.workers, [&](std::size_t i) {
    if (ctx.out_of_budget) return;
    Layout l = layouts[shards[i].pattern];
    if (shards[i].column) {
      l.lo[*shards[i].column] = shards[i].value;
      l.hi[*shards[i].column] = shards[i].value + 1;
    }
    PrunedWalk(ctx, std::move(l), parts[i]).run();
  });

  SearchOutcome out = merge(parts, task, ctx.out_of_budget);
  out.certificate = SearchCertificate{"rref-pivot-pattern", BigInt(total), out.subspaces_visited,
                                      out.subspaces_visited == total};
  if (out.status == SearchStatus::ExhaustedNone && !out.certificate->complete)
    fail(Errc::InvariantViolation, "enumeration visited " + std::to_string(out.subspaces_visited) + " of " +
                                       std::to_string(total) + " subspaces");
  return out;
}

LinearCode random_code(const FieldSpec& field, std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k == 0 || k > n) fail(Errc::RangeError, "need 1 <= k <= n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, field.q() - 1);
  while (true) {
    GFMatrix g(field, k, n);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < n; ++j) g.set(i, j, FieldElement{pick(rng)});
    if (rank(g) == k) return LinearCode::from_generator(g);
  }
}

LinearCode evaluation_fixture(std::uint32_t q, std::size_t r, std::size_t k, std::optional<std::size_t> n_opt) {
  const auto unsupported = [&](const std::string& why) -> LinearCode {
    fail(Errc::ParameterUnsupported, "evaluation fixture (q=" + std::to_string(q) + ", r=" + std::to_string(r) +
                                         ", k=" + std::to_string(k) + "): " + why);
  };
  if (r == 0 || k == 0) return unsupported("r and k must be positive");
  const auto pp = factor_prime_power(q);
  if (pp.p == 0) return unsupported("q is not a prime power");
  if ((q - 1) % (r + 1) != 0) return unsupported("r+1 does not divide q-1");
  if (k % r != 0) return unsupported("r does not divide k");
  const std::size_t n = n_opt.value_or(q - 1);
  if (n == 0 || n % (r + 1) != 0 || n > q - 1) return unsupported("n must be a multiple of r+1 and at most q-1");
  const std::size_t groups = k / r;
  if (groups > n / (r + 1)) return unsupported("k/r exceeds the number of cosets");

  FieldSpec f = FieldSpec::from_order(q);
  const FieldElement g = f.generator();
  const FieldElement omega = f.pow(g, (q - 1) / (r + 1));
  std::vector<FieldElement> points;
  for (std::size_t t = 0; t < n / (r + 1); ++t)
    for (std::size_t s = 0; s <= r; ++s) points.push_back(f.mul(f.pow(g, t), f.pow(omega, s)));

  GFMatrix gen(f, k, n);
  std::size_t row = 0;
  for (std::size_t j = 0; j < groups; ++j)
    for (std::size_t i = 0; i < r; ++i, ++row)
      for (std::size_t c = 0; c < n; ++c) gen.set(row, c, f.pow(points[c], i + j * (r + 1)));
  if (rank(gen) != k) return unsupported("evaluation map is not injective");
  LinearCode code = LinearCode::from_generator(gen);

  const auto rep = is_singleton_optimal(code, r);
  if (!rep.optimal)
    return unsupported("result [" + std::to_string(rep.n) + "," + std::to_string(rep.k) + "," + std::to_string(rep.d) +
                       ";" + std::to_string(rep.true_r) + "] is not Singleton-optimal at r = " + std::to_string(r));
  if (!disjoint_partition(code, r)) return unsupported("no disjoint recovery sets");
  return code;
}

}  // namespace lrclab
