#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "lrclab/field.hpp"

namespace lrclab::oracle {

Grid grid(const GFMatrix& m) {
  Grid out(m.rows(), std::vector<std::uint32_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j).value;
  return out;
}

PolyField::PolyField(std::uint32_t q) : q_(q) {
  std::uint32_t p = 0;
  for (std::uint32_t c = 2; c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  std::uint32_t m = 0, t = q;
  while (t % p == 0) {
    t /= p;
    ++m;
  }
  if (t != 1) throw std::invalid_argument("not a prime power");
  p_ = p;
  m_ = m;
  if (m > 1) {
    modulus_ = published_modulus(p, m);
    if (modulus_.size() != m + 1) throw std::invalid_argument("no published modulus");
  }
}

std::vector<std::uint32_t> PolyField::digits(std::uint32_t a) const {
  std::vector<std::uint32_t> d(m_);
  for (auto& x : d) {
    x = a % p_;
    a /= p_;
  }
  return d;
}

std::uint32_t PolyField::pack(const std::vector<std::uint32_t>& d) const {
  std::uint32_t v = 0;
  for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
  return v;
}

std::uint32_t PolyField::add(std::uint32_t a, std::uint32_t b) const {
  auto x = digits(a), y = digits(b);
  for (std::size_t i = 0; i < m_; ++i) x[i] = (x[i] + y[i]) % p_;
  return pack(x);
}

std::uint32_t PolyField::neg(std::uint32_t a) const {
  auto x = digits(a);
  for (auto& v : x) v = (p_ - v) % p_;
  return pack(x);
}

std::uint32_t PolyField::mul(std::uint32_t a, std::uint32_t b) const {
  if (m_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  const auto x = digits(a), y = digits(b);
  std::vector<std::uint32_t> prod(2 * m_ - 1, 0);
  for (std::size_t i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  // Reduce from the top: x^deg = -(c_0 + ... + c_{m-1} x^{m-1}) x^{deg-m}.
  for (std::size_t deg = prod.size(); deg-- > m_;) {
    const std::uint32_t lead = prod[deg];
    if (lead == 0) continue;
    prod[deg] = 0;
    for (std::size_t i = 0; i < m_; ++i)
      prod[deg - m_ + i] = (prod[deg - m_ + i] + (p_ - lead) * modulus_[i]) % p_;
  }
  prod.resize(m_);
  return pack(prod);
}

std::uint32_t PolyField::inv(std::uint32_t a) const {
  for (std::uint32_t b = 1; b < q_; ++b)
    if (mul(a, b) == 1) return b;
  throw std::domain_error("zero has no inverse");
}

std::uint64_t gaussian_binomial(std::uint64_t q, std::uint64_t n, std::uint64_t k) {
  // [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<std::vector<std::uint64_t>> t(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (std::uint64_t i = 0; i <= n; ++i) t[i][0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    std::uint64_t qj = 1;
    for (std::uint64_t j = 1; j <= std::min(i, k); ++j) {
      qj *= q;
      t[i][j] = t[i - 1][j - 1] + qj * t[i - 1][j];
    }
  }
  return t[n][k];
}

namespace {

// In-place reduced echelon form; returns pivot columns.
std::vector<std::size_t> reduce(const PolyField& f, Grid& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][c] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const std::uint32_t s = f.inv(m[row][c]);
    for (auto& v : m[row]) v = f.mul(v, s);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const std::uint32_t factor = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[row][j]));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

Grid columns_of(const Grid& g, const std::vector<std::size_t>& cols) {
  Grid out(g.size(), std::vector<std::uint32_t>(cols.size()));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out[i][j] = g[i][cols[j]];
  return out;
}

// Visits every size-s subset of [0, n) in lexicographic order until `visit` returns true.
bool any_subset(std::size_t n, std::size_t s, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> pick(s);
  for (std::size_t i = 0; i < s; ++i) pick[i] = i;
  if (s > n) return false;
  while (true) {
    if (visit(pick)) return true;
    std::size_t i = s;
    while (i > 0 && pick[i - 1] == n - s + i - 1) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::size_t rank(const PolyField& f, Grid m) { return reduce(f, m).size(); }

Grid kernel(const PolyField& f, const Grid& m, std::size_t cols) {
  Grid r = m;
  const auto pivots = reduce(f, r);
  Grid out;
  for (std::size_t c = 0; c < cols; ++c) {
    if (std::find(pivots.begin(), pivots.end(), c) != pivots.end()) continue;
    std::vector<std::uint32_t> x(cols, 0);
    x[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(r[i][c]);
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t distance_by_messages(const PolyField& f, const Grid& g) {
  const std::size_t k = g.size(), n = g.at(0).size();
  std::vector<std::uint32_t> msg(k, 0);
  std::size_t best = n + 1;
  while (true) {
    std::size_t i = 0;
    while (i < k && ++msg[i] == f.q()) msg[i++] = 0;
    if (i == k) break;
    std::size_t w = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::uint32_t acc = 0;
      for (std::size_t t = 0; t < k; ++t) acc = f.add(acc, f.mul(msg[t], g[t][j]));
      w += acc != 0;
    }
    best = std::min(best, w);
  }
  return best;
}

std::size_t distance_by_columns(const PolyField& f, const Grid& g) {
  const std::size_t n = g.at(0).size();
  const Grid h = kernel(f, g, n);
  if (h.empty()) return 1;
  for (std::size_t s = 1; s <= n; ++s)
    if (any_subset(n, s, [&](const std::vector<std::size_t>& pick) { return rank(f, columns_of(h, pick)) < s; }))
      return s;
  return n + 1;
}

std::optional<std::size_t> locality(const PolyField& f, const Grid& g) {
  const std::size_t n = g.at(0).size();
  std::size_t worst = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) others.push_back(j);
    std::optional<std::size_t> best;
    for (std::size_t s = 0; s <= others.size() && !best; ++s) {
      const bool hit = any_subset(others.size(), s, [&](const std::vector<std::size_t>& pick) {
        std::vector<std::size_t> cols;
        for (auto p : pick) cols.push_back(others[p]);
        const std::size_t base = cols.empty() ? 0 : rank(f, columns_of(g, cols));
        cols.push_back(i);
        return rank(f, columns_of(g, cols)) == base;
      });
      if (hit) best = s;
    }
    if (!best) return std::nullopt;
    worst = std::max(worst, *best);
  }
  return worst;
}

std::int64_t singleton_rhs(std::int64_t n, std::int64_t k, std::int64_t r) { return n - k - (k + r - 1) / r + 2; }

bool in_dual(const PolyField& f, const Grid& g, const std::vector<std::uint32_t>& word) {
  for (const auto& row : g) {
    std::uint32_t acc = 0;
    for (std::size_t j = 0; j < word.size(); ++j) acc = f.add(acc, f.mul(row[j], word[j]));
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace lrclab::oracle
