#include "lrclab/bounds.hpp"

#include <algorithm>

#include "lrclab/error.hpp"

namespace lrclab {

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::CertifiedFinite: return "certified_finite";
    case BoundKind::AsymptoticAdvisory: return "asymptotic_advisory";
    case BoundKind::Nonexistence: return "nonexistence";
  }
  return "asymptotic_advisory";
}

namespace {

std::string rational_text(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

}  // namespace

std::string to_string(const Growth& g) {
  std::string out = "O(";
  const bool unit = g.coefficient == Rational(1);
  if (g.base == "1" || g.exponent == Rational(0)) return out + rational_text(g.coefficient) + ")";
  if (!unit) out += rational_text(g.coefficient) + " · ";
  out += g.base;
  if (g.exponent != Rational(1)) out += "^(" + rational_text(g.exponent) + ")";
  return out + ")";
}

BigInt hamming_bound(std::int64_t q, std::int64_t n, std::int64_t d) {
  if (q < 2 || d < 1 || d > n) fail(Errc::RangeError, "hamming bound needs q >= 2 and 1 <= d <= n");
  const std::int64_t radius = (d - 1) / 2;
  BigInt ball = 0, binom = 1, power = 1;
  for (std::int64_t i = 0; i <= radius; ++i) {
    if (i > 0) {
      binom = binom * (n - i + 1) / i;
      power *= (q - 1);
    }
    ball += binom * power;
  }
  BigInt space = 1;
  for (std::int64_t i = 0; i < n; ++i) space *= q;
  return space / ball;
}

std::int64_t griesmer_bound(std::int64_t q, std::int64_t k, std::int64_t d) {
  if (q < 2 || k < 1 || d < 1) fail(Errc::RangeError, "griesmer bound needs q >= 2, k >= 1, d >= 1");
  std::int64_t total = 0, power = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    if (power >= d) return total + (k - i);  // every remaining term is 1
    total += ceil_div(d, power);
    power *= q;
  }
  return total;
}

std::int64_t singleton_type_max_d(std::int64_t n, std::int64_t k, std::int64_t r) {
  if (r < 1 || k < 1 || k > n) fail(Errc::RangeError, "need r >= 1 and 1 <= k <= n");
  return n - k - ceil_div(k, r) + 2;
}

std::int64_t residual_distance_cap(std::int64_t q) { return 2 * q; }

namespace {

BoundReport certified_strict(std::string name, std::string source, const Rational& x, std::vector<std::string> cond) {
  BoundReport b{std::move(name), std::move(source), BoundKind::CertifiedFinite, BigInt(ceil_of(x) - 1), x, std::nullopt,
                std::move(cond)};
  return b;
}

BoundReport certified_value(std::string name, std::string source, std::int64_t v, std::vector<std::string> cond) {
  return {std::move(name), std::move(source), BoundKind::CertifiedFinite, BigInt(v), std::nullopt, std::nullopt,
          std::move(cond)};
}

BoundReport advisory(std::string name, std::string source, std::string base, Rational exponent,
                     std::vector<std::string> cond, Rational coefficient = Rational(1)) {
  return {std::move(name), std::move(source), BoundKind::AsymptoticAdvisory, std::nullopt, std::nullopt,
          Growth{coefficient, std::move(base), exponent}, std::move(cond)};
}

BoundReport nonexistence(std::string name, std::string source, std::vector<std::string> cond) {
  return {std::move(name), std::move(source), BoundKind::Nonexistence, std::nullopt, std::nullopt, std::nullopt,
          std::move(cond)};
}

const char* kMds = "Main MDS conjecture";

}  // namespace

std::vector<BoundReport> proportional_bound(std::int64_t q, const Rational& lambda, bool assume_mds_conjecture,
                                            std::optional<bool> k_mod_r_is_one) {
  if (q < 2 || lambda <= 0 || lambda >= 1) fail(Errc::RangeError, "proportional bound needs 0 < lambda < 1");
  std::vector<BoundReport> out;
  out.push_back(certified_value("proportional_distance", "distance proportional to length",
                                floor_of(Rational(2 * q) / lambda), {"Singleton-optimal", "d = lambda n"}));
  if (assume_mds_conjecture && k_mod_r_is_one == false)
    out.push_back(advisory("proportional_distance_mds", "distance proportional to length, MDS regime", "q", 1,
                           {kMds, "k != 1 (mod r)", "d = lambda n"}, Rational(1) / lambda));
  return out;
}

BoundReport mds_regime_bound(std::int64_t q, std::int64_t k, std::int64_t r, bool assume_mds_conjecture) {
  if (q < 2 || k < 1 || r < 1) fail(Errc::RangeError, "need q >= 2, k >= 1, r >= 1");
  if (!assume_mds_conjecture) fail(Errc::ConditionUnmet, "bound is conditional on the Main MDS conjecture");
  if (mod_principal(k, r) == mod_principal(1, r))
    fail(Errc::ConditionUnmet, "k = 1 (mod r); elliptic-curve codes show the length can exceed q + O(1) here");
  const Rational x = Rational(q + 1 + k) + Rational(k, r);
  return certified_value("mds_regime", "MDS residual code, k != 1 (mod r)", floor_of(x),
                         {kMds, "k != 1 (mod r)", "Singleton-optimal"});
}

BoundReport window_bound(std::int64_t d, std::int64_t r, std::int64_t s) {
  if (r < 1 || d < 1 || s < 0 || s >= r) fail(Errc::RangeError, "need r >= 1, d >= 1, 0 <= s <= r-1");
  if (!(s + 2 < d && d < r + 2))
    fail(Errc::WindowEmpty, "d = " + std::to_string(d) + " lies outside the window (s+2, r+2) = (" +
                                std::to_string(s + 2) + ", " + std::to_string(r + 2) + ")");
  const Rational x((d + r) * (r - 1 + (d - 2) * r), r - d + 2);
  return certified_strict("window", "distance window s+2 < d < r+2", x,
                          {"Singleton-optimal", "k = -s (mod r)", "s+2 < d < r+2"});
}

AsymptoticBoundInputs asymptotic_inputs(std::int64_t d, std::int64_t r, std::int64_t k_mod_r) {
  if (r < 1) fail(Errc::RangeError, "r must be positive");
  AsymptoticBoundInputs in;
  in.t = mod_brace(d, 4);
  in.epsilon = Rational(mod_brace(k_mod_r, r), r);
  in.d1 = (d - in.t) / 4;
  return in;
}

std::vector<BoundReport> asymptotic_length_bound(std::int64_t q, std::int64_t d, std::int64_t r,
                                                 std::int64_t k_mod_r) {
  if (q < 2 || d < 3 || r < 1) fail(Errc::RangeError, "need q >= 2, d >= 3, r >= 1");
  const auto in = asymptotic_inputs(d, r, k_mod_r);
  std::vector<std::string> cond = {"Singleton-optimal", "r d = o(n)", "hidden (1+o(1)) factor",
                                   "t = " + std::to_string(in.t), "epsilon = " + rational_text(in.epsilon)};
  if (in.d1 == 0) {
    // d - t = 0: the packing argument has radius zero and yields nothing.
    BoundReport none = advisory("length_asymptotic", "Hamming bound on the derived code", "1", 0, cond);
    none.growth.reset();
    none.conditions.push_back("vacuous: d - t = 0");
    return {none};
  }
  const Rational coeff = Rational((r + 1) * (d - 1), 4 * r * (q - 1));
  const std::int64_t shift = in.t <= 2 ? 1 : 2;  // d-1-eps for t in {1,2}, d-2-eps for t in {3,4}
  const Rational local = Rational(4 * r) * (Rational(d - shift) - in.epsilon) / Rational((d - in.t) * (r + 1));
  const Rational global(4 * (d - shift - 1), d - in.t);
  std::vector<BoundReport> out;
  out.push_back(advisory("length_asymptotic_local", "Hamming bound on the derived code", "q", local, cond, coeff));
  out.push_back(advisory("length_asymptotic_global", "Hamming bound, locality-free exponent", "q", global, cond, coeff));
  out.push_back(advisory("length_asymptotic", "minimum of both exponents", "q", std::min(local, global), cond, coeff));
  return out;
}

std::vector<BoundReport> classify_regime(std::int64_t d, std::int64_t r, std::optional<std::int64_t> k_mod_r,
                                         const BoundFlags& flags) {
  if (d < 1 || r < 1) fail(Errc::RangeError, "need d >= 1, r >= 1");
  std::vector<BoundReport> out;
  const bool has_s = k_mod_r.has_value();
  const std::int64_t s = has_s ? mod_principal(-*k_mod_r, r) : -1;
  const auto k_is = [&](std::int64_t modulus, std::int64_t residue) {
    return k_mod_r && r % modulus == 0 && mod_principal(*k_mod_r - residue, modulus) == 0;
  };
  const auto s_in = [&](std::int64_t hi) { return has_s && s <= hi; };
  const auto s_text = [](std::int64_t hi) {
    std::string t = "k = 0";
    for (std::int64_t i = 1; i <= hi; ++i) t += ",-" + std::to_string(i);
    return t + " (mod r)";
  };
  const Rational one(1), two(2), three(3), three_halves(3, 2);

  // Small distances, no divisibility or disjointness constraint.
  if (d == 5) {
    const std::string src = "small-distance table, d = 5";
    if (r == 1) {
      out.push_back(advisory("d5_r1", src, "1", 0, {"Singleton-optimal"}));
      out.push_back(certified_strict("d5_r1_finite", src, Rational(9), {"Singleton-optimal", "r = 1"}));
    }
    if (r == 2 || r == 3) out.push_back(advisory("d5_r23", src, "q", one, {"Singleton-optimal", kMds}));
    if (r >= 4 && s_in(2)) {
      out.push_back(advisory("d5_small_s", src, "r", one, {"Singleton-optimal", s_text(2)}));
      out.push_back(certified_strict("d5_small_s_finite", src, Rational((r + 5) * (4 * r - 1), r - 3),
                                     {"Singleton-optimal", "r >= 4", s_text(2)}));
    }
    if (r >= 4) out.push_back(advisory("d5_large_r", src, "q", two, {"Singleton-optimal", "r = o(n)"}));
  }
  if (d == 6) {
    const std::string src = "small-distance table, d = 6";
    if (r == 1) out.push_back(advisory("d6_r1", src, "q", one, {"Singleton-optimal", kMds}));
    if (r == 2 && k_is(2, 0)) out.push_back(advisory("d6_r2_even", src, "q", one, {"Singleton-optimal", kMds, "k even"}));
    if (r == 2 && k_is(2, 1)) out.push_back(advisory("d6_r2_odd", src, "q", two, {"Singleton-optimal", "k odd"}));
    if (r == 3 || r == 4) out.push_back(advisory("d6_r34", src, "q", two, {"Singleton-optimal"}));
    if (r >= 5 && s_in(3)) {
      out.push_back(advisory("d6_small_s", src, "r", one, {"Singleton-optimal", s_text(3)}));
      out.push_back(certified_strict("d6_small_s_finite", src, Rational((r + 6) * (5 * r - 1), r - 4),
                                     {"Singleton-optimal", "r >= 5", s_text(3)}));
    }
    if (r >= 5)
      out.push_back(advisory("d6_large_r", src, "q", Rational(4 * r - 2, r + 1), {"Singleton-optimal", "r = o(n)"}));
  }
  if (d == 7) {
    const std::string src = "small-distance table, d = 7";
    if (r == 1) out.push_back(advisory("d7_r1", src, "1", 0, {"Singleton-optimal"}));
    if (r == 2) out.push_back(advisory("d7_r2", src, "q", one, {"Singleton-optimal", kMds}));
    if (r == 3 && k_is(3, 0)) out.push_back(advisory("d7_r3_div", src, "q", one, {"Singleton-optimal", kMds, "3 | k"}));
    if (r == 3 && k_mod_r && !k_is(3, 0))
      out.push_back(advisory("d7_r3_nondiv", src, "q", two, {"Singleton-optimal", "3 does not divide k"}));
    if (r == 4 || r == 5) out.push_back(advisory("d7_r45", src, "q", two, {"Singleton-optimal"}));
    if (r >= 6 && s_in(4)) {
      out.push_back(advisory("d7_small_s", src, "r", one, {"Singleton-optimal", s_text(4)}));
      out.push_back(certified_strict("d7_small_s_finite", src, Rational((r + 7) * (6 * r - 1), r - 5),
                                     {"Singleton-optimal", "r >= 6", s_text(4)}));
    }
    if (r >= 6)
      out.push_back(advisory("d7_large_r", src, "q", Rational(4 * r - 2, r + 1), {"Singleton-optimal", "r = o(n)"}));
  }
  if (d == 8) {
    const std::string src = "distance 8 note";
    if (r == 1) out.push_back(advisory("d8_r1", src, "q", one, {"Singleton-optimal", kMds}));
    if (r == 2) out.push_back(advisory("d8_r2", src, "q", two, {"Singleton-optimal"}));
    if (r == 3 && k_mod_r && mod_principal(*k_mod_r + 2, 3) != 0)
      out.push_back(advisory("d8_r3", src, "q", two, {"Singleton-optimal", "k != -2 (mod 3)"}));
  }

  // General window in d.
  if (has_s && s + 2 < d && d < r + 2) out.push_back(window_bound(d, r, s));

  // Divisible length with disjoint recovery sets.
  if (flags.divisible && flags.disjoint_recovery && d >= 5) {
    const std::vector<std::string> base = {"Singleton-optimal", "(r+1) | n", "disjoint recovery sets"};
    auto with = [&](std::initializer_list<std::string> extra) {
      std::vector<std::string> c = base;
      c.insert(c.end(), extra);
      return c;
    };
    const std::string reg = "n = Omega(d r^2)";
    const std::string src4 = "disjoint-set table, r <= 4";
    if (r == 1) {
      if (d % 2 == 0) out.push_back(advisory("r1_even_d", src4, "q", one, with({kMds, "d even"})));
      else out.push_back(advisory("r1_odd_d", src4, "1", 0, with({"d odd"})));
    }
    if (r == 2) {
      if (d % 3 != 0) out.push_back(advisory("r2_d_nondiv3", src4, "q", one, with({kMds, "d != 0 (mod 3)"})));
      if (d % 3 == 0 && k_is(2, 0))
        out.push_back(advisory("r2_d_div3_k_even", src4, "q", one, with({kMds, "d = 0 (mod 3)", "k even"})));
      if (d % 3 == 0) out.push_back(advisory("r2_d_div3", src4, "q", three_halves, with({"d = 0 (mod 3)"})));
    }
    if (r == 3) {
      if (d % 4 == 0) out.push_back(advisory("r3_d0", src4, "q", two, with({"d = 0 (mod 4)"})));
      if (d % 4 == 0 && k_mod_r && mod_principal(*k_mod_r - 1, 3) != 0)
        out.push_back(advisory("r3_d0_k", src4, "q", two, with({"d = 0 (mod 4)", "k != 1 (mod 3)"})));
      if (d % 4 == 1) out.push_back(advisory("r3_d1", src4, "q", one, with({kMds, "d = 1 (mod 4)"})));
      if (d % 4 == 2 || d % 4 == 3) out.push_back(advisory("r3_d23", src4, "q", two, with({"d = 2,3 (mod 4)"})));
      if (d % 4 == 3 && k_is(3, 0))
        out.push_back(advisory("r3_d3_k", src4, "q", one, with({kMds, "d = 3 (mod 4)", "3 | k"})));
    }
    if (r == 4) {
      const auto m = d % 5;
      if (m <= 2) out.push_back(advisory("r4_d012", src4, "q", two, with({"d = 0,1,2 (mod 5)"})));
      else out.push_back(advisory("r4_d34", src4, "q", three, with({"d = 3,4 (mod 5)"})));
    }

    // Residue tables for d = 5, 6, 7 modulo r+1, in the n = Omega(d r^2) regime.
    const auto res = [&](std::int64_t v) { return mod_principal(d - v, r + 1) == 0; };
    if (res(5)) {
      const std::string src = "disjoint-set table, d = 5 (mod r+1)";
      if (r == 1) out.push_back(advisory("res5_r1", src, "1", 0, with({reg})));
      if (r == 2 || r == 3) out.push_back(advisory("res5_r23", src, "q", one, with({reg, kMds})));
      if (r == 4) out.push_back(advisory("res5_r4", src, "q", two, with({reg})));
      if (r >= 4 && s_in(2)) out.push_back(nonexistence("res5_small_s", src, with({reg, s_text(2)})));
    }
    if (res(6)) {
      const std::string src = "disjoint-set table, d = 6 (mod r+1)";
      if (r == 1) out.push_back(advisory("res6_r1", src, "q", one, with({reg, kMds})));
      if (r == 2) out.push_back(advisory("res6_r2", src, "q", three_halves, with({reg})));
      if (r == 2 && k_is(2, 0)) out.push_back(advisory("res6_r2_k_even", src, "q", one, with({reg, kMds, "k even"})));
      if (r == 3 || r == 4) out.push_back(advisory("res6_r34", src, "q", two, with({reg})));
      if (r >= 5 && s_in(3)) out.push_back(nonexistence("res6_small_s", src, with({reg, s_text(3)})));
    }
    if (res(7)) {
      const std::string src = "disjoint-set table, d = 7 (mod r+1)";
      if (r == 1) out.push_back(advisory("res7_r1", src, "1", 0, with({reg})));
      if (r == 2) out.push_back(advisory("res7_r2", src, "q", one, with({reg, kMds})));
      if (r == 3) out.push_back(advisory("res7_r3", src, "q", two, with({reg})));
      if (r == 3 && k_is(3, 0)) out.push_back(advisory("res7_r3_div", src, "q", one, with({reg, kMds, "3 | k"})));
      if (r == 4 || r == 5) out.push_back(advisory("res7_r45", src, "q", two, with({reg})));
    }

    // Propagation down to small residues.
    if (d >= r + 2 && r >= 4) {
      const std::int64_t a = mod_principal(d, r + 1);
      if (a >= 1 && a <= 5)
        out.push_back(advisory("residue_1_to_5", "propagation to residue 5", "q", two,
                               with({reg, "d >= r+2", "[d mod (r+1)] in 1..5"})));
      const std::int64_t t = (a + 2) / 4;
      if (a >= 2 && t >= 1 && 4 * t <= r)
        out.push_back(advisory("residue_4t", "propagation to residue 4t+1", "q", Rational(3) - Rational(1, t),
                               with({reg, "d >= r+2", "d = 4t-i (mod r+1), i in {-1,0,1,2}",
                                     "t = " + std::to_string(t)})));
    }
  }

  if (out.empty())
    fail(Errc::OutOfTable, "no table row covers d = " + std::to_string(d) + ", r = " + std::to_string(r));
  return out;
}

MuValue mu_max_amds_length(std::int64_t r, std::int64_t q) {
  if (q < 2) fail(Errc::RangeError, "q must be at least 2");
  if (r == 2) return {q * q + q + 1, true};
  if (r == 3) return {q * q + q + 2, false};
  fail(Errc::Unsupported, "mu(r, q) is only tabulated for r in {2, 3}");
}

std::vector<BoundReport> evaluate_bounds(const BoundQuery& query) {
  std::vector<BoundReport> out;
  const auto& [q, n, k, d, r, lambda, flags] = query;
  auto attempt = [&](auto&& fn) {
    try {
      fn();
    } catch (const Error&) {
      // a row whose preconditions fail is simply not listed
    }
  };
  if (q && n && d)
    attempt([&] {
      out.push_back(certified_value("hamming", "sphere packing", 0, {"1 <= d <= n"}));
      out.back().value = hamming_bound(*q, *n, *d);
      out.back().name = "hamming";
    });
  if (q && k && d)
    attempt([&] {
      out.push_back(certified_value("griesmer_min_length", "Griesmer", griesmer_bound(*q, *k, *d), {"linear code"}));
    });
  if (n && k && r)
    attempt([&] {
      out.push_back(certified_value("singleton_type_max_d", "Singleton-type bound", singleton_type_max_d(*n, *k, *r),
                                    {"locality r"}));
    });
  if (q)
    out.push_back(certified_value("residual_distance_cap", "Griesmer on the residual code", residual_distance_cap(*q),
                                  {"[n, n-d, >=d] code with k >= 2"}));
  if (q && lambda)
    attempt([&] {
      std::optional<bool> k1;
      if (k && r) k1 = mod_principal(*k - 1, *r) == 0;
      for (auto& b : proportional_bound(*q, *lambda, flags.assume_mds_conjecture, k1)) out.push_back(std::move(b));
    });
  if (q && k && r && flags.assume_mds_conjecture)
    attempt([&] { out.push_back(mds_regime_bound(*q, *k, *r, true)); });
  if (d && r && k)
    attempt([&] { out.push_back(window_bound(*d, *r, mod_principal(-*k, *r))); });
  if (q && d && r && k)
    attempt([&] {
      for (auto& b : asymptotic_length_bound(*q, *d, *r, *k)) out.push_back(std::move(b));
    });
  if (d && r)
    attempt([&] {
      for (auto& b : classify_regime(*d, *r, k, flags))
        if (b.name != "window") out.push_back(std::move(b));
    });
  if (q && r && (*r == 2 || *r == 3)) {
    const auto mu = mu_max_amds_length(*r, *q);
    out.push_back(certified_value("mu_amds_length", "AMDS length", mu.value,
                                  {mu.exact ? "exact" : "upper bound"}));
  }
  return out;
}

}  // namespace lrclab
