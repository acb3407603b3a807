#include "lrclab/report.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "json.hpp"

namespace lrclab {

using Json = nlohmann::ordered_json;

AnalyzeReport analyze(const LinearCode& c, std::optional<std::size_t> claimed_r) {
  AnalyzeReport rep;
  rep.profile = locality(c);
  rep.optimality = is_singleton_optimal(c, claimed_r.value_or(rep.profile.r));
  if (c.k() < c.n()) rep.normal_form = build_normal_form(c, rep.profile.r);
  if (rep.profile.disjoint_partition) {
    std::vector<SupportSet> parts;
    for (auto i : *rep.profile.disjoint_partition) parts.push_back(rep.profile.supports[i].support);
    rep.disjoint_partition = std::move(parts);
  }
  return rep;
}

std::string rational_string(const Rational& x) {
  if (x.denominator() == 1) return std::to_string(x.numerator());
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

Json support_json(const SupportSet& s) { return s.one_based(); }

Json matrix_json(const GFMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).value);
    rows.push_back(std::move(row));
  }
  return Json{{"q", m.field().q()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Json one_based(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x + 1);
  return out;
}

template <typename T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json params_json(const CodeParams& p) {
  return Json{{"n", p.n}, {"k", p.k}, {"d", opt(p.d)}, {"r", opt(p.r)}};
}

Json code_json(const LinearCode& c) {
  Json j{{"n", c.n()}, {"k", c.k()}};
  if (auto d = c.cached_distance()) j["d"] = *d;
  j["generator"] = matrix_json(c.generator());
  return j;
}

Json assumptions_json(const StandingAssumptions& a) {
  return Json{{"r_lt_k", a.r_lt_k}, {"n_ge_2r2", a.n_ge_2r2}, {"d_ge_3", a.d_ge_3}, {"divisible", a.divisible}};
}

Json optimality_json(const OptimalityReport& o) {
  return Json{{"n", o.n},
              {"k", o.k},
              {"d", o.d},
              {"claimed_r", o.claimed_r},
              {"true_r", o.true_r},
              {"slack_claimed", o.slack_claimed},
              {"slack_true", o.slack_true},
              {"optimal", o.optimal},
              {"assumptions", assumptions_json(o.assumptions)}};
}

Json locality_json(const LocalityProfile& p) {
  Json supports = Json::array();
  for (const auto& s : p.supports) supports.push_back(support_json(s.support));
  Json j{{"r", p.r}, {"supports", std::move(supports)}, {"cover_witness", p.cover_witness}};
  if (p.disjoint_partition) j["disjoint_partition"] = *p.disjoint_partition;
  else j["disjoint_partition"] = nullptr;
  j["has_full_size_set"] = p.has_full_size_set;
  return j;
}

Json normal_form_json(const NormalForm& nf) {
  Json supports = Json::array();
  for (const auto& s : nf.supports) supports.push_back(support_json(s));
  return Json{{"r", nf.r},
              {"ell", nf.ell()},
              {"h", nf.h()},
              {"supports", std::move(supports)},
              {"a", support_json(nf.a)},
              {"b", support_json(nf.b)},
              {"h1", matrix_json(nf.h1)},
              {"h2", matrix_json(nf.h2)}};
}

Json derivation_json(const DerivationReport& r) {
  Json j{{"rows", one_based(r.rows)},
         {"removed", support_json(r.removed)},
         {"n_min", r.n_min},
         {"k_min", r.k_min},
         {"d_min", r.d_min},
         {"n", r.n_actual},
         {"k", r.k_actual},
         {"d", opt(r.d_actual)},
         {"contract_holds", r.contract_holds}};
  j["dimension_is_n_minus_d"] = opt(r.dimension_is_n_minus_d);
  j["nontrivial"] = opt(r.nontrivial);
  j["residual_cap_holds"] = opt(r.residual_cap_holds);
  j["mds"] = opt(r.mds);
  j["nontrivial_expected"] = opt(r.nontrivial_expected);
  j["result"] = r.result ? code_json(*r.result) : Json(nullptr);
  return j;
}

Json propagation_json(const PropagationReport& r) {
  return Json{{"a", r.a},
              {"before", params_json(r.before)},
              {"after", params_json(r.after)},
              {"relocated", support_json(r.relocated)},
              {"slack_after", r.slack_after},
              {"disjoint_after", r.disjoint_after},
              {"optimal_preserved", r.optimal_preserved},
              {"regime_holds", r.regime_holds},
              {"result", r.result ? code_json(*r.result) : Json(nullptr)}};
}

Json bound_json(const BoundReport& b) {
  Json j{{"name", b.name}, {"kind", to_string(b.kind)}, {"source", b.source}};
  j["value"] = b.value ? big(*b.value) : Json(nullptr);
  j["strict_upper"] = b.strict_upper ? Json(rational_string(*b.strict_upper)) : Json(nullptr);
  if (b.growth)
    j["growth"] = Json{{"coefficient", rational_string(b.growth->coefficient)},
                       {"base", b.growth->base},
                       {"exponent", rational_string(b.growth->exponent)},
                       {"text", to_string(*b.growth)}};
  else
    j["growth"] = nullptr;
  j["conditions"] = b.conditions;
  return j;
}

}  // namespace

std::string json_analyze(const AnalyzeReport& r) {
  const auto& o = r.optimality;
  Json j{{"n", o.n}, {"k", o.k}, {"d", o.d}, {"r", o.true_r}, {"claimed_r", o.claimed_r},
         {"slack", o.slack_true}, {"slack_claimed", o.slack_claimed}, {"optimal", o.optimal}};
  if (r.normal_form) {
    j["ell"] = r.normal_form->ell();
    j["h"] = r.normal_form->h();
    j["a"] = r.normal_form->a.size();
    j["b"] = r.normal_form->b.size();
  } else {
    j["ell"] = 0;
    j["h"] = 0;
    j["a"] = 0;
    j["b"] = 0;
  }
  if (r.disjoint_partition) {
    Json parts = Json::array();
    for (const auto& s : *r.disjoint_partition) parts.push_back(support_json(s));
    j["disjoint_partition"] = std::move(parts);
  } else {
    j["disjoint_partition"] = nullptr;
  }
  j["assumptions"] = assumptions_json(o.assumptions);
  return dump(j);
}

std::string json_locality(const LocalityProfile& p) { return dump(locality_json(p)); }
std::string json_normal_form(const NormalForm& nf) { return dump(normal_form_json(nf)); }
std::string json_derivation(const DerivationReport& r) { return dump(derivation_json(r)); }
std::string json_propagation(const PropagationReport& r) { return dump(propagation_json(r)); }

std::string json_pipeline(const PipelineReport& p) {
  Json j{{"n", p.n}, {"k", p.k}, {"d", p.d}, {"r", p.r}, {"a", p.a}, {"b", p.b},
         {"ell", p.ell}, {"ell1", p.ell1}, {"h", p.h}};
  j["columns"] = one_based(p.columns);
  j["leaders"] = one_based(p.leaders);
  j["ck"] = Json{{"n", p.ck_n}, {"k", opt(p.ck_k)}, {"d", opt(p.ck_d)}};
  j["distance_claim"] = p.distance_claim;
  j["distance_claim_holds"] = opt(p.distance_claim_holds);
  j["vacuous"] = p.vacuous;
  j["f"] = rational_string(p.f);
  j["g"] = rational_string(p.g);
  j["c"] = rational_string(p.c);
  j["epsilon"] = rational_string(p.epsilon);
  j["s"] = p.s;
  j["t"] = p.t;
  j["checks"] = Json{{"n_f_identity", p.n_f_identity_holds},
                     {"g_range", p.g_range_holds},
                     {"h_equals_c", p.h_equals_c},
                     {"b_bound", p.b_bound_holds},
                     {"ck_dimension", p.ck_dimension_holds}};
  if (p.kmat) j["k_matrix"] = matrix_json(*p.kmat);
  return dump(j);
}

std::string json_reduction(const ReductionReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) steps.push_back(propagation_json(s));
  Json j{{"b", r.b},
         {"planned_steps", r.planned_steps},
         {"before", params_json(r.before)},
         {"after", params_json(r.after)},
         {"completed", r.completed},
         {"stopped", opt(r.stopped)},
         {"steps", std::move(steps)}};
  return dump(j);
}

std::string json_bounds(const std::vector<BoundReport>& rows) {
  Json j = Json::array();
  for (const auto& b : rows) j.push_back(bound_json(b));
  return dump(j);
}

std::string json_search(const SearchOutcome& o) {
  Json witnesses = Json::array();
  for (const auto& w : o.witnesses) {
    Json wj = code_json(w.code);
    wj["d"] = w.report.d;
    wj["r"] = w.report.true_r;
    wj["slack"] = w.report.slack_true;
    wj["optimality"] = optimality_json(w.report);
    if (w.profile.disjoint_partition) {
      Json parts = Json::array();
      for (auto i : *w.profile.disjoint_partition) parts.push_back(support_json(w.profile.supports[i].support));
      wj["disjoint_partition"] = std::move(parts);
    } else {
      wj["disjoint_partition"] = nullptr;
    }
    witnesses.push_back(std::move(wj));
  }
  Json j{{"status", to_string(o.status)},
         {"subspaces_visited", o.subspaces_visited},
         {"distance_survivors", o.distance_survivors},
         {"locality_survivors", o.locality_survivors},
         {"witness_count", o.witnesses.size()},
         {"witnesses", std::move(witnesses)}};
  if (o.certificate)
    j["certificate"] = Json{{"scheme", o.certificate->scheme},
                            {"total", big(o.certificate->total)},
                            {"visited", o.certificate->visited},
                            {"complete", o.certificate->complete}};
  else
    j["certificate"] = nullptr;
  return dump(j);
}

std::string bound_table(const std::vector<BoundReport>& rows) {
  std::vector<std::array<std::string, 5>> cells;
  cells.push_back({"name", "kind", "value", "conditions", "source"});
  for (const auto& b : rows) {
    std::string value;
    if (b.strict_upper) value = "n < " + rational_string(*b.strict_upper) + " (n <= " + b.value->str() + ")";
    else if (b.value) value = b.value->str();
    else if (b.growth) value = to_string(*b.growth);
    else if (b.kind == BoundKind::Nonexistence) value = "none";
    else value = "-";
    std::string cond;
    for (const auto& c : b.conditions) cond += (cond.empty() ? "" : "; ") + c;
    cells.push_back({b.name, to_string(b.kind), value, cond, b.source});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& row : cells)
    for (std::size_t i = 0; i < 5; ++i) width[i] = std::max(width[i], row[i].size());
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < 5; ++i) {
      out += row[i];
      if (i + 1 < 5) out += std::string(width[i] - row[i].size(), ' ') + " | ";
    }
    out += '\n';
  }
  return out;
}

}  // namespace lrclab
