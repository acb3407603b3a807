#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrclab/arith.hpp"
#include "lrclab/lrc.hpp"

namespace lrclab {

struct CodeParams {
  std::size_t n = 0, k = 0;
  std::optional<std::size_t> d;  // absent when the code is {0} or enumeration is out of budget
  std::optional<std::size_t> r;
};

/// Deleting rows I of the normal form and every column touched by those rows in H1.
struct DerivationReport {
  std::vector<std::size_t> rows;  // I, 0-based rows of H1
  SupportSet removed;             // J_I
  std::optional<LinearCode> result;  // absent when the derived code is {0}
  std::int64_t n_min = 0, k_min = 0;
  std::size_t d_min = 0;
  std::size_t n_actual = 0, k_actual = 0;
  std::optional<std::size_t> d_actual;
  bool contract_holds = false;

  // Residual and MDS derivations fill these.
  std::optional<bool> dimension_is_n_minus_d;
  std::optional<bool> nontrivial;
  std::optional<bool> residual_cap_holds;  // d <= 2q
  std::optional<bool> mds;
  std::optional<bool> nontrivial_expected;
};

DerivationReport derive_ci(const NormalForm& nf, const std::vector<std::size_t>& rows);
DerivationReport derive_residual(const LinearCode& c, std::size_t r);
DerivationReport derive_mds(const LinearCode& c, std::size_t r);

struct PipelineReport {
  std::size_t n = 0, k = 0, d = 0, r = 0;
  std::size_t a = 0, b = 0, ell = 0, ell1 = 0, h = 0;
  std::optional<GFMatrix> l1, l3, kmat;
  std::vector<std::size_t> columns;  // A-columns in block order (0-based original indices)
  std::vector<std::size_t> leaders;  // one per nonempty block (0-based original indices)
  std::optional<LinearCode> ck;
  std::optional<std::size_t> ck_k, ck_d;
  std::size_t ck_n = 0;
  std::size_t distance_claim = 0;        // floor((d-1)/2) + 1
  std::optional<bool> distance_claim_holds;  // absent when K has no columns
  bool vacuous = false;
  Rational f, g, c, epsilon;
  std::int64_t s = 0, t = 0;
  bool n_f_identity_holds = false;
  bool g_range_holds = false;
  bool h_equals_c = false;
  bool b_bound_holds = false;
  bool ck_dimension_holds = false;
};

PipelineReport run_pipeline(const NormalForm& nf);

struct PropagationReport {
  std::size_t a = 0;
  CodeParams before, after;
  SupportSet relocated;  // the recovery set moved to the tail (original coordinates)
  std::optional<LinearCode> result;
  std::int64_t slack_after = 0;
  bool disjoint_after = false;
  bool optimal_preserved = false;
  bool regime_holds = false;  // r^2 + 2r < n - d, before the step
};

PropagationReport propagate_optimal(const LinearCode& c, std::size_t r, std::size_t a);

struct ReductionReport {
  std::size_t b = 0;
  std::size_t planned_steps = 0;
  std::vector<PropagationReport> steps;
  std::optional<LinearCode> result;
  CodeParams before, after;
  bool completed = false;
  std::optional<std::string> stopped;  // error category name when iteration stopped early
};

ReductionReport reduce_distance(const LinearCode& c, std::size_t r);

}  // namespace lrclab
