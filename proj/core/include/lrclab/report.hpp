#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lrclab/bounds.hpp"
#include "lrclab/search.hpp"
#include "lrclab/transform.hpp"

namespace lrclab {

/// Everything `analyze` prints about one code.
struct AnalyzeReport {
  OptimalityReport optimality;
  LocalityProfile profile;
  std::optional<NormalForm> normal_form;  // absent when the dual code is {0}
  std::optional<std::vector<SupportSet>> disjoint_partition;
};

/// Computes the true locality; a given `claimed_r` is cross-checked against it.
AnalyzeReport analyze(const LinearCode& c, std::optional<std::size_t> claimed_r = std::nullopt);

/// Exact rendering: "a" or "a/b".
std::string rational_string(const Rational& x);

// JSON documents, pretty-printed with a trailing newline. Keys appear in a
// fixed order, so equal inputs give byte-identical output.
std::string json_analyze(const AnalyzeReport& r);
std::string json_locality(const LocalityProfile& p);
std::string json_normal_form(const NormalForm& nf);
std::string json_derivation(const DerivationReport& r);
std::string json_pipeline(const PipelineReport& r);
std::string json_propagation(const PropagationReport& r);
std::string json_reduction(const ReductionReport& r);
std::string json_bounds(const std::vector<BoundReport>& rows);
std::string json_search(const SearchOutcome& o);

/// Plain-text table: name | kind | value | conditions | source.
std::string bound_table(const std::vector<BoundReport>& rows);

}  // namespace lrclab
