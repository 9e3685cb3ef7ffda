#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwe/code.hpp"

namespace cwe {

enum class ComputeMethod { Brute, Formula, Both };

std::string method_name(ComputeMethod m);
ComputeMethod method_from_name(const std::string& name);

/// Everything one compute run reports. Term order is lexicographically
/// descending composition; weights ascend. elapsed_ms is metadata and the
/// only field excluded from golden comparisons.
struct RunReport {
  std::int64_t p = 0;
  int m = 0;
  std::int64_t d = 1;
  CodeVariant variant = CodeVariant::CD;
  std::int64_t length = 0;
  int dimension = 0;  // log_p of the distinct-codeword count, as measured
  ComputeMethod method = ComputeMethod::Both;
  std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>> cwe;
  std::vector<std::pair<std::int64_t, std::int64_t>> weight_distribution;
  std::optional<bool> match;  // present iff method == Both
  std::int64_t elapsed_ms = 0;
  std::vector<std::int32_t> modulus;

  bool operator==(const RunReport&) const = default;
};

RunReport build_report(const FieldContext& ctx, const CodeSpec& spec,
                       const CompleteWeightEnumerator& cwe, ComputeMethod method,
                       std::optional<bool> match, std::int64_t elapsed_ms);

std::string render_text(const RunReport& r);
std::string render_json(const RunReport& r);
std::string render_latex(const RunReport& r);
RunReport parse_report_json(const std::string& text);

/// "w0^80 + 90 w0^32 w1^24 w2^24 + ..." (the empty monomial renders as 1).
std::string render_cwe_monomials(
    const std::vector<std::pair<std::vector<std::int64_t>, std::int64_t>>& terms);

/// "1 + 90 z^48 + 80 z^54 + 72 z^60".
std::string render_weight_enumerator(
    const std::vector<std::pair<std::int64_t, std::int64_t>>& wd);

/// Per-composition differences between two enumerators, one line each.
std::string render_term_diff(const CompleteWeightEnumerator& brute,
                             const CompleteWeightEnumerator& formula);

std::string render_table_text(const WeightDistribution& wd);
std::string render_table_csv(const WeightDistribution& wd);
std::string render_table_latex(const WeightDistribution& wd);

}  // namespace cwe
