#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cwe/errors.hpp"
#include "cwe/field.hpp"

namespace cwe {

enum class CodeVariant { CD, CDb };

std::string variant_name(CodeVariant v);  // "C_D" / "C_Db"

/// Parameters of one code instance. Validates at construction: p an odd
/// prime, m >= 2, d >= 1 with gcd(d, (p^m - 1)/2) = 1.
struct CodeSpec {
  std::int64_t p;
  int m;
  std::int64_t d;
  CodeVariant variant;

  CodeSpec(std::int64_t p, int m, std::int64_t d, CodeVariant variant);
};

/// The defining set {x in F_{p^m}^* : Tr(x^{2d}) = 0}, stored as element
/// indices in enumeration order. Its elements index the code coordinates.
class DefiningSet {
 public:
  std::int64_t length() const { return static_cast<std::int64_t>(indices_.size()); }
  const std::vector<std::int64_t>& indices() const { return indices_; }
  FieldElement element(const FieldContext& ctx, std::int64_t i) const {
    return ctx.from_index(indices_[static_cast<size_t>(i)]);
  }

 private:
  explicit DefiningSet(std::vector<std::int64_t> indices) : indices_(std::move(indices)) {}
  std::vector<std::int64_t> indices_;
  friend DefiningSet build_defining_set(const FieldContext& ctx, const CodeSpec& spec);
};

/// Per-symbol count vector of one codeword: counts[j] coordinates equal w_j.
struct CompositionVector {
  std::vector<std::int64_t> counts;

  std::int64_t sum() const {
    std::int64_t s = 0;
    for (auto c : counts) s += c;
    return s;
  }

  /// Composition of the same codeword with b added to every coordinate.
  CompositionVector shifted(std::int64_t b) const;

  bool operator==(const CompositionVector&) const = default;
  auto operator<=>(const CompositionVector&) const = default;
};

/// Multiset of codeword compositions: composition -> number of codewords.
/// Terms iterate in lexicographically descending composition order, which is
/// the canonical output order everywhere.
class CompleteWeightEnumerator {
 public:
  struct DescendingLex {
    bool operator()(const CompositionVector& a, const CompositionVector& b) const {
      return b.counts < a.counts;
    }
  };
  using TermMap = std::map<CompositionVector, std::int64_t, DescendingLex>;

  explicit CompleteWeightEnumerator(std::int64_t length) : length_(length) {}

  void add(const CompositionVector& composition, std::int64_t multiplicity);
  const TermMap& terms() const { return terms_; }
  std::int64_t length() const { return length_; }
  std::int64_t total() const;  // sum of multiplicities

  /// Multiplicity of the zero codeword's composition (n, 0, ..., 0); this is
  /// the kernel size of the (linear) encoding map.
  std::int64_t zero_codeword_multiplicity() const;

  /// log_p(total / kernel); the exact dimension as measured, never assumed.
  int measured_dimension(std::int64_t p) const;

  bool operator==(const CompleteWeightEnumerator& o) const {
    return length_ == o.length_ && terms_ == o.terms_;
  }

 private:
  std::int64_t length_;
  TermMap terms_;
};

/// Hamming-weight histogram: weight -> codeword count.
struct WeightDistribution {
  std::map<std::int64_t, std::int64_t> entries;
  bool operator==(const WeightDistribution&) const = default;
};

/// Builds D = {x != 0 : Tr(x^{2d}) = 0} in enumeration order. For every d
/// with gcd(d, (p^m-1)/2) = 1 this set has the d = 1 cardinality and yields a
/// code with the d = 1 complete weight enumerator; the set itself may differ
/// from the d = 1 set (it usually does), so only those two facts are
/// asserted, by the test suites.
DefiningSet build_defining_set(const FieldContext& ctx, const CodeSpec& spec);

/// Composition of the codeword (Tr(a d_1)+b, ..., Tr(a d_n)+b), computed by
/// direct counting; the codeword itself is never materialized.
CompositionVector codeword_composition(const FieldContext& ctx, const DefiningSet& D,
                                       const FieldElement& a, std::int64_t b);

/// Exhaustive complete weight enumerator: every a in F_{p^m} (and every b in
/// F_p for C_{D,b}). jobs = 0 uses all hardware threads; the a-sweep is
/// partitioned across workers and partial term maps merge by addition, so the
/// result is independent of scheduling.
CompleteWeightEnumerator brute_force_cwe(const FieldContext& ctx, const CodeSpec& spec,
                                         int jobs = 0);

/// Weight of a composition is n - k_0; aggregates term multiplicities.
WeightDistribution weight_distribution(const CompleteWeightEnumerator& cwe);

/// #{x in F_{p^m} : Tr(x^2) = 0 and Tr(ax) = rho}, zero included, by brute
/// count. Requires a != 0.
std::int64_t count_joint_trace_fiber(const FieldContext& ctx, const FieldElement& a,
                                     std::int64_t rho);

/// #{x in F_{p^m} : Tr(x^2) = 0}, zero included, by brute count.
std::int64_t count_trace_square_zeros(const FieldContext& ctx);

/// Counts of nonzero x classified by the prime-field quadratic character of
/// Tr(x^2). Defined for odd m only.
struct ResidueClassCounts {
  std::int64_t zero;       // Tr(x^2) = 0
  std::int64_t square;     // Tr(x^2) a nonzero square mod p
  std::int64_t nonsquare;  // Tr(x^2) a nonsquare mod p
  bool operator==(const ResidueClassCounts&) const = default;
};

ResidueClassCounts classify_trace_square_residues(const FieldContext& ctx);

}  // namespace cwe
