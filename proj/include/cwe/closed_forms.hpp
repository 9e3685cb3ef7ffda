#pragma once

#include <cstdint>
#include <span>

#include "cwe/code.hpp"
#include "cwe/cyclotomic.hpp"
#include "cwe/field.hpp"

namespace cwe {

// The two recurring sign constants. All closed forms below route through
// these so each transcription is pinned in exactly one place.
int even_sign(std::int64_t p, int m);  // (-1)^{(m/2)((p-1)/2)^2}, m even
int odd_sign(std::int64_t p, int m);   // (-1)^{((m-1)/2)((p-1)/2)}, m odd

/// nu(0) = q - 1 and nu(rho) = -1 otherwise.
std::int64_t nu(std::int64_t q, std::int64_t rho);

/// Closed form for #{x : Tr(x^2) = 0} (zero included).
std::int64_t predicted_trace_square_zero_count(std::int64_t p, int m);

/// Code length n = n_0 - 1.
std::int64_t predicted_code_length(std::int64_t p, int m);

/// Closed-form complete weight enumerators (three term families for C_D,
/// their b-shifted sums for C_{D,b}). Families whose multiplicity vanishes at
/// boundary parameters are dropped; coinciding compositions merge.
CompleteWeightEnumerator predicted_cwe_cd(std::int64_t p, int m);
CompleteWeightEnumerator predicted_cwe_cdb(std::int64_t p, int m);

/// Closed-form weight distributions; rows with coinciding weights merge by
/// summing multiplicities.
WeightDistribution predicted_wd_cd(std::int64_t p, int m);
WeightDistribution predicted_wd_cdb(std::int64_t p, int m);

/// Closed form for #{x : Tr(x^2) = 0, Tr(ax) = rho}. The caller supplies the
/// prime-field quadratic character of Tr(a^2) (0, +1 or -1) and whether
/// rho = 0; the count depends only on those.
std::int64_t predicted_joint_trace_fiber(std::int64_t p, int m, int eta_class,
                                         bool rho_is_zero);

/// Closed form for the counts of nonzero x by the character of Tr(x^2)
/// (odd m only).
ResidueClassCounts predicted_residue_class_counts(std::int64_t p, int m);

/// Closed form for sum_{y != 0} sum_x zeta^{y Tr(x^2)}.
std::int64_t predicted_square_trace_double_sum(std::int64_t p, int m);

/// Closed form for the triple character sum, keyed like the fiber count.
std::int64_t predicted_triple_character_sum(std::int64_t p, int m, int eta_class,
                                            bool rho_is_zero);

/// Number of solutions of c_1 x_1^2 + ... + c_l x_l^2 = b over the base field
/// (a nondegenerate diagonal quadratic form; all c_i must be nonzero).
std::int64_t diagonal_form_solution_count(const FieldContext& base,
                                          std::span<const FieldElement> coeffs,
                                          const FieldElement& b);

/// sum_x chi(a2 x^2 + a1 x + a0) by enumeration, exact in Z[zeta_p]; the
/// closed form chi(a0 - a1^2 (4 a2)^{-1}) eta(a2) G(eta, chi) is what the
/// tests compare it against. Requires a2 != 0.
CyclotomicInt quadratic_exponential_sum(const FieldContext& ctx, const FieldElement& a2,
                                        const FieldElement& a1, const FieldElement& a0);

}  // namespace cwe
