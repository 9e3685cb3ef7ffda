#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "cwe/errors.hpp"
#include "cwe/field.hpp"

namespace cwe {

using BigInt = boost::multiprecision::cpp_int;

/// An exact element of Z[zeta_p], the ring of integers of the p-th cyclotomic
/// field, stored in the power basis {1, zeta, ..., zeta^{p-2}}. The basis is a
/// genuine Z-basis, so two values are equal iff their coefficient vectors
/// match; zeta^{p-1} is always eliminated via
/// zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2}).
class CyclotomicInt {
 public:
  /// The zero element of Z[zeta_p].
  explicit CyclotomicInt(std::int64_t p);

  static CyclotomicInt from_integer(std::int64_t p, BigInt v);

  /// zeta^t in canonical form (t reduced mod p).
  static CyclotomicInt root_power(std::int64_t p, std::int64_t t);

  /// sum_t counts[t] * zeta^t for a length-p residue-count vector.
  static CyclotomicInt from_residue_counts(std::int64_t p, std::span<const std::int64_t> counts);

  std::int64_t p() const { return p_; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  bool is_zero() const;
  /// True iff the value is a rational integer (all non-constant coords zero).
  bool is_rational() const;
  const BigInt& rational_value() const;  // requires is_rational()

  CyclotomicInt operator+(const CyclotomicInt& o) const;
  CyclotomicInt operator-(const CyclotomicInt& o) const;
  CyclotomicInt operator-() const;
  CyclotomicInt operator*(const CyclotomicInt& o) const;
  CyclotomicInt& operator+=(const CyclotomicInt& o);
  bool operator==(const CyclotomicInt& o) const = default;

  /// Numeric evaluation at zeta_p = exp(2*pi*i/p); for sign/magnitude checks
  /// only, never for equality decisions.
  std::complex<double> to_complex() const;

 private:
  void check_same_ring(const CyclotomicInt& o) const;

  std::int64_t p_ = 0;
  std::vector<BigInt> c_;  // size p-1
};

/// Streaming accumulator for sums of the form sum_i zeta^{e_i}: exponents are
/// bucketed as they arrive, so the caller never materializes the stream.
/// Workers may each hold one and merge results; merging commutes.
class CharacterSumAccumulator {
 public:
  explicit CharacterSumAccumulator(std::int64_t p);
  void add(std::int64_t exponent);  // residue mod p
  void add_many(std::int64_t exponent, std::int64_t count);
  void merge(const CharacterSumAccumulator& o);
  CyclotomicInt value() const;
  std::int64_t p() const { return p_; }

 private:
  std::int64_t p_;
  std::vector<std::int64_t> counts_;
};

/// sum over the supplied exponents of zeta_p^e, exact.
CyclotomicInt additive_character_sum(std::int64_t p, std::span<const std::int64_t> exponents);

/// Quadratic Gauss sum over F_{p^m} with its exact square, plus the numeric
/// sign check performed at construction.
struct GaussSumValue {
  CyclotomicInt exact;            // sum_{x != 0} eta(x) zeta^{Tr(x)}
  std::int64_t predicted_square;  // eta(-1) * p^m
};

/// Computes the quadratic Gauss sum of ctx by enumeration. Also checks the
/// numeric value against (-1)^{m-1} * i^{((p-1)^2/4) m} * p^{m/2} to relative
/// 1e-9 and throws std::logic_error if the sign pattern disagrees.
/// CapacityError above the enumeration cap.
GaussSumValue gauss_sum(const FieldContext& ctx);

/// sum_{y in F_p^*} sum_{x in F_{p^m}} zeta^{y Tr(x^2)}, computed exactly in
/// Z[zeta_p]; asserts the result is a rational integer and returns it.
std::int64_t square_trace_double_sum(const FieldContext& ctx);

/// sum_{y,z in F_p^*} sum_{x in F_{p^m}} zeta^{Tr(y x^2 + a z x) - z rho},
/// exact; asserts rationality and returns the integer. Requires a != 0;
/// CapacityError when p^{m+2} exceeds the triple-sum cap.
std::int64_t triple_character_sum(const FieldContext& ctx, const FieldElement& a,
                                  std::int64_t rho);

}  // namespace cwe
