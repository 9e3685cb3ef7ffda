#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "cwe/errors.hpp"

namespace cwe {

// Largest supported extension degree. Keeps convolution buffers on the stack.
inline constexpr int kMaxExtensionDegree = 32;

/// An element of F_{p^m} in the power basis of the modulus root: coords[i] is
/// the coefficient of u^i, each in [0, p-1]. Elements are plain values; all
/// arithmetic lives on FieldContext.
class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(std::vector<std::int32_t> coords) : c_(std::move(coords)) {}

  const std::vector<std::int32_t>& coords() const { return c_; }
  bool is_zero() const {
    for (auto v : c_)
      if (v != 0) return false;
    return true;
  }

  bool operator==(const FieldElement&) const = default;
  auto operator<=>(const FieldElement&) const = default;

 private:
  std::vector<std::int32_t> c_;
  friend class FieldContext;
};

/// The ambient field F_{p^m}: an odd prime p, extension degree m and a monic
/// irreducible modulus of degree m over F_p (coefficients stored low-to-high).
///
/// The modulus is the lexicographically smallest monic irreducible polynomial
/// of degree m (coefficients compared low-degree-first), so the presentation
/// is a deterministic function of (p, m).
///
/// Immutable after construction; safe to share across threads. Every
/// operation is a pure function of its inputs.
class FieldContext {
 public:
  /// Deterministic field construction. Throws ParameterError for non-prime or
  /// even p, or m < 1; CapacityError when p^m does not fit the supported range.
  static FieldContext build(std::int64_t p, int m);

  std::int64_t p() const { return p_; }
  int m() const { return m_; }
  std::int64_t order() const { return order_; }
  const std::vector<std::int32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement(std::vector<std::int32_t>(m_, 0)); }
  FieldElement one() const { return embed_prime(1); }

  /// Constant-coordinate embedding of a prime-field residue.
  FieldElement embed_prime(std::int64_t v) const;

  FieldElement from_coords(std::vector<std::int32_t> coords) const;

  // Elements are indexed 0..order-1 in lexicographic coordinate order
  // (coords[0] is the most significant digit). Index 0 is the zero element.
  FieldElement from_index(std::int64_t index) const;
  void from_index_into(std::int64_t index, FieldElement& out) const;
  std::int64_t index_of(const FieldElement& x) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  void mul_into(const FieldElement& a, const FieldElement& b, FieldElement& out) const;
  FieldElement square(const FieldElement& a) const { return mul(a, a); }

  /// Multiplicative inverse; ParameterError on zero.
  FieldElement inv(const FieldElement& a) const;

  /// a^e for e >= 0.
  FieldElement pow(const FieldElement& a, std::int64_t e) const;

  /// Tr(x) = sum of x^{p^i} for i < m, returned as a residue in [0, p-1].
  /// Computed through the precomputed trace of each basis power (the trace is
  /// F_p-linear); the Frobenius-sum route is kept as a test oracle.
  std::int64_t trace(const FieldElement& x) const;

  /// Quadratic character: 0 at zero, else x^{(p^m-1)/2} mapped to +-1.
  int quadratic_character(const FieldElement& x) const;

  /// All p^m elements in index order. CapacityError above the enumeration cap.
  std::vector<FieldElement> enumerate() const;

  /// Streaming enumeration in index order, reusing one scratch element.
  template <class Fn>
  void for_each_element(Fn&& fn) const {
    check_enumeration_cap();
    FieldElement x = zero();
    for (std::int64_t i = 0;; ++i) {
      fn(static_cast<const FieldElement&>(x), i);
      if (i + 1 == order_) break;
      increment(x);
    }
  }

  bool operator==(const FieldContext& other) const {
    return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
  }

 private:
  FieldContext() = default;

  void check_element(const FieldElement& x) const;
  void check_enumeration_cap() const;
  // Advance coords to the next element in index order (coords[m-1] fastest).
  void increment(FieldElement& x) const;

  std::int64_t p_ = 0;
  int m_ = 0;
  std::int64_t order_ = 0;
  std::vector<std::int32_t> modulus_;      // size m+1, monic
  std::vector<std::int32_t> trace_basis_;  // trace_basis_[j] = Tr(u^j)
};

/// True iff p is a prime (deterministic trial division; desk scale).
bool is_prime(std::int64_t p);

/// p^e with overflow detection; CapacityError if the result exceeds limit.
std::int64_t checked_pow(std::int64_t p, int e, std::int64_t limit);

}  // namespace cwe
