#include "cwe/cyclotomic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace cwe {

CyclotomicInt::CyclotomicInt(std::int64_t p) : p_(p) {
  if (p < 2) throw ParameterError("root-of-unity order must be a prime >= 2");
  c_.assign(static_cast<size_t>(p - 1), BigInt(0));
}

CyclotomicInt CyclotomicInt::from_integer(std::int64_t p, BigInt v) {
  CyclotomicInt r(p);
  r.c_[0] = std::move(v);
  return r;
}

CyclotomicInt CyclotomicInt::root_power(std::int64_t p, std::int64_t t) {
  CyclotomicInt r(p);
  t = ((t % p) + p) % p;
  if (t == p - 1) {
    for (auto& c : r.c_) c = -1;
  } else {
    r.c_[static_cast<size_t>(t)] = 1;
  }
  return r;
}

CyclotomicInt CyclotomicInt::from_residue_counts(std::int64_t p,
                                                 std::span<const std::int64_t> counts) {
  if (static_cast<std::int64_t>(counts.size()) != p)
    throw ParameterError("residue count vector must have length p");
  CyclotomicInt r(p);
  for (std::int64_t t = 0; t + 1 < p; ++t) r.c_[static_cast<size_t>(t)] = counts[static_cast<size_t>(t)];
  const std::int64_t top = counts[static_cast<size_t>(p - 1)];
  if (top != 0)
    for (auto& c : r.c_) c -= top;
  return r;
}

bool CyclotomicInt::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicInt::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

const BigInt& CyclotomicInt::rational_value() const {
  if (!is_rational()) throw std::logic_error("cyclotomic value is not a rational integer");
  return c_[0];
}

void CyclotomicInt::check_same_ring(const CyclotomicInt& o) const {
  if (p_ != o.p_) throw ParameterError("mismatched root-of-unity orders");
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  CyclotomicInt r = *this;
  r += o;
  return r;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  check_same_ring(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const {
  check_same_ring(o);
  CyclotomicInt r = *this;
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  check_same_ring(o);
  const size_t n = c_.size();  // p-1
  std::vector<BigInt> conv(2 * n - 1, BigInt(0));
  for (size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (o.c_[j] == 0) continue;
      conv[i + j] += c_[i] * o.c_[j];
    }
  }
  // Exponents >= p wrap (zeta^p = 1), then the zeta^{p-1} bucket is
  // eliminated through the minimal polynomial.
  CyclotomicInt r(p_);
  BigInt top(0);
  for (size_t e = 0; e < conv.size(); ++e) {
    size_t exp = e % static_cast<size_t>(p_);
    if (exp == static_cast<size_t>(p_ - 1))
      top += conv[e];
    else
      r.c_[exp] += conv[e];
  }
  if (top != 0)
    for (auto& c : r.c_) c -= top;
  return r;
}

std::complex<double> CyclotomicInt::to_complex() const {
  std::complex<double> z(0.0, 0.0);
  for (size_t t = 0; t < c_.size(); ++t) {
    if (c_[t] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(p_);
    z += c_[t].convert_to<double>() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

CharacterSumAccumulator::CharacterSumAccumulator(std::int64_t p) : p_(p) {
  counts_.assign(static_cast<size_t>(p), 0);
}

void CharacterSumAccumulator::add(std::int64_t exponent) { add_many(exponent, 1); }

void CharacterSumAccumulator::add_many(std::int64_t exponent, std::int64_t count) {
  exponent = ((exponent % p_) + p_) % p_;
  counts_[static_cast<size_t>(exponent)] += count;
}

void CharacterSumAccumulator::merge(const CharacterSumAccumulator& o) {
  if (p_ != o.p_) throw ParameterError("mismatched root-of-unity orders");
  for (size_t i = 0; i < counts_.size(); ++i) counts_[i] += o.counts_[i];
}

CyclotomicInt CharacterSumAccumulator::value() const {
  return CyclotomicInt::from_residue_counts(p_, counts_);
}

CyclotomicInt additive_character_sum(std::int64_t p, std::span<const std::int64_t> exponents) {
  CharacterSumAccumulator acc(p);
  for (auto e : exponents) acc.add(e);
  return acc.value();
}

namespace {

std::int64_t to_int64(const BigInt& v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw std::logic_error("rational value exceeds 64-bit range");
  return v.convert_to<std::int64_t>();
}

// Indicator of nonzero squares over the whole field, indexed by element index.
std::vector<std::uint8_t> square_indicator(const FieldContext& ctx) {
  std::vector<std::uint8_t> is_sq(static_cast<size_t>(ctx.order()), 0);
  FieldElement sq = ctx.zero();
  ctx.for_each_element([&](const FieldElement& y, std::int64_t i) {
    if (i == 0) return;
    ctx.mul_into(y, y, sq);
    is_sq[static_cast<size_t>(ctx.index_of(sq))] = 1;
  });
  return is_sq;
}

}  // namespace

GaussSumValue gauss_sum(const FieldContext& ctx) {
  const std::int64_t p = ctx.p();
  const int m = ctx.m();
  const auto is_sq = square_indicator(ctx);

  CharacterSumAccumulator acc(p);
  ctx.for_each_element([&](const FieldElement& x, std::int64_t i) {
    if (i == 0) return;
    acc.add_many(ctx.trace(x), is_sq[static_cast<size_t>(i)] ? 1 : -1);
  });
  CyclotomicInt exact = acc.value();

  const int eta_minus_one = ctx.quadratic_character(ctx.embed_prime(p - 1));
  const std::int64_t predicted_square = eta_minus_one * ctx.order();

  // Numeric sign check: G = (-1)^{m-1} * i^{((p-1)^2/4) m} * p^{m/2}.
  const std::int64_t ipow = (((p - 1) * (p - 1) / 4) % 4 * m) % 4;
  static const std::complex<double> i_cycle[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const std::complex<double> expected = ((m - 1) % 2 == 0 ? 1.0 : -1.0) * i_cycle[ipow] *
      std::pow(static_cast<double>(p), static_cast<double>(m) / 2.0);
  const std::complex<double> got = exact.to_complex();
  const double scale = std::abs(expected);
  if (std::abs(got - expected) > 1e-9 * scale)
    throw std::logic_error("Gauss sum numeric sign check failed for p=" + std::to_string(p) +
                           " m=" + std::to_string(m));

  return GaussSumValue{std::move(exact), predicted_square};
}

std::int64_t square_trace_double_sum(const FieldContext& ctx) {
  const std::int64_t p = ctx.p();
  std::vector<std::int64_t> fiber(static_cast<size_t>(p), 0);  // #{x : Tr(x^2) = t}
  FieldElement sq = ctx.zero();
  ctx.for_each_element([&](const FieldElement& x, std::int64_t) {
    ctx.mul_into(x, x, sq);
    ++fiber[static_cast<size_t>(ctx.trace(sq))];
  });
  CharacterSumAccumulator acc(p);
  for (std::int64_t y = 1; y < p; ++y)
    for (std::int64_t t = 0; t < p; ++t) acc.add_many(y * t % p, fiber[static_cast<size_t>(t)]);
  const CyclotomicInt v = acc.value();
  return to_int64(v.rational_value());
}

std::int64_t triple_character_sum(const FieldContext& ctx, const FieldElement& a,
                                  std::int64_t rho) {
  if (a.is_zero()) throw ParameterError("a must be nonzero");
  const std::int64_t p = ctx.p();
  if (ctx.order() > kTripleSumCap / (p * p))
    throw CapacityError("p^{m+2} exceeds the triple-sum cap of " + std::to_string(kTripleSumCap));
  rho = ((rho % p) + p) % p;

  // Bucket x by (Tr(x^2), Tr(ax)); the y,z part of the sum only sees these.
  std::vector<std::int64_t> fiber(static_cast<size_t>(p * p), 0);
  FieldElement sq = ctx.zero(), ax = ctx.zero();
  ctx.for_each_element([&](const FieldElement& x, std::int64_t) {
    ctx.mul_into(x, x, sq);
    ctx.mul_into(a, x, ax);
    ++fiber[static_cast<size_t>(ctx.trace(sq) * p + ctx.trace(ax))];
  });

  CharacterSumAccumulator acc(p);
  for (std::int64_t y = 1; y < p; ++y)
    for (std::int64_t z = 1; z < p; ++z)
      for (std::int64_t t2 = 0; t2 < p; ++t2)
        for (std::int64_t ta = 0; ta < p; ++ta) {
          const std::int64_t cnt = fiber[static_cast<size_t>(t2 * p + ta)];
          if (cnt == 0) continue;
          acc.add_many((y * t2 + z * ta - z * rho) % p, cnt);
        }
  const CyclotomicInt v = acc.value();
  return to_int64(v.rational_value());
}

}  // namespace cwe
