#include "cwe/field.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace cwe {

namespace {

// Dense polynomial over F_p, coefficients low-to-high, no normalization
// requirements (helpers trim as needed). Used only during field construction.
using Poly = std::vector<std::int64_t>;

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // Extended Euclid; a nonzero mod p.
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return ((t % p) + p) % p;
}

// c = a*b mod (f, p) where f is monic of degree m.
Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
  const int m = degree(f);
  const int da = degree(a), db = degree(b);
  if (da < 0 || db < 0) return {};
  Poly c(static_cast<size_t>(da + db + 1), 0);
  for (int i = 0; i <= da; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j <= db; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  }
  for (int k = static_cast<int>(c.size()) - 1; k >= m; --k) {
    std::int64_t coef = c[k] % p;
    if (coef == 0) continue;
    c[k] = 0;
    for (int j = 0; j < m; ++j) c[k - m + j] = ((c[k - m + j] - coef * f[j]) % p + p) % p;
  }
  c.resize(static_cast<size_t>(m));
  trim(c);
  return c;
}

Poly powmod(Poly base, std::int64_t e, const Poly& f, std::int64_t p) {
  Poly r = {1};
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, f, p);
    base = mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& b, std::int64_t p) {
  trim(a);
  const int db = degree(b);
  std::int64_t lead_inv = mod_inverse(((b[static_cast<size_t>(db)] % p) + p) % p, p);
  while (degree(a) >= db) {
    const int da = degree(a);
    std::int64_t coef = (a[static_cast<size_t>(da)] * lead_inv) % p;
    for (int j = 0; j <= db; ++j)
      a[static_cast<size_t>(da - db + j)] =
          ((a[static_cast<size_t>(da - db + j)] - coef * b[static_cast<size_t>(j)]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  trim(a);
  trim(b);
  while (degree(b) >= 0) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// f monic of degree m >= 1. Reducible f of degree m has an irreducible factor
// of degree <= m/2, and x^{p^k} - x is the product of all irreducibles of
// degree dividing k; so f is irreducible iff gcd(f, x^{p^k} - x) = 1 for all
// k <= m/2.
bool is_irreducible(const Poly& f, std::int64_t p) {
  const int m = degree(f);
  if (m == 1) return true;
  Poly xp = {0, 1};  // running x^{p^k} mod f
  for (int k = 1; 2 * k <= m; ++k) {
    xp = powmod(xp, p, f, p);
    Poly diff = xp;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    Poly g = poly_gcd(f, diff, p);
    if (degree(g) > 0) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::int64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::int64_t checked_pow(std::int64_t p, int e, std::int64_t limit) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > limit / p)
      throw CapacityError("p^" + std::to_string(e) + " exceeds supported range");
    r *= p;
  }
  return r;
}

FieldContext FieldContext::build(std::int64_t p, int m) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw ParameterError("p must be an odd prime");
  if (m < 1) throw ParameterError("extension degree m must be >= 1");
  if (m > kMaxExtensionDegree)
    throw CapacityError("extension degree m exceeds the supported maximum of " +
                        std::to_string(kMaxExtensionDegree));
  // Keeps every coefficient convolution far inside int64 range; nothing above
  // the enumeration cap is computable anyway.
  if (p > 2 * kEnumerationCap)
    throw CapacityError("p exceeds the supported range of " +
                        std::to_string(2 * kEnumerationCap));
  FieldContext ctx;
  ctx.p_ = p;
  ctx.m_ = m;
  ctx.order_ = checked_pow(p, m, (std::int64_t{1} << 62));

  if (m == 1) {
    ctx.modulus_ = {0, 1};  // x itself; the field is F_p
  } else {
    // Scan monic candidates in lexicographic coefficient order (constant term
    // is the most significant digit of the counter) and keep the first
    // irreducible one.
    Poly f(static_cast<size_t>(m + 1), 0);
    f[static_cast<size_t>(m)] = 1;
    std::vector<std::int64_t> digits(static_cast<size_t>(m), 0);
    bool found = false;
    while (true) {
      for (int i = 0; i < m; ++i) f[static_cast<size_t>(i)] = digits[static_cast<size_t>(i)];
      if (is_irreducible(f, p)) {
        found = true;
        break;
      }
      int i = m - 1;
      while (i >= 0 && digits[static_cast<size_t>(i)] == p - 1) digits[static_cast<size_t>(i--)] = 0;
      if (i < 0) break;
      ++digits[static_cast<size_t>(i)];
    }
    if (!found) throw std::logic_error("no irreducible polynomial found");  // unreachable
    ctx.modulus_.assign(f.begin(), f.end());
  }

  // Trace of each basis power: Tr(u^j) = sum_i (u^{p^i})^j. Each sum lies in
  // the prime subfield, so only the constant coordinate survives.
  ctx.trace_basis_.assign(static_cast<size_t>(m), 0);
  if (m == 1) {
    ctx.trace_basis_[0] = 1;  // trace is the identity on the prime field
  } else {
    std::vector<std::int32_t> uc(static_cast<size_t>(m), 0);
    uc[1] = 1;
    FieldElement u = ctx.from_coords(std::move(uc));
    std::vector<FieldElement> frob;  // u^{p^i}
    frob.push_back(u);
    for (int i = 1; i < m; ++i) frob.push_back(ctx.pow(frob.back(), p));
    for (int j = 0; j < m; ++j) {
      FieldElement sum = ctx.zero();
      for (int i = 0; i < m; ++i) sum = ctx.add(sum, ctx.pow(frob[static_cast<size_t>(i)], j));
      for (int k = 1; k < m; ++k)
        if (sum.c_[static_cast<size_t>(k)] != 0)
          throw std::logic_error("trace of basis power not in the prime subfield");
      ctx.trace_basis_[static_cast<size_t>(j)] = sum.c_[0];
    }
  }
  return ctx;
}

FieldElement FieldContext::embed_prime(std::int64_t v) const {
  std::vector<std::int32_t> c(static_cast<size_t>(m_), 0);
  c[0] = static_cast<std::int32_t>(((v % p_) + p_) % p_);
  return FieldElement(std::move(c));
}

FieldElement FieldContext::from_coords(std::vector<std::int32_t> coords) const {
  if (static_cast<int>(coords.size()) != m_)
    throw ParameterError("coordinate vector length does not match the context degree");
  for (auto& v : coords) {
    std::int64_t r = ((static_cast<std::int64_t>(v) % p_) + p_) % p_;
    v = static_cast<std::int32_t>(r);
  }
  return FieldElement(std::move(coords));
}

FieldElement FieldContext::from_index(std::int64_t index) const {
  FieldElement x = zero();
  from_index_into(index, x);
  return x;
}

void FieldContext::from_index_into(std::int64_t index, FieldElement& out) const {
  if (index < 0 || index >= order_) throw ParameterError("element index out of range");
  if (static_cast<int>(out.c_.size()) != m_) out.c_.assign(static_cast<size_t>(m_), 0);
  for (int i = m_ - 1; i >= 0; --i) {
    out.c_[static_cast<size_t>(i)] = static_cast<std::int32_t>(index % p_);
    index /= p_;
  }
}

std::int64_t FieldContext::index_of(const FieldElement& x) const {
  check_element(x);
  std::int64_t idx = 0;
  for (int i = 0; i < m_; ++i) idx = idx * p_ + x.c_[static_cast<size_t>(i)];
  return idx;
}

void FieldContext::check_element(const FieldElement& x) const {
  if (static_cast<int>(x.c_.size()) != m_)
    throw ParameterError("element does not belong to this field context");
}

void FieldContext::check_enumeration_cap() const {
  if (order_ > kEnumerationCap)
    throw CapacityError("field order " + std::to_string(order_) +
                        " exceeds the enumeration cap of " + std::to_string(kEnumerationCap));
}

void FieldContext::increment(FieldElement& x) const {
  for (int i = m_ - 1; i >= 0; --i) {
    if (x.c_[static_cast<size_t>(i)] + 1 < p_) {
      ++x.c_[static_cast<size_t>(i)];
      return;
    }
    x.c_[static_cast<size_t>(i)] = 0;
  }
}

FieldElement FieldContext::add(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  FieldElement r = a;
  for (int i = 0; i < m_; ++i) {
    std::int32_t v = r.c_[static_cast<size_t>(i)] + b.c_[static_cast<size_t>(i)];
    if (v >= p_) v -= static_cast<std::int32_t>(p_);
    r.c_[static_cast<size_t>(i)] = v;
  }
  return r;
}

FieldElement FieldContext::sub(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  FieldElement r = a;
  for (int i = 0; i < m_; ++i) {
    std::int32_t v = r.c_[static_cast<size_t>(i)] - b.c_[static_cast<size_t>(i)];
    if (v < 0) v += static_cast<std::int32_t>(p_);
    r.c_[static_cast<size_t>(i)] = v;
  }
  return r;
}

FieldElement FieldContext::neg(const FieldElement& a) const { return sub(zero(), a); }

void FieldContext::mul_into(const FieldElement& a, const FieldElement& b, FieldElement& out) const {
  std::array<std::int64_t, 2 * kMaxExtensionDegree - 1> buf{};
  const int conv_len = 2 * m_ - 1;
  for (int i = 0; i < conv_len; ++i) buf[static_cast<size_t>(i)] = 0;
  for (int i = 0; i < m_; ++i) {
    const std::int64_t ai = a.c_[static_cast<size_t>(i)];
    if (ai == 0) continue;
    for (int j = 0; j < m_; ++j)
      buf[static_cast<size_t>(i + j)] += ai * b.c_[static_cast<size_t>(j)];
  }
  for (int k = conv_len - 1; k >= m_; --k) {
    std::int64_t coef = buf[static_cast<size_t>(k)] % p_;
    if (coef == 0) continue;
    for (int j = 0; j < m_; ++j)
      buf[static_cast<size_t>(k - m_ + j)] -= coef * modulus_[static_cast<size_t>(j)];
  }
  if (static_cast<int>(out.c_.size()) != m_) out.c_.assign(static_cast<size_t>(m_), 0);
  for (int i = 0; i < m_; ++i)
    out.c_[static_cast<size_t>(i)] =
        static_cast<std::int32_t>(((buf[static_cast<size_t>(i)] % p_) + p_) % p_);
}

FieldElement FieldContext::mul(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  FieldElement r;
  mul_into(a, b, r);
  return r;
}

FieldElement FieldContext::inv(const FieldElement& a) const {
  check_element(a);
  if (a.is_zero()) throw ParameterError("zero has no multiplicative inverse");
  return pow(a, order_ - 2);
}

FieldElement FieldContext::pow(const FieldElement& a, std::int64_t e) const {
  check_element(a);
  if (e < 0) throw ParameterError("negative exponent");
  FieldElement base = a;
  FieldElement r = one();
  while (e > 0) {
    if (e & 1) mul_into(r, base, r);
    e >>= 1;
    if (e > 0) mul_into(base, base, base);
  }
  return r;
}

std::int64_t FieldContext::trace(const FieldElement& x) const {
  check_element(x);
  std::int64_t t = 0;
  for (int i = 0; i < m_; ++i)
    t += static_cast<std::int64_t>(x.c_[static_cast<size_t>(i)]) *
         trace_basis_[static_cast<size_t>(i)];
  return t % p_;
}

int FieldContext::quadratic_character(const FieldElement& x) const {
  check_element(x);
  if (x.is_zero()) return 0;
  FieldElement r = pow(x, (order_ - 1) / 2);
  if (r == one()) return 1;
  if (r == embed_prime(p_ - 1)) return -1;
  throw std::logic_error("x^((q-1)/2) is not +-1");
}

std::vector<FieldElement> FieldContext::enumerate() const {
  check_enumeration_cap();
  std::vector<FieldElement> all;
  all.reserve(static_cast<size_t>(order_));
  for_each_element([&](const FieldElement& x, std::int64_t) { all.push_back(x); });
  return all;
}

}  // namespace cwe
