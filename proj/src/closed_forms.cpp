#include "cwe/closed_forms.hpp"

#include <string>

namespace cwe {

namespace {

constexpr std::int64_t kPowLimit = std::int64_t{1} << 62;

void check_params(std::int64_t p, int m, int min_odd_m = 3) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw ParameterError("p must be an odd prime");
  if (m % 2 == 0) {
    if (m < 2) throw ParameterError("even m must be >= 2");
  } else {
    if (m < min_odd_m)
      throw ParameterError("odd m must be >= " + std::to_string(min_odd_m));
  }
  checked_pow(p, m, kPowLimit);  // keeps every multiplicity below 1.5 * 2^62
}

CompositionVector make_composition(std::int64_t p, std::int64_t k0, std::int64_t k_rest) {
  if (k0 < 0 || k_rest < 0)
    throw std::logic_error("negative exponent in a closed-form composition");
  CompositionVector c;
  c.counts.assign(static_cast<size_t>(p), k_rest);
  c.counts[0] = k0;
  return c;
}

struct CdTerm {
  std::int64_t k0;
  std::int64_t k_rest;
  std::int64_t multiplicity;
};

// The three term families of the C_D enumerator (the zero codeword plus the
// two or three nonzero classes, depending on parity).
std::vector<CdTerm> cd_terms(std::int64_t p, int m) {
  check_params(p, m);
  const std::int64_t n = predicted_code_length(p, m);
  std::vector<CdTerm> terms;
  terms.push_back({n, 0, 1});
  if (m % 2 == 1) {
    const std::int64_t pm1 = checked_pow(p, m - 1, kPowLimit);
    const std::int64_t pm2 = checked_pow(p, m - 2, kPowLimit);
    const std::int64_t ph = checked_pow(p, (m - 1) / 2, kPowLimit);   // p^{(m-1)/2}
    const std::int64_t phl = checked_pow(p, (m - 3) / 2, kPowLimit);  // p^{(m-3)/2}
    terms.push_back({pm2 - 1, pm2, pm1 - 1});
    terms.push_back({pm2 - 1 + (p - 1) * phl, pm2 - phl, (p - 1) / 2 * (pm1 + ph)});
    terms.push_back({pm2 - 1 - (p - 1) * phl, pm2 + phl, (p - 1) / 2 * (pm1 - ph)});
  } else {
    const int eps = even_sign(p, m);
    const std::int64_t pm1 = checked_pow(p, m - 1, kPowLimit);
    const std::int64_t pm2 = checked_pow(p, m - 2, kPowLimit);
    const std::int64_t ph = checked_pow(p, (m - 2) / 2, kPowLimit);  // p^{(m-2)/2}
    terms.push_back({pm2 - 1 - eps * (p - 1) * ph, pm2, pm1 - 1 - eps * (p - 1) * ph});
    terms.push_back({pm2 - 1, pm2 - eps * ph, (p - 1) * (pm1 + eps * ph)});
  }
  return terms;
}

void add_row(WeightDistribution& wd, std::int64_t weight, std::int64_t mult) {
  if (mult == 0) return;
  if (mult < 0 || weight < 0) throw std::logic_error("negative closed-form table row");
  wd.entries[weight] += mult;
}

}  // namespace

int even_sign(std::int64_t p, int m) {
  if (m % 2 != 0) throw ParameterError("even_sign requires even m");
  const std::int64_t h = (p - 1) / 2;
  return ((m / 2) * h * h) % 2 == 0 ? 1 : -1;
}

int odd_sign(std::int64_t p, int m) {
  if (m % 2 != 1) throw ParameterError("odd_sign requires odd m");
  return (((m - 1) / 2) * ((p - 1) / 2)) % 2 == 0 ? 1 : -1;
}

std::int64_t nu(std::int64_t q, std::int64_t rho) { return rho == 0 ? q - 1 : -1; }

std::int64_t predicted_trace_square_zero_count(std::int64_t p, int m) {
  check_params(p, m, 1);
  if (m % 2 == 1) return checked_pow(p, m - 1, kPowLimit);
  return checked_pow(p, m - 1, kPowLimit) -
         even_sign(p, m) * (p - 1) * checked_pow(p, (m - 2) / 2, kPowLimit);
}

std::int64_t predicted_code_length(std::int64_t p, int m) {
  check_params(p, m);
  return predicted_trace_square_zero_count(p, m) - 1;
}

CompleteWeightEnumerator predicted_cwe_cd(std::int64_t p, int m) {
  const std::int64_t n = predicted_code_length(p, m);
  CompleteWeightEnumerator cwe(n);
  for (const auto& t : cd_terms(p, m))
    if (t.multiplicity != 0) cwe.add(make_composition(p, t.k0, t.k_rest), t.multiplicity);
  return cwe;
}

CompleteWeightEnumerator predicted_cwe_cdb(std::int64_t p, int m) {
  const std::int64_t n = predicted_code_length(p, m);
  CompleteWeightEnumerator cwe(n);
  for (const auto& t : cd_terms(p, m)) {
    if (t.multiplicity == 0) continue;
    const CompositionVector base = make_composition(p, t.k0, t.k_rest);
    for (std::int64_t b = 0; b < p; ++b) cwe.add(base.shifted(b), t.multiplicity);
  }
  return cwe;
}

WeightDistribution predicted_wd_cd(std::int64_t p, int m) {
  check_params(p, m);
  WeightDistribution wd;
  add_row(wd, 0, 1);
  if (m % 2 == 1) {
    const std::int64_t pm1 = checked_pow(p, m - 1, kPowLimit);
    const std::int64_t pm2 = checked_pow(p, m - 2, kPowLimit);
    const std::int64_t ph = checked_pow(p, (m - 1) / 2, kPowLimit);
    const std::int64_t phl = checked_pow(p, (m - 3) / 2, kPowLimit);
    add_row(wd, (p - 1) * (pm2 - phl), (p - 1) / 2 * (pm1 + ph));
    add_row(wd, (p - 1) * pm2, pm1 - 1);
    add_row(wd, (p - 1) * (pm2 + phl), (p - 1) / 2 * (pm1 - ph));
  } else {
    const int eps = even_sign(p, m);
    const std::int64_t pm1 = checked_pow(p, m - 1, kPowLimit);
    const std::int64_t pm2 = checked_pow(p, m - 2, kPowLimit);
    const std::int64_t ph = checked_pow(p, (m - 2) / 2, kPowLimit);
    add_row(wd, (p - 1) * pm2, pm1 - eps * (p - 1) * ph - 1);
    add_row(wd, (p - 1) * (pm2 - eps * ph), (p - 1) * (pm1 + eps * ph));
  }
  return wd;
}

WeightDistribution predicted_wd_cdb(std::int64_t p, int m) {
  check_params(p, m);
  WeightDistribution wd;
  add_row(wd, 0, 1);
  if (m % 2 == 1) {
    const std::int64_t pm1 = checked_pow(p, m - 1, kPowLimit);
    const std::int64_t pm2 = checked_pow(p, m - 2, kPowLimit);
    const std::int64_t ph = checked_pow(p, (m - 1) / 2, kPowLimit);
    const std::int64_t phl = checked_pow(p, (m - 3) / 2, kPowLimit);
    add_row(wd, pm1 - 1, p - 1);
    add_row(wd, (p - 1) * pm2, pm1 - 1);
    add_row(wd, (p - 1) * pm2 - 1, (p - 1) * (pm1 - 1));
    add_row(wd, (p - 1) * (pm2 - phl), (p - 1) / 2 * (pm1 + ph));
    add_row(wd, (p - 1) * pm2 + phl - 1, (p - 1) * (p - 1) / 2 * (pm1 + ph));
    add_row(wd, (p - 1) * (pm2 + phl), (p - 1) / 2 * (pm1 - ph));
    add_row(wd, (p - 1) * pm2 - phl - 1, (p - 1) * (p - 1) / 2 * (pm1 - ph));
  } else {
    const int eps = even_sign(p, m);
    const std::int64_t pm1 = checked_pow(p, m - 1, kPowLimit);
    const std::int64_t pm2 = checked_pow(p, m - 2, kPowLimit);
    const std::int64_t ph = checked_pow(p, (m - 2) / 2, kPowLimit);
    add_row(wd, pm1 - 1 - eps * (p - 1) * ph, p - 1);
    add_row(wd, (p - 1) * pm2, pm1 - 1 - eps * (p - 1) * ph);
    add_row(wd, (p - 1) * (pm2 - eps * ph) - 1, (p - 1) * (pm1 - 1 - eps * (p - 1) * ph));
    add_row(wd, (p - 1) * (pm2 - eps * ph), (p - 1) * (pm1 + eps * ph));
    add_row(wd, (p - 1) * pm2 - (p - 2) * eps * ph - 1, (p - 1) * (p - 1) * (pm1 + eps * ph));
  }
  return wd;
}

std::int64_t predicted_joint_trace_fiber(std::int64_t p, int m, int eta_class,
                                         bool rho_is_zero) {
  check_params(p, m);
  if (eta_class < -1 || eta_class > 1) throw ParameterError("eta_class must be 0, 1 or -1");
  const std::int64_t pm2 = checked_pow(p, m - 2, kPowLimit);
  if (m % 2 == 1) {
    if (eta_class == 0) return pm2;
    const std::int64_t phl = checked_pow(p, (m - 3) / 2, kPowLimit);
    const int sigma = odd_sign(p, m);
    if (rho_is_zero) return pm2 + sigma * (p - 1) * phl * eta_class;
    return pm2 - sigma * phl * eta_class;
  }
  const int eps = even_sign(p, m);
  const std::int64_t ph = checked_pow(p, (m - 2) / 2, kPowLimit);
  if (eta_class == 0) return rho_is_zero ? pm2 - eps * (p - 1) * ph : pm2;
  return rho_is_zero ? pm2 : pm2 - eps * ph;
}

ResidueClassCounts predicted_residue_class_counts(std::int64_t p, int m) {
  check_params(p, m);
  if (m % 2 == 0) throw ParameterError("residue class counts require odd m");
  const std::int64_t pm1 = checked_pow(p, m - 1, kPowLimit);
  const std::int64_t ph = checked_pow(p, (m - 1) / 2, kPowLimit);
  const int sigma = odd_sign(p, m);
  return ResidueClassCounts{pm1 - 1, (p - 1) / 2 * (pm1 + sigma * ph),
                            (p - 1) / 2 * (pm1 - sigma * ph)};
}

std::int64_t predicted_square_trace_double_sum(std::int64_t p, int m) {
  check_params(p, m, 1);
  if (m % 2 == 1) return 0;
  const int sign = (m - 1) % 2 == 0 ? 1 : -1;  // (-1)^{m-1}
  return sign * even_sign(p, m) * (p - 1) * checked_pow(p, m / 2, kPowLimit);
}

std::int64_t predicted_triple_character_sum(std::int64_t p, int m, int eta_class,
                                            bool rho_is_zero) {
  check_params(p, m);
  if (eta_class < -1 || eta_class > 1) throw ParameterError("eta_class must be 0, 1 or -1");
  if (m % 2 == 1) {
    if (eta_class == 0) return 0;
    const int sigma = odd_sign(p, m);
    const std::int64_t ph = checked_pow(p, (m + 1) / 2, kPowLimit);
    if (rho_is_zero) return sigma * (p - 1) * ph * eta_class;
    return -sigma * ph * eta_class;
  }
  const int eps = even_sign(p, m);
  const std::int64_t ph = checked_pow(p, m / 2, kPowLimit);
  if (eta_class == 0)
    return rho_is_zero ? -eps * (p - 1) * (p - 1) * ph : eps * (p - 1) * ph;
  return rho_is_zero ? eps * (p - 1) * ph : -eps * ph;
}

std::int64_t diagonal_form_solution_count(const FieldContext& base,
                                          std::span<const FieldElement> coeffs,
                                          const FieldElement& b) {
  if (coeffs.empty()) throw ParameterError("the diagonal form needs at least one variable");
  for (const auto& c : coeffs)
    if (c.is_zero()) throw ParameterError("diagonal form coefficients must be nonzero");
  const std::int64_t q = base.order();
  const int l = static_cast<int>(coeffs.size());

  FieldElement det = base.one();
  for (const auto& c : coeffs) det = base.mul(det, c);
  const FieldElement minus_one = base.embed_prime(base.p() - 1);

  if (l % 2 == 0) {
    FieldElement arg = base.mul(base.pow(minus_one, l / 2), det);
    return checked_pow(q, l - 1, kPowLimit) +
           nu(q, b.is_zero() ? 0 : 1) * checked_pow(q, (l - 2) / 2, kPowLimit) *
               base.quadratic_character(arg);
  }
  FieldElement arg = base.mul(base.mul(base.pow(minus_one, (l - 1) / 2), b), det);
  return checked_pow(q, l - 1, kPowLimit) +
         checked_pow(q, (l - 1) / 2, kPowLimit) * base.quadratic_character(arg);
}

CyclotomicInt quadratic_exponential_sum(const FieldContext& ctx, const FieldElement& a2,
                                        const FieldElement& a1, const FieldElement& a0) {
  if (a2.is_zero()) throw ParameterError("the quadratic coefficient must be nonzero");
  CharacterSumAccumulator acc(ctx.p());
  FieldElement sq = ctx.zero(), t1 = ctx.zero(), t2 = ctx.zero();
  ctx.for_each_element([&](const FieldElement& x, std::int64_t) {
    ctx.mul_into(x, x, sq);
    ctx.mul_into(a2, sq, t1);
    ctx.mul_into(a1, x, t2);
    acc.add(ctx.trace(ctx.add(ctx.add(t1, t2), a0)));
  });
  return acc.value();
}

}  // namespace cwe
