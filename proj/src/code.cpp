#include "cwe/code.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace cwe {

std::string variant_name(CodeVariant v) { return v == CodeVariant::CD ? "C_D" : "C_Db"; }

CodeSpec::CodeSpec(std::int64_t p_, int m_, std::int64_t d_, CodeVariant variant_)
    : p(p_), m(m_), d(d_), variant(variant_) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) throw ParameterError("p must be an odd prime");
  if (m < 2) throw ParameterError("extension degree m must be >= 2");
  if (d < 1) throw ParameterError("exponent d must be >= 1");
  const std::int64_t order = checked_pow(p, m, (std::int64_t{1} << 62));
  const std::int64_t g = std::gcd(d, (order - 1) / 2);
  if (g != 1)
    throw ParameterError("gcd(d, (p^m-1)/2) must be 1, got gcd = " + std::to_string(g));
}

CompositionVector CompositionVector::shifted(std::int64_t b) const {
  const std::int64_t p = static_cast<std::int64_t>(counts.size());
  b = ((b % p) + p) % p;
  CompositionVector r;
  r.counts.resize(counts.size());
  for (std::int64_t j = 0; j < p; ++j)
    r.counts[static_cast<size_t>(j)] = counts[static_cast<size_t>((j - b + p) % p)];
  return r;
}

void CompleteWeightEnumerator::add(const CompositionVector& composition,
                                   std::int64_t multiplicity) {
  if (composition.sum() != length_)
    throw std::logic_error("composition does not sum to the code length");
  if (multiplicity <= 0) throw std::logic_error("term multiplicity must be positive");
  terms_[composition] += multiplicity;
}

std::int64_t CompleteWeightEnumerator::total() const {
  std::int64_t t = 0;
  for (const auto& [comp, mult] : terms_) t += mult;
  return t;
}

std::int64_t CompleteWeightEnumerator::zero_codeword_multiplicity() const {
  if (terms_.empty()) return 0;
  CompositionVector zero_comp;
  zero_comp.counts.assign(terms_.begin()->first.counts.size(), 0);
  zero_comp.counts[0] = length_;
  auto it = terms_.find(zero_comp);
  return it == terms_.end() ? 0 : it->second;
}

int CompleteWeightEnumerator::measured_dimension(std::int64_t p) const {
  const std::int64_t kernel = zero_codeword_multiplicity();
  if (kernel <= 0) throw std::logic_error("enumerator lacks the zero codeword");
  std::int64_t distinct = total() / kernel;
  if (distinct * kernel != total())
    throw std::logic_error("kernel size does not divide the codeword count");
  int dim = 0;
  while (distinct % p == 0) {
    distinct /= p;
    ++dim;
  }
  if (distinct != 1) throw std::logic_error("distinct codeword count is not a power of p");
  return dim;
}

DefiningSet build_defining_set(const FieldContext& ctx, const CodeSpec& spec) {
  if (ctx.p() != spec.p || ctx.m() != spec.m)
    throw ParameterError("field context does not match the code spec");
  std::vector<std::int64_t> indices;
  FieldElement sq = ctx.zero();
  ctx.for_each_element([&](const FieldElement& x, std::int64_t i) {
    if (i == 0) return;
    ctx.mul_into(x, x, sq);
    const bool zero2d = spec.d == 1 ? ctx.trace(sq) == 0 : ctx.trace(ctx.pow(sq, spec.d)) == 0;
    if (zero2d) indices.push_back(i);
  });
  return DefiningSet(std::move(indices));
}

CompositionVector codeword_composition(const FieldContext& ctx, const DefiningSet& D,
                                       const FieldElement& a, std::int64_t b) {
  const std::int64_t p = ctx.p();
  b = ((b % p) + p) % p;
  CompositionVector comp;
  comp.counts.assign(static_cast<size_t>(p), 0);
  FieldElement di = ctx.zero(), prod = ctx.zero();
  for (std::int64_t idx : D.indices()) {
    ctx.from_index_into(idx, di);
    ctx.mul_into(a, di, prod);
    ++comp.counts[static_cast<size_t>((ctx.trace(prod) + b) % p)];
  }
  return comp;
}

namespace {

// One worker's walk over a contiguous index range [t0, t1). The codeword is
// kept as a rolling buffer: stepping a from index t to t+1 wraps the lowest
// carry_depth digits and increments the next one, which adds
// s_j = u^{m-1} + ... + u^{m-1-j} to a, so every symbol moves by the
// precomputed row step[j][i] = Tr(s_j d_i).
struct SweepWorker {
  const FieldContext* ctx;
  const std::vector<std::vector<std::uint16_t>>* step;
  const DefiningSet* D;
  CodeVariant variant;
  std::int64_t t0, t1;
  CompleteWeightEnumerator::TermMap terms;

  void run() {
    const std::int64_t p = ctx->p();
    const int m = ctx->m();
    const std::int64_t n = D->length();
    const auto& idx = D->indices();

    std::vector<std::uint16_t> cw(static_cast<size_t>(n));
    {
      FieldElement a = ctx->from_index(t0), di = ctx->zero(), prod = ctx->zero();
      for (std::int64_t i = 0; i < n; ++i) {
        ctx->from_index_into(idx[static_cast<size_t>(i)], di);
        ctx->mul_into(a, di, prod);
        cw[static_cast<size_t>(i)] = static_cast<std::uint16_t>(ctx->trace(prod));
      }
    }
    std::vector<std::int32_t> digits(static_cast<size_t>(m), 0);  // little-endian base-p of t
    {
      std::int64_t t = t0;
      for (int k = 0; k < m; ++k) {
        digits[static_cast<size_t>(k)] = static_cast<std::int32_t>(t % p);
        t /= p;
      }
    }

    std::vector<std::int64_t> counts(static_cast<size_t>(p), 0);
    CompositionVector key;
    key.counts.assign(static_cast<size_t>(p), 0);
    const std::uint16_t up = static_cast<std::uint16_t>(p);

    for (std::int64_t t = t0; t < t1; ++t) {
      if (t == t0) {
        std::fill(counts.begin(), counts.end(), 0);
        for (std::int64_t i = 0; i < n; ++i) ++counts[cw[static_cast<size_t>(i)]];
      } else {
        int j = 0;
        while (digits[static_cast<size_t>(j)] == p - 1) digits[static_cast<size_t>(j++)] = 0;
        ++digits[static_cast<size_t>(j)];
        const std::uint16_t* row = (*step)[static_cast<size_t>(j)].data();
        std::fill(counts.begin(), counts.end(), 0);
        for (std::int64_t i = 0; i < n; ++i) {
          std::uint16_t v = static_cast<std::uint16_t>(cw[static_cast<size_t>(i)] +
                                                       row[static_cast<size_t>(i)]);
          if (v >= up) v = static_cast<std::uint16_t>(v - up);
          cw[static_cast<size_t>(i)] = v;
          ++counts[v];
        }
      }

      if (variant == CodeVariant::CD) {
        key.counts.assign(counts.begin(), counts.end());
        bump(key);
      } else {
        for (std::int64_t b = 0; b < p; ++b) {
          for (std::int64_t jj = 0; jj < p; ++jj)
            key.counts[static_cast<size_t>(jj)] = counts[static_cast<size_t>((jj - b + p) % p)];
          bump(key);
        }
      }
    }
  }

  void bump(const CompositionVector& key) {
    auto it = terms.find(key);
    if (it == terms.end())
      terms.emplace(key, 1);
    else
      ++it->second;
  }
};

}  // namespace

CompleteWeightEnumerator brute_force_cwe(const FieldContext& ctx, const CodeSpec& spec,
                                         int jobs) {
  const std::int64_t p = ctx.p();
  const int m = ctx.m();
  const std::int64_t q = ctx.order();
  if (q > kEnumerationCap || (spec.variant == CodeVariant::CDb && q > kEnumerationCap / p))
    throw CapacityError("codeword count exceeds the enumeration cap of " +
                        std::to_string(kEnumerationCap));
  // q <= cap and m >= 2 bound p well below 2^16, so symbols fit uint16_t.
  const std::int64_t codewords = spec.variant == CodeVariant::CD ? q : q * p;

  const DefiningSet D = build_defining_set(ctx, spec);
  const std::int64_t n = D.length();

  // step[j][i] = Tr(s_j d_i) with s_j = u^{m-1} + ... + u^{m-1-j}.
  std::vector<std::vector<std::uint16_t>> step(static_cast<size_t>(m));
  {
    FieldElement s = ctx.zero(), di = ctx.zero(), prod = ctx.zero();
    std::vector<std::int32_t> sc(static_cast<size_t>(m), 0);
    for (int j = 0; j < m; ++j) {
      sc[static_cast<size_t>(m - 1 - j)] = 1;
      s = ctx.from_coords(sc);
      auto& row = step[static_cast<size_t>(j)];
      row.resize(static_cast<size_t>(n));
      for (std::int64_t i = 0; i < n; ++i) {
        ctx.from_index_into(D.indices()[static_cast<size_t>(i)], di);
        ctx.mul_into(s, di, prod);
        row[static_cast<size_t>(i)] = static_cast<std::uint16_t>(ctx.trace(prod));
      }
    }
  }

  int workers = jobs > 0 ? jobs : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (q < 4096) workers = 1;
  if (static_cast<std::int64_t>(workers) > q) workers = static_cast<int>(q);

  std::vector<SweepWorker> parts(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    auto& part = parts[static_cast<size_t>(w)];
    part.ctx = &ctx;
    part.step = &step;
    part.D = &D;
    part.variant = spec.variant;
    part.t0 = q * w / workers;
    part.t1 = q * (w + 1) / workers;
  }
  if (workers == 1) {
    parts[0].run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (auto& part : parts) pool.emplace_back([&part] { part.run(); });
    for (auto& th : pool) th.join();
  }

  CompleteWeightEnumerator cwe(n);
  for (auto& part : parts)
    for (const auto& [comp, mult] : part.terms) cwe.add(comp, mult);
  if (cwe.total() != codewords) throw std::logic_error("codeword multiplicities do not add up");
  return cwe;
}

WeightDistribution weight_distribution(const CompleteWeightEnumerator& cwe) {
  WeightDistribution wd;
  for (const auto& [comp, mult] : cwe.terms())
    wd.entries[cwe.length() - comp.counts[0]] += mult;
  return wd;
}

std::int64_t count_joint_trace_fiber(const FieldContext& ctx, const FieldElement& a,
                                     std::int64_t rho) {
  if (a.is_zero()) throw ParameterError("a must be nonzero");
  const std::int64_t p = ctx.p();
  rho = ((rho % p) + p) % p;
  std::int64_t count = 0;
  FieldElement sq = ctx.zero(), ax = ctx.zero();
  ctx.for_each_element([&](const FieldElement& x, std::int64_t) {
    ctx.mul_into(x, x, sq);
    if (ctx.trace(sq) != 0) return;
    ctx.mul_into(a, x, ax);
    if (ctx.trace(ax) == rho) ++count;
  });
  return count;
}

std::int64_t count_trace_square_zeros(const FieldContext& ctx) {
  std::int64_t count = 0;
  FieldElement sq = ctx.zero();
  ctx.for_each_element([&](const FieldElement& x, std::int64_t) {
    ctx.mul_into(x, x, sq);
    if (ctx.trace(sq) == 0) ++count;
  });
  return count;
}

ResidueClassCounts classify_trace_square_residues(const FieldContext& ctx) {
  if (ctx.m() % 2 == 0) throw ParameterError("residue classification requires odd m");
  const std::int64_t p = ctx.p();
  std::vector<int> qr(static_cast<size_t>(p), -1);  // prime-field quadratic character
  qr[0] = 0;
  for (std::int64_t y = 1; y < p; ++y) qr[static_cast<size_t>(y * y % p)] = 1;

  ResidueClassCounts r{0, 0, 0};
  FieldElement sq = ctx.zero();
  ctx.for_each_element([&](const FieldElement& x, std::int64_t i) {
    if (i == 0) return;
    ctx.mul_into(x, x, sq);
    switch (qr[static_cast<size_t>(ctx.trace(sq))]) {
      case 0: ++r.zero; break;
      case 1: ++r.square; break;
      default: ++r.nonsquare; break;
    }
  });
  return r;
}

}  // namespace cwe
