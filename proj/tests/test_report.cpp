#include "cwe/closed_forms.hpp"
#include "cwe/report.hpp"
#include "doctest.h"

using namespace cwe;

namespace {

RunReport example_report() {
  const auto ctx = FieldContext::build(3, 5);
  const CodeSpec spec(3, 5, 2, CodeVariant::CD);
  return build_report(ctx, spec, predicted_cwe_cd(3, 5), ComputeMethod::Both, true, 12);
}

}  // namespace

TEST_CASE("report fields") {
  const auto r = example_report();
  CHECK(r.length == 80);
  CHECK(r.dimension == 5);
  CHECK(r.match == true);
  REQUIRE(r.cwe.size() == 4);
  CHECK(r.cwe.front().first == std::vector<std::int64_t>{80, 0, 0});  // lex descending
  CHECK(r.weight_distribution.front() == std::pair<std::int64_t, std::int64_t>{0, 1});
}

TEST_CASE("text rendering") {
  const auto text = render_text(example_report());
  CHECK(text.find("1 + 90 z^48 + 80 z^54 + 72 z^60") != std::string::npos);
  CHECK(text.find("w0^80 + 90 w0^32 w1^24 w2^24") != std::string::npos);
  CHECK(text.find("length 80") != std::string::npos);
  CHECK(text.find("dimension 5") != std::string::npos);
  CHECK(text.find("match OK") != std::string::npos);
}

TEST_CASE("json round-trips") {
  const auto r = example_report();
  const auto parsed = parse_report_json(render_json(r));
  CHECK(parsed == r);
  CHECK(render_json(parsed) == render_json(r));

  const auto ctx = FieldContext::build(3, 4);
  const CodeSpec spec(3, 4, 3, CodeVariant::CDb);
  const auto r2 =
      build_report(ctx, spec, predicted_cwe_cdb(3, 4), ComputeMethod::Formula, std::nullopt, 0);
  const auto parsed2 = parse_report_json(render_json(r2));
  CHECK(parsed2 == r2);
  CHECK_FALSE(parsed2.match.has_value());

  SUBCASE("across the whole grid, both variants") {
    for (std::int64_t p : {3, 5, 7, 11})
      for (int m = 2; m <= 6; ++m) {
        std::int64_t order = 1;
        bool fits = true;
        for (int i = 0; i < m; ++i) {
          order *= p;
          if (order > 200000) fits = false;
        }
        if (!fits) continue;
        const auto gctx = FieldContext::build(p, m);
        for (auto variant : {CodeVariant::CD, CodeVariant::CDb}) {
          const CodeSpec gspec(p, m, 1, variant);
          const auto cwe =
              variant == CodeVariant::CD ? predicted_cwe_cd(p, m) : predicted_cwe_cdb(p, m);
          const auto rep =
              build_report(gctx, gspec, cwe, ComputeMethod::Formula, std::nullopt, 7);
          CHECK(parse_report_json(render_json(rep)) == rep);
        }
      }
  }
}

TEST_CASE("latex rendering mirrors the monomial style") {
  const auto tex = render_latex(example_report());
  CHECK(tex.find("w_{0}^{80}") != std::string::npos);
  CHECK(tex.find("90w_{0}^{32}w_{1}^{24}w_{2}^{24}") != std::string::npos);
  CHECK(tex.find("z^{48}") != std::string::npos);
}

TEST_CASE("term diffs name the differing compositions") {
  auto a = predicted_cwe_cd(3, 5);
  CompleteWeightEnumerator b(a.length());
  for (const auto& [comp, mult] : a.terms()) b.add(comp, mult);
  b.add(a.terms().begin()->first, 1);
  const auto diff = render_term_diff(a, b);
  CHECK(diff.find("(80,0,0)") != std::string::npos);
  CHECK(diff.find("brute=1 formula=2") != std::string::npos);
  CHECK(render_term_diff(a, a).empty());
}

TEST_CASE("weight tables") {
  const auto wd = predicted_wd_cd(3, 5);
  CHECK(render_table_csv(wd) == "weight,count\n0,1\n48,90\n54,80\n60,72");
  const auto text = render_table_text(wd);
  CHECK(text.find("Weight") != std::string::npos);
  CHECK(text.find("48  90") != std::string::npos);
  const auto tex = render_table_latex(wd);
  CHECK(tex.find("48 & 90") != std::string::npos);
}

TEST_CASE("degenerate instance renders as a bare constant") {
  const auto ctx = FieldContext::build(5, 2);
  const CodeSpec spec(5, 2, 1, CodeVariant::CD);
  const auto r =
      build_report(ctx, spec, predicted_cwe_cd(5, 2), ComputeMethod::Formula, std::nullopt, 0);
  CHECK(r.length == 0);
  CHECK(r.dimension == 0);
  CHECK(render_cwe_monomials(r.cwe) == "25");
}
