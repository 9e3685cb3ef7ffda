#include <random>

#include "cwe/closed_forms.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cwe;

namespace {

CompositionVector comp(std::initializer_list<std::int64_t> counts) {
  CompositionVector c;
  c.counts.assign(counts);
  return c;
}

}  // namespace

TEST_CASE("sign constants and nu") {
  CHECK(even_sign(3, 2) == -1);
  CHECK(even_sign(5, 4) == 1);
  CHECK(even_sign(5, 2) == 1);
  CHECK(odd_sign(3, 3) == -1);
  CHECK(odd_sign(3, 5) == 1);
  CHECK(odd_sign(5, 3) == 1);
  CHECK_THROWS_AS(even_sign(3, 3), ParameterError);
  CHECK_THROWS_AS(odd_sign(3, 2), ParameterError);
  CHECK(nu(9, 0) == 8);
  CHECK(nu(9, 4) == -1);
}

TEST_CASE("predicted C_D enumerators") {
  SUBCASE("(3,5) matches the worked example") {
    auto cwe = predicted_cwe_cd(3, 5);
    REQUIRE(cwe.length() == 80);
    REQUIRE(cwe.terms().size() == 4);
    CHECK(cwe.terms().at(comp({80, 0, 0})) == 1);
    CHECK(cwe.terms().at(comp({32, 24, 24})) == 90);
    CHECK(cwe.terms().at(comp({26, 27, 27})) == 80);
    CHECK(cwe.terms().at(comp({20, 30, 30})) == 72);
  }
  SUBCASE("(5,4) matches the worked example") {
    auto cwe = predicted_cwe_cd(5, 4);
    REQUIRE(cwe.length() == 104);
    CHECK(cwe.terms().at(comp({104, 0, 0, 0, 0})) == 1);
    CHECK(cwe.terms().at(comp({24, 20, 20, 20, 20})) == 520);
    CHECK(cwe.terms().at(comp({4, 25, 25, 25, 25})) == 104);
    CHECK(cwe.total() == 625);
  }
  SUBCASE("(3,2) with negative sign constant") {
    auto cwe = predicted_cwe_cd(3, 2);
    REQUIRE(cwe.length() == 4);
    CHECK(cwe.terms().at(comp({4, 0, 0})) == 1);
    CHECK(cwe.terms().at(comp({2, 1, 1})) == 4);
    CHECK(cwe.terms().at(comp({0, 2, 2})) == 4);
  }
  SUBCASE("parameter validation") {
    CHECK_THROWS_AS(predicted_cwe_cd(3, 1), ParameterError);
    CHECK_THROWS_AS(predicted_cwe_cd(4, 4), ParameterError);
    CHECK_THROWS_AS(predicted_cwe_cd(3, -3), ParameterError);
  }
}

TEST_CASE("predicted C_Db enumerators") {
  SUBCASE("(3,4) matches the worked example") {
    auto cwe = predicted_cwe_cdb(3, 4);
    REQUIRE(cwe.length() == 20);
    REQUIRE(cwe.terms().size() == 9);
    CHECK(cwe.terms().at(comp({20, 0, 0})) == 1);
    CHECK(cwe.terms().at(comp({9, 9, 2})) == 20);
    CHECK(cwe.terms().at(comp({8, 6, 6})) == 60);
    CHECK(cwe.total() == 243);
  }
  SUBCASE("(3,5) includes the constant-codeword terms") {
    auto cwe = predicted_cwe_cdb(3, 5);
    REQUIRE(cwe.terms().size() == 12);
    CHECK(cwe.terms().at(comp({0, 80, 0})) == 1);
    CHECK(cwe.terms().at(comp({0, 0, 80})) == 1);
    CHECK(cwe.terms().at(comp({24, 32, 24})) == 90);
    CHECK(cwe.total() == 729);
  }
  SUBCASE("(3,2): shifted families, total 27") {
    auto cwe = predicted_cwe_cdb(3, 2);
    CHECK(cwe.total() == 27);
    CHECK(cwe.terms().at(comp({4, 0, 0})) == 1);
    CHECK(cwe.terms().at(comp({0, 4, 0})) == 1);
    CHECK(cwe.terms().at(comp({2, 1, 1})) == 4);
    CHECK(cwe.terms().at(comp({1, 2, 1})) == 4);
    CHECK(cwe.terms().at(comp({0, 2, 2})) == 4);
    CHECK(cwe.terms().at(comp({2, 0, 2})) == 4);
  }
}

TEST_CASE("predicted weight distributions") {
  CHECK(predicted_wd_cd(3, 5).entries ==
        std::map<std::int64_t, std::int64_t>{{0, 1}, {48, 90}, {54, 80}, {60, 72}});
  CHECK(predicted_wd_cd(5, 4).entries ==
        std::map<std::int64_t, std::int64_t>{{0, 1}, {80, 520}, {100, 104}});
  CHECK(predicted_wd_cd(3, 2).entries ==
        std::map<std::int64_t, std::int64_t>{{0, 1}, {2, 4}, {4, 4}});

  CHECK(predicted_wd_cdb(3, 5).entries ==
        std::map<std::int64_t, std::int64_t>{
            {0, 1}, {48, 90}, {50, 144}, {53, 160}, {54, 80}, {56, 180}, {60, 72}, {80, 2}});
  CHECK(predicted_wd_cdb(3, 4).entries ==
        std::map<std::int64_t, std::int64_t>{
            {0, 1}, {11, 40}, {12, 60}, {14, 120}, {18, 20}, {20, 2}});
  // Two table families share weight 4 here and must merge: 2 + 4 = 6.
  CHECK(predicted_wd_cdb(3, 2).entries ==
        std::map<std::int64_t, std::int64_t>{{0, 1}, {2, 12}, {3, 8}, {4, 6}});
}

TEST_CASE("closed-form weight tables follow from the closed-form enumerators") {
  for (std::int64_t p : {3, 5, 7, 11}) {
    for (int m = 2; m <= 6; ++m) {
      std::int64_t order = 1;
      for (int i = 0; i < m; ++i) order *= p;
      if (order > 200000) continue;
      CHECK(weight_distribution(predicted_cwe_cd(p, m)) == predicted_wd_cd(p, m));
      CHECK(weight_distribution(predicted_cwe_cdb(p, m)) == predicted_wd_cdb(p, m));
    }
  }
}

TEST_CASE("predicted enumerators equal brute force on small fields") {
  for (auto [p, m] : {std::pair<std::int64_t, int>{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
    auto ctx = FieldContext::build(p, m);
    CHECK(predicted_cwe_cd(p, m) == brute_force_cwe(ctx, CodeSpec(p, m, 1, CodeVariant::CD)));
    CHECK(predicted_cwe_cdb(p, m) == brute_force_cwe(ctx, CodeSpec(p, m, 1, CodeVariant::CDb)));
  }
}

TEST_CASE("predicted joint trace fibers") {
  CHECK(predicted_joint_trace_fiber(3, 2, 1, false) == 2);
  CHECK(predicted_joint_trace_fiber(3, 2, -1, false) == 2);
  CHECK(predicted_joint_trace_fiber(3, 3, 0, true) == 3);
  CHECK(predicted_joint_trace_fiber(3, 3, 0, false) == 3);
  CHECK(predicted_joint_trace_fiber(7, 3, 0, true) == 7);
  CHECK(predicted_joint_trace_fiber(3, 3, 1, true) == 1);

  SUBCASE("matches brute counts exhaustively on small fields") {
    for (auto [p, m] : {std::pair<std::int64_t, int>{3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}}) {
      auto ctx = FieldContext::build(p, m);
      ctx.for_each_element([&](const FieldElement& a, std::int64_t i) {
        if (i == 0) return;
        const int cls = test::prime_quadratic_character(p, ctx.trace(ctx.square(a)));
        for (std::int64_t rho = 0; rho < p; ++rho)
          CHECK(count_joint_trace_fiber(ctx, a, rho) ==
                predicted_joint_trace_fiber(p, m, cls, rho == 0));
      });
    }
  }
}

TEST_CASE("predicted residue class counts match brute classification") {
  CHECK(predicted_residue_class_counts(3, 3) == ResidueClassCounts{8, 6, 12});
  CHECK(predicted_residue_class_counts(5, 3).zero == 24);
  for (auto [p, m] : {std::pair<std::int64_t, int>{3, 3}, {3, 5}, {5, 3}, {7, 3}, {11, 3}}) {
    auto ctx = FieldContext::build(p, m);
    CHECK(classify_trace_square_residues(ctx) == predicted_residue_class_counts(p, m));
  }
  CHECK_THROWS_AS(predicted_residue_class_counts(3, 4), ParameterError);
}

TEST_CASE("diagonal form solution counts") {
  SUBCASE("worked examples over F_3") {
    auto f3 = FieldContext::build(3, 1);
    std::vector<FieldElement> two_ones{f3.one(), f3.one()};
    CHECK(diagonal_form_solution_count(f3, two_ones, f3.zero()) == 1);
    std::vector<FieldElement> one_one{f3.one()};
    CHECK(diagonal_form_solution_count(f3, one_one, f3.one()) == 2);
    CHECK(diagonal_form_solution_count(f3, one_one, f3.zero()) == 1);
  }
  SUBCASE("zero coefficients are rejected") {
    auto f3 = FieldContext::build(3, 1);
    std::vector<FieldElement> bad{f3.one(), f3.zero()};
    CHECK_THROWS_AS(diagonal_form_solution_count(f3, bad, f3.zero()), ParameterError);
  }
  SUBCASE("matches exhaustive counting for prime fields") {
    std::mt19937_64 rng(5);
    for (std::int64_t q : {3, 5, 7}) {
      auto ctx = FieldContext::build(q, 1);
      for (int l = 1; l <= 5; ++l) {
        std::uniform_int_distribution<std::int64_t> nz(1, q - 1);
        for (int rep = 0; rep < 20; ++rep) {
          std::vector<FieldElement> coeffs;
          for (int i = 0; i < l; ++i) coeffs.push_back(ctx.embed_prime(nz(rng)));
          for (std::int64_t b = 0; b < q; ++b)
            CHECK(diagonal_form_solution_count(ctx, coeffs, ctx.embed_prime(b)) ==
                  test::exhaustive_diagonal_form_count(ctx, coeffs, ctx.embed_prime(b)));
        }
      }
    }
  }
  SUBCASE("matches exhaustive counting over an extension field (q = 9)") {
    std::mt19937_64 rng(6);
    auto ctx = FieldContext::build(3, 2);
    std::uniform_int_distribution<std::int64_t> nz(1, ctx.order() - 1);
    for (int l = 1; l <= 4; ++l) {
      for (int rep = 0; rep < 5; ++rep) {
        std::vector<FieldElement> coeffs;
        for (int i = 0; i < l; ++i) coeffs.push_back(ctx.from_index(nz(rng)));
        for (std::int64_t bi = 0; bi < ctx.order(); ++bi) {
          auto b = ctx.from_index(bi);
          CHECK(diagonal_form_solution_count(ctx, coeffs, b) ==
                test::exhaustive_diagonal_form_count(ctx, coeffs, b));
        }
      }
    }
  }
}

TEST_CASE("quadratic exponential sums factor through the Gauss sum") {
  SUBCASE("pure square sum equals the Gauss sum") {
    for (auto [p, m] : {std::pair<std::int64_t, int>{3, 1}, {3, 2}, {5, 1}, {5, 2}, {7, 1}}) {
      auto ctx = FieldContext::build(p, m);
      auto lhs = quadratic_exponential_sum(ctx, ctx.one(), ctx.zero(), ctx.zero());
      CHECK(lhs == gauss_sum(ctx).exact);
    }
  }
  SUBCASE("worked example over F_3") {
    auto f3 = FieldContext::build(3, 1);
    auto lhs = quadratic_exponential_sum(f3, f3.one(), f3.one(), f3.zero());
    // chi(-4^{-1}) eta(1) G = zeta^2 (zeta - zeta^2).
    auto rhs = CyclotomicInt::root_power(3, 2) *
               (CyclotomicInt::root_power(3, 1) - CyclotomicInt::root_power(3, 2));
    CHECK(lhs == rhs);
  }
  SUBCASE("identity holds exhaustively on small fields") {
    for (auto [p, m] : {std::pair<std::int64_t, int>{3, 1}, {3, 2}, {3, 3}, {5, 1}, {7, 1}}) {
      auto ctx = FieldContext::build(p, m);
      auto gauss = gauss_sum(ctx).exact;
      auto four_inv = ctx.inv(ctx.embed_prime(4));
      auto elems = ctx.enumerate();
      for (const auto& a2 : elems) {
        if (a2.is_zero()) continue;
        for (const auto& a1 : elems)
          for (const auto& a0 : elems) {
            auto lhs = quadratic_exponential_sum(ctx, a2, a1, a0);
            auto shift = ctx.sub(a0, ctx.mul(ctx.mul(ctx.square(a1), four_inv), ctx.inv(a2)));
            auto rhs = CyclotomicInt::root_power(p, ctx.trace(shift));
            if (ctx.quadratic_character(a2) < 0) rhs = -rhs;
            CHECK(lhs == rhs * gauss);
          }
      }
    }
  }
  SUBCASE("identity holds on random cases over F_81 and F_243") {
    std::mt19937_64 rng(9);
    for (auto [p, m] : {std::pair<std::int64_t, int>{3, 4}, {3, 5}}) {
      auto ctx = FieldContext::build(p, m);
      auto gauss = gauss_sum(ctx).exact;
      auto four_inv = ctx.inv(ctx.embed_prime(4));
      std::uniform_int_distribution<std::int64_t> any(0, ctx.order() - 1);
      std::uniform_int_distribution<std::int64_t> nz(1, ctx.order() - 1);
      for (int rep = 0; rep < 100; ++rep) {
        auto a2 = ctx.from_index(nz(rng));
        auto a1 = ctx.from_index(any(rng));
        auto a0 = ctx.from_index(any(rng));
        auto lhs = quadratic_exponential_sum(ctx, a2, a1, a0);
        auto shift = ctx.sub(a0, ctx.mul(ctx.mul(ctx.square(a1), four_inv), ctx.inv(a2)));
        auto rhs = CyclotomicInt::root_power(p, ctx.trace(shift));
        if (ctx.quadratic_character(a2) < 0) rhs = -rhs;
        CHECK(lhs == rhs * gauss);
      }
    }
  }
  SUBCASE("zero quadratic coefficient is rejected") {
    auto f3 = FieldContext::build(3, 1);
    CHECK_THROWS_AS(quadratic_exponential_sum(f3, f3.zero(), f3.one(), f3.one()),
                    ParameterError);
  }
}
