#include <doctest.h>

#include <numeric>

#include "metacyclic/errors.hpp"
#include "metacyclic/group.hpp"

using namespace metacyclic;

TEST_CASE("validate accepts and rejects per the defining congruences") {
  CHECK_NOTHROW(validate(228, 30, 38, 7));
  CHECK_NOTHROW(validate(4, 2, 2, 3));
  CHECK_THROWS_AS(validate(4, 2, 1, 3), validation_error);
  CHECK_THROWS_WITH_AS(validate(4, 2, 1, 3), doctest::Contains("t(r-1)"), validation_error);
  CHECK_THROWS_WITH_AS(validate(5, 2, 5, 2), doctest::Contains("r^m"), validation_error);
  CHECK_THROWS_AS(validate(0, 2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(validate(4, 2, 2, -3), std::invalid_argument);
}

TEST_CASE("validate wraps t and r into [1, n]") {
  const Presentation p = validate(4, 2, 6, 7);  // t = 6 -> 2, r = 7 -> 3
  CHECK(p.t == 2);
  CHECK(p.r == 3);
  const Presentation q = validate(4, 2, 4, 1);  // t = 4 stays 4 (means a^t = e)
  CHECK(q.t == 4);
  CHECK(q.r == 1);
}

TEST_CASE("normalize rewrites to t | n and is idempotent") {
  const Presentation in = validate(8, 2, 6, 5);
  const Presentation out = normalize(in);
  CHECK(out == Presentation{8, 2, 2, 5});
  CHECK(normalize(out) == out);

  const Presentation d4 = validate(4, 2, 4, 3);
  CHECK(normalize(d4) == d4);

  const Presentation ex = normalize(validate(228, 30, 38, 7));
  CHECK(ex == validate(228, 30, 38, 7));  // 38 | 228 already

  // Sweep: every valid presentation (t | n or not) normalizes to a valid,
  // t-dividing, fixed point of normalize.
  for (i64 n = 1; n <= 20; ++n) {
    for (i64 m = 1; m <= 12; ++m) {
      for (i64 t = 1; t <= n; ++t) {
        for (i64 r = 1; r <= n; ++r) {
          const auto pres = try_validate(n, m, t, r);
          if (!pres) continue;
          const Presentation norm = normalize(*pres);
          CHECK(norm.n % norm.t == 0);
          CHECK(try_validate(norm.n, norm.m, norm.t, norm.r).has_value());
          CHECK(normalize(norm) == norm);
        }
      }
    }
  }
}

TEST_CASE("normalize rewrites b consistently inside the original group") {
  // In H(8,2;6,5) the replacement generator is b^7; check its relations with
  // plain group arithmetic.
  const Presentation in = validate(8, 2, 6, 5);
  const Presentation out = normalize(in);
  const GroupContext raw = arithmetic_context(in);
  const Element b_hat = pow(raw, Element{0, 1}, 7);
  CHECK(b_hat == Element{2, 1});
  CHECK(pow(raw, b_hat, in.m) == Element{out.t, 0});  // b̂^m = a^(n,t)
  const Element conj = mul(raw, b_hat, mul(raw, Element{1, 0}, inv(raw, b_hat)));
  CHECK(conj == Element{out.r, 0});  // b̂ a b̂^-1 = a^r'
}

TEST_CASE("context of the 228-group") {
  const GroupContext ctx = build_context(validate(228, 30, 38, 7));
  CHECK(ctx.d == 6);
  CHECK(ctx.m0 == 3);
  REQUIRE(ctx.epsilon.has_value());
  CHECK(*ctx.epsilon == 3);
  REQUIRE(ctx.profiles.size() == 4);

  const auto* p2 = ctx.find_profile(2);
  REQUIRE(p2 != nullptr);
  CHECK(p2->alpha == 2);
  CHECK(p2->beta == 1);
  CHECK(p2->gamma == 1);
  CHECK(p2->delta == 1);
  CHECK(p2->lambda_class == LambdaClass::Lambda1);

  const auto* p3 = ctx.find_profile(3);
  REQUIRE(p3 != nullptr);
  CHECK(p3->alpha == 1);
  CHECK(p3->beta == 1);
  CHECK(p3->gamma == 0);
  CHECK(p3->delta == 1);
  CHECK(p3->lambda_class == LambdaClass::Lambda1);

  const auto* p5 = ctx.find_profile(5);
  REQUIRE(p5 != nullptr);
  CHECK(p5->alpha == 0);
  CHECK(p5->beta == 1);
  CHECK(p5->lambda_class == LambdaClass::LambdaPrime);

  const auto* p19 = ctx.find_profile(19);
  REQUIRE(p19 != nullptr);
  CHECK(p19->alpha == 1);
  CHECK(p19->beta == 0);
  CHECK(p19->gamma == 1);
  CHECK(p19->delta == 0);
  CHECK(p19->lambda_class == LambdaClass::Lambda2);
}

TEST_CASE("context of small groups") {
  const GroupContext q8 = build_context(validate(4, 2, 2, 3));
  CHECK(q8.d == 2);
  CHECK(q8.m0 == 1);  // no Lambda2 prime
  REQUIRE(q8.profiles.size() == 1);
  CHECK(q8.profiles[0].lambda_class == LambdaClass::Lambda1);

  const GroupContext s3 = build_context(validate(3, 2, 3, 2));
  CHECK(s3.d == 1);
  CHECK(s3.m0 == 2);  // = mul_order(2, 3)
  const auto* p3 = s3.find_profile(3);
  REQUIRE(p3 != nullptr);
  CHECK(p3->delta == 0);
  CHECK(p3->lambda_class == LambdaClass::Lambda2);
  const auto* p2 = s3.find_profile(2);
  REQUIRE(p2 != nullptr);
  CHECK(p2->lambda_class == LambdaClass::LambdaPrime);

  // Abelian case: r = 1 puts every prime of n in Lambda1 via infinite delta.
  const GroupContext ab = build_context(validate(12, 2, 12, 1));
  for (const auto& prof : ab.profiles) {
    if (prof.alpha > 0) {
      CHECK(prof.lambda_class == LambdaClass::Lambda1);
      CHECK_FALSE(prof.delta.is_finite());
    }
  }
  CHECK(ab.d == 12);
}

TEST_CASE("build_context requires t | n") {
  CHECK_THROWS_AS(build_context(validate(8, 2, 6, 5)), std::invalid_argument);
}

TEST_CASE("profile table multiplies back to n and m") {
  for (i64 n = 1; n <= 30; ++n) {
    for (i64 m = 1; n * m <= 90; ++m) {
      for (i64 t = 1; t <= n; ++t) {
        if (n % t != 0) continue;
        for (i64 r = 1; r <= n; ++r) {
          const auto pres = try_validate(n, m, t, r);
          if (!pres) continue;
          const GroupContext ctx = build_context(*pres);  // internal checks run here
          i64 pn = 1, pm = 1;
          for (const auto& prof : ctx.profiles) {
            for (i64 i = 0; i < prof.alpha; ++i) pn *= prof.p;
            for (i64 i = 0; i < prof.beta; ++i) pm *= prof.p;
            if (prof.alpha > 0) {
              const auto dd = nt::padic_deg(prof.p, ctx.d);
              const auto expect = prof.delta < nt::Valuation::finite(prof.alpha)
                                      ? prof.delta
                                      : nt::Valuation::finite(prof.alpha);
              CHECK(dd == expect);
            }
          }
          CHECK(pn == n);
          CHECK(pm == m);
          CHECK(m % ctx.m0 == 0);
          i64 lambda2_part = 1;
          for (const auto& prof : ctx.profiles) {
            if (prof.lambda_class == LambdaClass::Lambda2) {
              for (i64 i = 0; i < prof.alpha; ++i) lambda2_part *= prof.p;
            }
          }
          CHECK(nt::pow_mod(r, ctx.m0, lambda2_part) == 1 % lambda2_part);
        }
      }
    }
  }
}

TEST_CASE("mu pins") {
  const GroupContext ex = build_context(validate(228, 30, 38, 7));
  CHECK(mu(ex, 15) == 0);  // beta_2 = gamma_2 kills the first branch
  CHECK(mu(ex, 0) == 0);

  // H(8,4;8,5): alpha=3, beta=2, gamma=3, delta=2. min(beta,gamma)=2 but
  // alpha-delta=1, so the branch never fires regardless of y1.
  const GroupContext h845 = build_context(validate(8, 4, 8, 5));
  for (i64 y1 = 0; y1 < 4; ++y1) CHECK(mu(h845, y1) == 0);

  // H(16,4;8,5): alpha=4, beta=2, gamma=3, delta=2: min(beta,gamma)=2 =
  // alpha-delta and beta != gamma, so y1 with deg_2(y1) = beta-delta = 0
  // (odd y1) picks up 2^(alpha-delta-1) = 2.
  const GroupContext h1645 = build_context(validate(16, 4, 8, 5));
  CHECK(mu(h1645, 1) == 2);
  CHECK(mu(h1645, 3) == 2);
  CHECK(mu(h1645, 2) == 0);
  CHECK(mu(h1645, 0) == 0);

  // Defined only when 2 divides both n and r-1.
  const GroupContext s3 = build_context(validate(3, 2, 3, 2));
  CHECK_THROWS_AS(mu(s3, 0), std::invalid_argument);
}

TEST_CASE("presentation text form") {
  CHECK(format_presentation(Presentation{228, 30, 38, 7}) == "228,30,38,7");
  const auto p = parse_presentation("228,30,38,7");
  REQUIRE(p.has_value());
  CHECK(*p == Presentation{228, 30, 38, 7});
  CHECK_FALSE(parse_presentation("1,2,3").has_value());
  CHECK_FALSE(parse_presentation("1,2,3,x").has_value());
  CHECK_FALSE(parse_presentation("0,2,3,4").has_value());
}
