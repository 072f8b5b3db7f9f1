#include <doctest.h>

#include <stdexcept>
#include <set>
#include <tuple>
#include <vector>

#include "metacyclic/automorphism.hpp"

using namespace metacyclic;

namespace {

std::vector<GroupContext> small_contexts(i64 max_order) {
  std::vector<GroupContext> out;
  for (i64 n = 1; n <= max_order; ++n) {
    for (i64 m = 1; n * m <= max_order; ++m) {
      for (i64 t = 1; t <= n; ++t) {
        if (n % t != 0) continue;
        for (i64 r = 1; r <= n; ++r) {
          if (const auto pres = try_validate(n, m, t, r)) out.push_back(build_context(*pres));
        }
      }
    }
  }
  return out;
}

// Test-only reference for the abelianization half of clause I: the induced
// map on H^ab = < A, B | d A = 0, m B = t A > is injective iff for every
// prime p the columns (x1,y1), (x2,y2), (d,0), (-t,m) span (Z/p)^2
// (surjectivity mod p plus Nakayama). Independent of the per-class case
// split used by the predicate.
bool abelianization_injective(const GroupContext& ctx, const EndoSpec& spec) {
  for (const auto& prof : ctx.profiles) {
    const i64 p = prof.p;
    const i64 cols[4][2] = {
        {spec.x1 % p, spec.y1 % p},
        {spec.x2 % p, spec.y2 % p},
        {ctx.d % p, 0},
        {((-ctx.pres.t % p) + p) % p, ctx.pres.m % p},
    };
    bool rank2 = false;
    for (int i = 0; i < 4 && !rank2; ++i) {
      for (int j = i + 1; j < 4 && !rank2; ++j) {
        const i64 det = (cols[i][0] * cols[j][1] - cols[i][1] * cols[j][0]) % p;
        if (det != 0) rank2 = true;
      }
    }
    if (!rank2) return false;
  }
  return true;
}

bool passes_clause_one(const TheoremVerdict& v) {
  return v.accepted || (*v.failed_clause != Clause::WellDef && *v.failed_clause != Clause::I);
}

}  // namespace

TEST_CASE("verdicts on the 228-group") {
  const GroupContext ex = build_context(validate(228, 30, 38, 7));
  CHECK(theorem_accepts(ex, identity_spec(ex)).accepted);
  CHECK(theorem_accepts(ex, EndoSpec{1, 0, 0, 7}).accepted);

  const auto r1 = theorem_accepts(ex, EndoSpec{2, 0, 0, 1});
  CHECK_FALSE(r1.accepted);

  const auto r2 = theorem_accepts(ex, EndoSpec{1, 15, 0, 1});
  CHECK_FALSE(r2.accepted);
  CHECK(*r2.failed_clause == Clause::WellDef);  // condition (2) fails before clause III could

  // Members of the y1 = 15 family: x1 = 0 mod 3, x2 = x1 y2 + 1 mod 2.
  CHECK(theorem_accepts(ex, EndoSpec{3, 15, 0, 1}).accepted);
  CHECK(theorem_accepts(ex, EndoSpec{3, 15, 1, 4}).accepted);
  CHECK_FALSE(theorem_accepts(ex, EndoSpec{3, 15, 1, 1}).accepted);  // x2 parity wrong
}

TEST_CASE("enumeration counts for named small groups") {
  CHECK(count_automorphisms(build_context(validate(4, 2, 2, 3))) == 24);  // quaternion
  CHECK(count_automorphisms(build_context(validate(4, 2, 4, 3))) == 8);   // dihedral of order 8
  CHECK(count_automorphisms(build_context(validate(3, 2, 3, 2))) == 6);   // S3
  CHECK(count_automorphisms(build_context(validate(5, 1, 5, 1))) == 4);   // C5, phi(5)
}

TEST_CASE("enumeration is duplicate-free, sorted, and matches the predicate") {
  for (const auto& ctx : small_contexts(40)) {
    const auto specs = enumerate_automorphisms(ctx);
    CHECK(!specs.empty());
    CHECK(specs.front() == identity_spec(ctx));

    const EndoSpecYOrder less;
    for (std::size_t i = 1; i < specs.size(); ++i) CHECK(less(specs[i - 1], specs[i]));

    std::set<std::tuple<i64, i64, i64, i64>> seen;
    for (const auto& s : specs) {
      CHECK(is_canonical(ctx, s));
      CHECK(seen.insert(std::make_tuple(s.x1, s.y1, s.x2, s.y2)).second);
      CHECK(theorem_accepts(ctx, s).accepted);
    }

    // Nothing outside the enumeration is accepted.
    i64 accepted = 0;
    for (i64 x1 = 0; x1 < ctx.pres.n; ++x1)
      for (i64 y1 = 0; y1 < ctx.pres.m; ++y1)
        for (i64 x2 = 0; x2 < ctx.pres.n; ++x2)
          for (i64 y2 = 0; y2 < ctx.pres.m; ++y2) {
            if (theorem_accepts(ctx, {x1, y1, x2, y2}).accepted) ++accepted;
          }
    CHECK(accepted == static_cast<i64>(specs.size()));
  }
}

TEST_CASE("identity sorts first only when it should") {
  // The identity quadruple is (x1,y1,x2,y2) = (1,0,0,1); in (y1,y2,x1,x2)
  // order nothing with y1 = 0, y2 < 1 can be accepted (y2 = 0 maps b into
  // <a> b^0 which is never surjective for m > 1), and for y2 = 1 no accepted
  // x1 < 1 exists (x1 = 0 kills a). So front() == identity above is a real
  // consequence, not an accident of the loop order.
  const GroupContext ex = build_context(validate(228, 30, 38, 7));
  const auto specs = enumerate_automorphisms(ex);
  CHECK(specs.front() == identity_spec(ex));
}

TEST_CASE("clause I equals the abelianization rank criterion plus the x1 unit conditions") {
  for (const auto& ctx : small_contexts(40)) {
    for (i64 x1 = 0; x1 < ctx.pres.n; ++x1)
      for (i64 y1 = 0; y1 < ctx.pres.m; ++y1)
        for (i64 x2 = 0; x2 < ctx.pres.n; ++x2)
          for (i64 y2 = 0; y2 < ctx.pres.m; ++y2) {
            const EndoSpec spec{x1, y1, x2, y2};
            if (!is_well_defined(ctx, spec).ok) continue;
            bool expect = abelianization_injective(ctx, spec);
            for (const auto& prof : ctx.profiles) {
              if (prof.lambda_class == LambdaClass::Lambda2 && x1 % prof.p == 0) expect = false;
            }
            CHECK(passes_clause_one(theorem_accepts(ctx, spec)) == expect);
          }
  }
}

TEST_CASE("accepted specs satisfy the Lambda2 order conditions") {
  const GroupContext ex = build_context(validate(228, 30, 38, 7));
  const auto specs = enumerate_automorphisms(ex);
  CHECK(specs.size() == 98496);
  for (std::size_t i = 0; i < specs.size(); i += 997) {
    const auto& s = specs[i];
    CHECK(nt::pow_mod(7, s.y1, 19) == 1);
    CHECK(nt::pow_mod(7, s.y2, 19) == 7 % 19);
    CHECK(s.x1 % 19 != 0);
  }
}

TEST_CASE("closure and inverses under composition") {
  for (const auto& ctx : small_contexts(24)) {
    const auto specs = enumerate_automorphisms(ctx);
    for (std::size_t i = 0; i < specs.size(); i += 3) {
      for (std::size_t j = 0; j < specs.size(); j += 5) {
        CHECK(theorem_accepts(ctx, compose(ctx, specs[i], specs[j])).accepted);
      }
      const EndoSpec inv_spec = aut_inverse(ctx, specs[i]);
      CHECK(theorem_accepts(ctx, inv_spec).accepted);
      CHECK(compose(ctx, specs[i], inv_spec) == identity_spec(ctx));
      CHECK(compose(ctx, inv_spec, specs[i]) == identity_spec(ctx));
    }
  }
  const GroupContext q8 = build_context(validate(4, 2, 2, 3));
  CHECK(aut_inverse(q8, identity_spec(q8)) == identity_spec(q8));
  CHECK_THROWS_AS(aut_inverse(q8, EndoSpec{0, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("worker count does not change the enumeration") {
  const GroupContext ctx = build_context(validate(16, 4, 8, 5));
  const auto one = enumerate_automorphisms(ctx, 1);
  const auto three = enumerate_automorphisms(ctx, 3);
  const auto eight = enumerate_automorphisms(ctx, 8);
  CHECK(one == three);
  CHECK(one == eight);
}

TEST_CASE("odd nonabelian p-group orders divide their automorphism counts") {
  CHECK(count_automorphisms(build_context(validate(9, 3, 9, 4))) % 27 == 0);
  CHECK(count_automorphisms(build_context(validate(9, 3, 3, 4))) % 27 == 0);
  CHECK(count_automorphisms(build_context(validate(9, 9, 3, 4))) % 81 == 0);
}
