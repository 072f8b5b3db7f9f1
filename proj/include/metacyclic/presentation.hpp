#pragma once

// Validation, normalization and per-prime profiling of metacyclic
// presentations
//
//   H(n,m;t,r) = < a, b | a^n = e, b^m = a^t, b a b^-1 = a^r >
//
// subject to r^m - 1 = t(r-1) = 0 (mod n). Profiling produces the
// GroupContext that the endomorphism/automorphism machinery consumes; it
// requires the normalized form t | n.

#include <optional>
#include <string>
#include <vector>

#include "metacyclic/numtheory.hpp"

namespace metacyclic {

using nt::i64;

constexpr i64 kMaxParameter = 2147483647;  // 2^31 - 1

struct Presentation {
  i64 n = 1;  // order of a
  i64 m = 1;  // order of b modulo <a>
  i64 t = 1;  // b^m = a^t, kept in [1, n]
  i64 r = 1;  // b a b^-1 = a^r, kept in [1, n]

  friend bool operator==(const Presentation&, const Presentation&) = default;

  bool is_normalized() const { return n % t == 0; }
  bool is_abelian() const { return r == 1; }
  i64 order() const { return n * m; }
};

// Checks condition r^m = 1, t(r-1) = 0 (mod n) after wrapping t and r into
// [1, n]. Throws validation_error naming the failing congruence.
Presentation validate(i64 n, i64 m, i64 t, i64 r);

// Non-throwing variant used by sweeps.
std::optional<Presentation> try_validate(i64 n, i64 m, i64 t, i64 r);

// Rewrites b as a power of itself so that the new t divides n:
//   t' = (n, t),  r' = r^{v'} mod n
// where u*n + v*t = (n,t) with |v| minimal (ties to positive v),
// w = product of prime factors of m not dividing v, v' = v + w*n/(n,t).
// Already-normalized presentations are returned unchanged, which makes the
// operation idempotent.
Presentation normalize(const Presentation& pres);

enum class LambdaClass {
  Lambda1,      // p | n and p | r-1
  Lambda2,      // p | n and p does not divide r-1
  LambdaPrime,  // p does not divide n (so p | m)
};

const char* lambda_class_name(LambdaClass c);

struct PrimeProfile {
  i64 p = 2;
  i64 alpha = 0;          // deg_p(n)
  i64 beta = 0;           // deg_p(m)
  i64 gamma = 0;          // deg_p(t)
  nt::Valuation delta;    // deg_p(r-1); infinite when r = 1
  LambdaClass lambda_class = LambdaClass::LambdaPrime;
};

struct GroupContext {
  Presentation pres;
  i64 d = 1;                    // gcd(r-1, n)
  std::optional<i64> epsilon;   // deg_2(r+1), stored only for odd r
  i64 m0 = 1;                   // least k with r^k = 1 mod p^alpha_p for all p in Lambda2
  std::vector<PrimeProfile> profiles;  // one per prime dividing n*m, ascending

  // Derived conveniences.
  i64 dt = 1;       // gcd(d, t)
  i64 y1_step = 1;  // m / gcd(m, dt): y1 must be a multiple of this

  const PrimeProfile* find_profile(i64 p) const;
};

// Builds the full profile table plus d, epsilon, m0. Requires t | n.
GroupContext build_context(const Presentation& pres);

// Two-adic correction term for the y2 congruence: 2^(alpha2-delta2-1) when
// gamma2 != beta2, min(beta2, gamma2) = alpha2 - delta2 and
// deg_2(y1) = beta2 - delta2; otherwise 0. Requires 2 in Lambda1.
i64 mu(const GroupContext& ctx, i64 y1);

// "n,m,t,r" in decimal.
std::string format_presentation(const Presentation& pres);
std::optional<Presentation> parse_presentation(const std::string& text);

}  // namespace metacyclic
