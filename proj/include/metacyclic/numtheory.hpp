#pragma once

// Exact integer and modular arithmetic primitives. Inputs are capped at
// 2^31-1 by the callers; intermediate products are taken in 128-bit width so
// nothing here can overflow.

#include <cstdint>
#include <vector>

namespace metacyclic::nt {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

// p-adic valuation, with +infinity reserved for the valuation of 0.
struct Valuation {
  bool infinite = false;
  i64 value = 0;  // meaningful only when !infinite

  static constexpr Valuation finite(i64 v) { return Valuation{false, v}; }
  static constexpr Valuation infinity() { return Valuation{true, 0}; }

  constexpr bool is_finite() const { return !infinite; }

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend constexpr bool operator<(const Valuation& a, const Valuation& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.value < b.value;
  }
  friend constexpr bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend constexpr bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend constexpr bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

  friend constexpr bool operator==(const Valuation& a, i64 v) { return !a.infinite && a.value == v; }
  friend constexpr bool operator>=(const Valuation& a, i64 v) { return a.infinite || a.value >= v; }
  friend constexpr bool operator>(const Valuation& a, i64 v) { return a.infinite || a.value > v; }
};

struct PrimeFactor {
  i64 prime;
  i64 exponent;
};

// Factors listed with strictly increasing primes; empty for 1.
using PrimeFactorization = std::vector<PrimeFactor>;

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(u64 x);

// Largest s with p^s | x; infinity for x = 0. Throws std::invalid_argument
// if p is not prime or x < 0.
Valuation padic_deg(i64 p, i64 x);

// Complete factorization of k >= 1 (Pollard rho beyond trial division).
PrimeFactorization factorize(i64 k);

// s^e mod M with 0^0 = 1. Throws std::invalid_argument if M < 1 or e < 0.
i64 pow_mod(i64 s, i64 e, i64 M);

// Geometric sum 1 + s + ... + s^(u-1) mod M (0 for u = 0), computed by
// binary splitting in O(log u) modular steps.
i64 geom_sum(i64 u, i64 s, i64 M);

// Least k >= 1 with r^k = 1 mod M; requires gcd(r, M) = 1. Found by
// factoring phi(M) and descending through its prime divisors.
i64 mul_order(i64 r, i64 M);

struct BezoutCertificate {
  i64 g;  // gcd(a, b) > 0
  i64 u;
  i64 v;  // u*a + v*b == g
};

// Extended Euclid; requires a, b not both zero.
BezoutCertificate gcd_ext(i64 a, i64 b);

// Euler's totient via factorization.
i64 euler_phi(i64 m);

// All divisors of k, sorted ascending.
std::vector<i64> divisors(i64 k);

// x mod M mapped into [0, M).
inline i64 mod_reduce(i128 x, i64 M) {
  i128 r = x % M;
  if (r < 0) r += M;
  return static_cast<i64>(r);
}

inline i64 mul_mod(i64 a, i64 b, i64 M) { return mod_reduce(static_cast<i128>(a) * b, M); }

}  // namespace metacyclic::nt
