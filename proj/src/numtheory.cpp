#include "metacyclic/numtheory.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace metacyclic::nt {

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod_u64(u64 a, u64 e, u64 m) {
  u64 r = m > 1 ? 1 % m : 0;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_witness(u64 n, u64 a, u64 d, int s) {
  a %= n;
  if (a == 0) return true;
  u64 x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Brent's cycle variant of Pollard rho; n must be odd composite, not a prime power of 2.
u64 pollard_rho(u64 n) {
  if (n % 2 == 0) return 2;
  u64 c = 1;
  while (true) {
    u64 x = 2, y = 2, d = 1;
    u64 q = 1;
    int iter = 0;
    while (d == 1) {
      x = (mulmod_u64(x, x, n) + c) % n;
      y = (mulmod_u64(y, y, n) + c) % n;
      y = (mulmod_u64(y, y, n) + c) % n;
      u64 diff = x > y ? x - y : y - x;
      if (diff == 0) break;
      q = mulmod_u64(q, diff, n);
      if (++iter % 64 == 0 || iter > (1 << 20)) {
        d = std::gcd(q, n);
        if (iter > (1 << 20)) break;
      }
    }
    if (d == 1) d = std::gcd(q, n);
    if (d != 1 && d != n) return d;
    ++c;
  }
}

void factor_rec(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

bool is_prime(u64 x) {
  if (x < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (x == p) return true;
    if (x % p == 0) return false;
  }
  u64 d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for all inputs below 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin_witness(x, a, d, s)) return false;
  }
  return true;
}

Valuation padic_deg(i64 p, i64 x) {
  if (p < 2 || !is_prime(static_cast<u64>(p))) {
    throw std::invalid_argument("padic_deg: p must be prime");
  }
  if (x < 0) throw std::invalid_argument("padic_deg: x must be nonnegative");
  if (x == 0) return Valuation::infinity();
  i64 s = 0;
  while (x % p == 0) {
    x /= p;
    ++s;
  }
  return Valuation::finite(s);
}

PrimeFactorization factorize(i64 k) {
  if (k < 1) throw std::invalid_argument("factorize: k must be >= 1");
  std::vector<u64> primes;
  u64 n = static_cast<u64>(k);
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull,
                41ull, 43ull, 47ull, 53ull, 59ull, 61ull, 67ull, 71ull, 73ull, 79ull, 83ull,
                89ull, 97ull}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, primes);
  std::sort(primes.begin(), primes.end());
  PrimeFactorization out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().prime == static_cast<i64>(p)) {
      ++out.back().exponent;
    } else {
      out.push_back({static_cast<i64>(p), 1});
    }
  }
  return out;
}

i64 pow_mod(i64 s, i64 e, i64 M) {
  if (M < 1) throw std::invalid_argument("pow_mod: modulus must be >= 1");
  if (e < 0) throw std::invalid_argument("pow_mod: exponent must be >= 0");
  if (s < 0) s = mod_reduce(s, M);
  return static_cast<i64>(powmod_u64(static_cast<u64>(s), static_cast<u64>(e), static_cast<u64>(M)));
}

i64 geom_sum(i64 u, i64 s, i64 M) {
  if (M < 1) throw std::invalid_argument("geom_sum: modulus must be >= 1");
  if (u < 0) throw std::invalid_argument("geom_sum: u must be >= 0");
  if (s < 0) s = mod_reduce(s, M);
  s %= M;
  // Walk the bits of u from the top, maintaining ([k]_s, s^k) for the prefix k:
  //   [2k]_s = [k]_s * (1 + s^k),   [2k+1]_s = [2k]_s + s^{2k}.
  i64 sum = 0;      // [k]_s mod M
  i64 power = 1 % M;  // s^k mod M
  for (int bit = 63; bit >= 0; --bit) {
    sum = mod_reduce(static_cast<i128>(sum) * (1 + power), M);
    power = mul_mod(power, power, M);
    if ((u >> bit) & 1) {
      sum = mod_reduce(static_cast<i128>(sum) + power, M);
      power = mul_mod(power, s, M);
    }
  }
  return sum;
}

i64 mul_order(i64 r, i64 M) {
  if (M < 1) throw std::invalid_argument("mul_order: modulus must be >= 1");
  r = mod_reduce(r, M);
  if (std::gcd(r, M) != 1) throw std::invalid_argument("mul_order: gcd(r, M) must be 1");
  if (M == 1) return 1;
  i64 order = euler_phi(M);
  for (const auto& [p, e] : factorize(order)) {
    for (i64 i = 0; i < e; ++i) {
      if (pow_mod(r, order / p, M) == 1) {
        order /= p;
      } else {
        break;
      }
    }
  }
  return order;
}

BezoutCertificate gcd_ext(i64 a, i64 b) {
  if (a == 0 && b == 0) throw std::invalid_argument("gcd_ext: a and b must not both be zero");
  i64 old_r = a, r = b;
  i64 old_u = 1, u = 0;
  i64 old_v = 0, v = 1;
  while (r != 0) {
    i64 q = old_r / r;
    i64 tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_u - q * u;
    old_u = u;
    u = tmp;
    tmp = old_v - q * v;
    old_v = v;
    v = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_u = -old_u;
    old_v = -old_v;
  }
  return {old_r, old_u, old_v};
}

i64 euler_phi(i64 m) {
  if (m < 1) throw std::invalid_argument("euler_phi: m must be >= 1");
  i64 phi = m;
  for (const auto& [p, e] : factorize(m)) {
    (void)e;
    phi -= phi / p;
  }
  return phi;
}

std::vector<i64> divisors(i64 k) {
  if (k < 1) throw std::invalid_argument("divisors: k must be >= 1");
  std::vector<i64> divs{1};
  for (const auto& [p, e] : factorize(k)) {
    const std::size_t base = divs.size();
    i64 pk = 1;
    for (i64 i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace metacyclic::nt
