#include "metacyclic/group.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "metacyclic/errors.hpp"

namespace metacyclic {

using nt::i128;

GroupContext arithmetic_context(const Presentation& pres) {
  GroupContext ctx;
  ctx.pres = pres;
  ctx.d = pres.r == 1 ? pres.n : std::gcd(pres.r - 1, pres.n);
  ctx.dt = std::gcd(ctx.d, pres.t);
  ctx.y1_step = pres.m / std::gcd(pres.m, ctx.dt);
  return ctx;
}

bool is_canonical(const GroupContext& ctx, const Element& e) {
  return 0 <= e.u && e.u < ctx.pres.n && 0 <= e.v && e.v < ctx.pres.m;
}

Element canonicalize(const GroupContext& ctx, i64 u, i64 v) {
  const i64 n = ctx.pres.n, m = ctx.pres.m, t = ctx.pres.t;
  i64 v0 = v % m;
  if (v0 < 0) v0 += m;
  const i64 wraps = (v - v0) / m;  // exact, possibly negative
  const i64 u0 = nt::mod_reduce(static_cast<i128>(u) + static_cast<i128>(t) * wraps, n);
  return {u0, v0};
}

Element mul(const GroupContext& ctx, const Element& e1, const Element& e2) {
  const i64 n = ctx.pres.n, m = ctx.pres.m, t = ctx.pres.t, r = ctx.pres.r;
  i64 u = nt::mod_reduce(static_cast<i128>(e1.u) +
                             static_cast<i128>(nt::pow_mod(r, e1.v, n)) * e2.u,
                         n);
  i64 v = e1.v + e2.v;
  if (v >= m) {
    v -= m;
    u = nt::mod_reduce(static_cast<i128>(u) + t, n);
  }
  return {u, v};
}

Element inv(const GroupContext& ctx, const Element& e) {
  const i64 n = ctx.pres.n, m = ctx.pres.m, t = ctx.pres.t, r = ctx.pres.r;
  if (e.v == 0) return {(n - e.u) % n, 0};
  // (a^u b^v)^-1 = a^(-r^(m-v) (u+t)) b^(m-v):  b^v b^(m-v) = b^m = a^t.
  const i64 vp = m - e.v;
  const i64 rv = nt::pow_mod(r, vp, n);
  const i64 up = nt::mod_reduce(-static_cast<i128>(rv) * (e.u + t), n);
  return {up, vp};
}

Element pow(const GroupContext& ctx, const Element& e, i64 k) {
  if (k < 0) throw std::invalid_argument("pow: exponent must be >= 0");
  const i64 n = ctx.pres.n, m = ctx.pres.m, t = ctx.pres.t, r = ctx.pres.r;
  const i64 rv = nt::pow_mod(r, e.v, n);
  i64 u = nt::mod_reduce(static_cast<i128>(e.u) * nt::geom_sum(k, rv, n), n);
  const i128 vk = static_cast<i128>(e.v) * k;
  // b^(vk) = a^(t * floor(vk/m)) b^(vk mod m); a^t is central.
  const i64 wraps = nt::mod_reduce(vk / m, n);
  u = nt::mod_reduce(static_cast<i128>(u) + static_cast<i128>(t) * wraps, n);
  return {u, static_cast<i64>(vk % m)};
}

Element commutator(const GroupContext& ctx, const Element& e1, const Element& e2) {
  const i64 n = ctx.pres.n, r = ctx.pres.r;
  const i64 r1 = nt::pow_mod(r, e1.v, n);
  const i64 r2 = nt::pow_mod(r, e2.v, n);
  const i64 u = nt::mod_reduce(
      static_cast<i128>(r1 - 1) * e2.u - static_cast<i128>(r2 - 1) * e1.u, n);
  return {u, 0};
}

i64 element_order(const GroupContext& ctx, const Element& e) {
  if (e == identity_element()) return 1;
  for (i64 k : nt::divisors(ctx.pres.n * ctx.pres.m)) {
    if (k > 1 && pow(ctx, e, k) == identity_element()) return k;
  }
  throw std::logic_error("element_order: no divisor of |H| annihilates the element");
}

MulTable::MulTable(const Presentation& pres) : n_(pres.n), m_(pres.m), t_(pres.t) {
  rpow_.resize(static_cast<std::size_t>(m_));
  i64 cur = 1 % n_;
  for (i64 v = 0; v < m_; ++v) {
    rpow_[static_cast<std::size_t>(v)] = cur;
    cur = nt::mul_mod(cur, pres.r, n_);
  }
}

std::vector<Element> all_elements(const GroupContext& ctx, i64 max_elements) {
  const i64 total = ctx.pres.n * ctx.pres.m;
  if (total > max_elements) {
    std::ostringstream os;
    os << "all_elements: |H| = " << total << " exceeds the bound " << max_elements;
    throw resource_limit_error(os.str());
  }
  std::vector<Element> out;
  out.reserve(static_cast<std::size_t>(total));
  for (i64 u = 0; u < ctx.pres.n; ++u) {
    for (i64 v = 0; v < ctx.pres.m; ++v) out.push_back({u, v});
  }
  return out;
}

std::string format_element(const Element& e) {
  std::ostringstream os;
  os << "a^" << e.u << "*b^" << e.v;
  return os.str();
}

std::optional<Element> parse_element(const std::string& text) {
  i64 u = 0, v = 0;
  {
    std::istringstream is(text);
    char c1, c2, c3, c4, c5;
    if (is >> c1 >> c2 && c1 == 'a' && c2 == '^' && is >> u >> c3 >> c4 >> c5 && c3 == '*' &&
        c4 == 'b' && c5 == '^' && is >> v) {
      std::string rest;
      if (!(is >> rest)) return Element{u, v};
    }
  }
  {
    std::istringstream is(text);
    char c1, c2, c3;
    if (is >> c1 && c1 == '(' && is >> u >> c2 && c2 == ',' && is >> v >> c3 && c3 == ')') {
      std::string rest;
      if (!(is >> rest)) return Element{u, v};
    }
  }
  return std::nullopt;
}

}  // namespace metacyclic
