#include "metacyclic/endomorphism.hpp"

#include <sstream>
#include <stdexcept>

namespace metacyclic {

using nt::i128;

bool is_canonical(const GroupContext& ctx, const EndoSpec& spec) {
  const i64 n = ctx.pres.n, m = ctx.pres.m;
  return 0 <= spec.x1 && spec.x1 < n && 0 <= spec.x2 && spec.x2 < n && 0 <= spec.y1 &&
         spec.y1 < m && 0 <= spec.y2 && spec.y2 < m;
}

WellDefinedResult is_well_defined(const GroupContext& ctx, const EndoSpec& spec) {
  const i64 n = ctx.pres.n, m = ctx.pres.m, t = ctx.pres.t, r = ctx.pres.r;

  if (nt::mod_reduce(static_cast<i128>(ctx.dt) * spec.y1, m) != 0) {
    WellDefinedResult res;
    res.ok = false;
    res.failed = WellDefinedCondition::One;
    res.detail = "(d,t)*y1 != 0 (mod m)";
    return res;
  }
  // Condition (1) gives m | t*y1 and m | (r-1)*y1, so both quotients are exact.
  const i64 q_t = static_cast<i64>(static_cast<i128>(t) * spec.y1 / m);
  const i64 q_r = static_cast<i64>(static_cast<i128>(r - 1) * spec.y1 / m);

  const i64 s1 = nt::pow_mod(r, spec.y1, n);
  const i64 s2 = nt::pow_mod(r, spec.y2, n);

  const i64 lhs2 = nt::mod_reduce(
      static_cast<i128>(spec.x2) * nt::geom_sum(m, s2, n) + static_cast<i128>(t) * spec.y2 -
          static_cast<i128>(spec.x1) * nt::geom_sum(t, s1, n) -
          static_cast<i128>(nt::mod_reduce(q_t, n)) * t,
      n);
  if (lhs2 != 0) {
    WellDefinedResult res;
    res.ok = false;
    res.failed = WellDefinedCondition::Two;
    res.detail = "x2*[m] + t*y2 - x1*[t] - (t*y1/m)*t != 0 (mod n)";
    return res;
  }

  const i64 lhs3 =
      nt::mod_reduce(static_cast<i128>(s1 - 1) * spec.x2 +
                         static_cast<i128>(nt::geom_sum(r, s1, n) - s2) * spec.x1 +
                         static_cast<i128>(nt::mod_reduce(q_r, n)) * t,
                     n);
  if (lhs3 != 0) {
    WellDefinedResult res;
    res.ok = false;
    res.failed = WellDefinedCondition::Three;
    res.detail = "(r^y1 - 1)*x2 + ([r] - r^y2)*x1 + ((r-1)*y1/m)*t != 0 (mod n)";
    return res;
  }
  return {};
}

Element apply(const GroupContext& ctx, const EndoSpec& spec, const Element& e) {
  const i64 n = ctx.pres.n, m = ctx.pres.m, t = ctx.pres.t, r = ctx.pres.r;
  const i64 s1 = nt::pow_mod(r, spec.y1, n);
  const i64 s2 = nt::pow_mod(r, spec.y2, n);

  const i64 head = nt::mod_reduce(static_cast<i128>(spec.x1) * nt::geom_sum(e.u, s1, n), n);
  const i64 twist = nt::pow_mod(s1, e.u, n);  // r^(y1 u) mod n
  const i64 tail = nt::mod_reduce(static_cast<i128>(twist) * spec.x2 % n * nt::geom_sum(e.v, s2, n), n);

  const i128 b_exp = static_cast<i128>(spec.y1) * e.u + static_cast<i128>(spec.y2) * e.v;
  const i64 wraps = nt::mod_reduce(b_exp / m, n);  // b^m = a^t is central
  const i64 u = nt::mod_reduce(static_cast<i128>(head) + tail + static_cast<i128>(t) * wraps, n);
  return {u, static_cast<i64>(b_exp % m)};
}

bool is_well_defined_oracle(const GroupContext& ctx, const EndoSpec& spec) {
  const Element sa{spec.x1, spec.y1};
  const Element sb{spec.x2, spec.y2};
  const Element e = identity_element();
  if (pow(ctx, sa, ctx.pres.n) != e) return false;
  if (pow(ctx, sb, ctx.pres.m) != pow(ctx, sa, ctx.pres.t)) return false;
  const Element conj = mul(ctx, sb, mul(ctx, sa, inv(ctx, sb)));
  return conj == pow(ctx, sa, ctx.pres.r);
}

EndoSpec compose(const GroupContext& ctx, const EndoSpec& s1, const EndoSpec& s2) {
  const Element img_a = apply(ctx, s1, Element{s2.x1, s2.y1});
  const Element img_b = apply(ctx, s1, Element{s2.x2, s2.y2});
  return {img_a.u, img_a.v, img_b.u, img_b.v};
}

std::string format_spec(const EndoSpec& spec) {
  std::ostringstream os;
  os << spec.x1 << "," << spec.y1 << "," << spec.x2 << "," << spec.y2;
  return os.str();
}

std::optional<EndoSpec> parse_spec(const std::string& text) {
  std::istringstream is(text);
  i64 vals[4];
  char sep;
  for (int k = 0; k < 4; ++k) {
    if (k > 0 && (!(is >> sep) || sep != ',')) return std::nullopt;
    if (!(is >> vals[k])) return std::nullopt;
  }
  std::string rest;
  if (is >> rest) return std::nullopt;
  return EndoSpec{vals[0], vals[1], vals[2], vals[3]};
}

}  // namespace metacyclic
