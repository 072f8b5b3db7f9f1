#include "metacyclic/presentation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "metacyclic/errors.hpp"

namespace metacyclic {

using nt::i128;

namespace {

i64 wrap_exponent(i64 x, i64 n) {
  // Canonical representative in [1, n].
  i64 r = x % n;
  return r <= 0 ? r + n : r;
}

void check_range(i64 x, const char* name) {
  if (x < 1 || x > kMaxParameter) {
    throw std::invalid_argument(std::string("presentation: ") + name +
                                " must lie in [1, 2^31-1]");
  }
}

}  // namespace

Presentation validate(i64 n, i64 m, i64 t, i64 r) {
  check_range(n, "n");
  check_range(m, "m");
  check_range(t, "t");
  check_range(r, "r");
  Presentation pres{n, m, wrap_exponent(t, n), wrap_exponent(r, n)};
  if (nt::pow_mod(pres.r, pres.m, pres.n) != 1 % pres.n) {
    std::ostringstream os;
    os << "invalid presentation: r^m - 1 != 0 (mod n) for (n,m,t,r)=("
       << n << "," << m << "," << t << "," << r << ")";
    throw validation_error(os.str());
  }
  if (nt::mod_reduce(static_cast<i128>(pres.t) * (pres.r - 1), pres.n) != 0) {
    std::ostringstream os;
    os << "invalid presentation: t(r-1) != 0 (mod n) for (n,m,t,r)=("
       << n << "," << m << "," << t << "," << r << ")";
    throw validation_error(os.str());
  }
  return pres;
}

std::optional<Presentation> try_validate(i64 n, i64 m, i64 t, i64 r) {
  if (n < 1 || m < 1 || t < 1 || r < 1 || n > kMaxParameter || m > kMaxParameter ||
      t > kMaxParameter || r > kMaxParameter) {
    return std::nullopt;
  }
  Presentation pres{n, m, wrap_exponent(t, n), wrap_exponent(r, n)};
  if (nt::pow_mod(pres.r, pres.m, pres.n) != 1 % pres.n) return std::nullopt;
  if (nt::mod_reduce(static_cast<i128>(pres.t) * (pres.r - 1), pres.n) != 0) return std::nullopt;
  return pres;
}

Presentation normalize(const Presentation& pres) {
  if (pres.is_normalized()) return pres;

  const i64 n = pres.n, m = pres.m, t = pres.t, r = pres.r;
  const auto bez = nt::gcd_ext(n, t);
  const i64 g = bez.g;  // (n, t)

  // v is determined mod n/g; take the representative of minimal absolute
  // value, ties toward the positive one.
  const i64 M = n / g;
  i64 v = ((bez.v % M) + M) % M;
  if (2 * v > M) v -= M;

  // w = product of prime factors of m that do not divide v (v = 0 would give
  // the empty product, but v != 0 whenever t does not divide n).
  i64 w = 1;
  for (const auto& [p, e] : nt::factorize(m)) {
    (void)e;
    if (v % p != 0) w *= p;
  }

  const i64 v_prime = v + w * M;
  if (std::gcd(v_prime, m) != 1) {
    throw std::logic_error("normalize: v' not coprime to m");
  }
  const i64 r_new = wrap_exponent(nt::pow_mod(r, v_prime, n), n);
  return validate(n, m, g, r_new);
}

const char* lambda_class_name(LambdaClass c) {
  switch (c) {
    case LambdaClass::Lambda1: return "Lambda1";
    case LambdaClass::Lambda2: return "Lambda2";
    case LambdaClass::LambdaPrime: return "Lambda'";
  }
  return "?";
}

const PrimeProfile* GroupContext::find_profile(i64 p) const {
  for (const auto& prof : profiles) {
    if (prof.p == p) return &prof;
  }
  return nullptr;
}

namespace {

void check_profile_consistency(const GroupContext& ctx) {
  // Consequences of the presentation congruences; a violation means a bug.
  for (const auto& prof : ctx.profiles) {
    const i64 p = prof.p;
    if (prof.alpha > 0) {
      const auto deg_d = nt::padic_deg(p, ctx.d);
      const nt::Valuation min_ad =
          prof.delta < nt::Valuation::finite(prof.alpha) ? prof.delta
                                                         : nt::Valuation::finite(prof.alpha);
      if (!(deg_d == min_ad)) throw std::logic_error("profile: deg_p(d) != min(alpha, delta)");
    }
    switch (prof.lambda_class) {
      case LambdaClass::Lambda1: {
        // alpha - delta <= gamma <= alpha
        if (prof.gamma > prof.alpha) throw std::logic_error("profile: gamma > alpha");
        if (prof.delta.is_finite() && prof.gamma < prof.alpha - prof.delta.value) {
          throw std::logic_error("profile: gamma < alpha - delta");
        }
        // delta + beta >= alpha except in the (p, delta) = (2, 1), beta > 0
        // case, where deg_2(r+1) + beta >= alpha instead.
        const bool two_adic_special = p == 2 && prof.delta == 1 && prof.beta > 0;
        if (two_adic_special) {
          if (!ctx.epsilon || *ctx.epsilon + prof.beta < prof.alpha) {
            throw std::logic_error("profile: epsilon + beta < alpha");
          }
        } else if (prof.delta.is_finite() && prof.delta.value + prof.beta < prof.alpha) {
          throw std::logic_error("profile: delta + beta < alpha");
        }
        break;
      }
      case LambdaClass::Lambda2:
        if (prof.gamma != prof.alpha) throw std::logic_error("profile: gamma != alpha on Lambda2");
        break;
      case LambdaClass::LambdaPrime:
        if (prof.gamma != 0) throw std::logic_error("profile: gamma != 0 off n");
        break;
    }
  }
}

}  // namespace

GroupContext build_context(const Presentation& pres) {
  if (!pres.is_normalized()) {
    throw std::invalid_argument("build_context: presentation must satisfy t | n");
  }
  GroupContext ctx;
  ctx.pres = pres;
  ctx.d = pres.r == 1 ? pres.n : std::gcd(pres.r - 1, pres.n);
  if (pres.r % 2 == 1) {
    ctx.epsilon = nt::padic_deg(2, pres.r + 1).value;
  }

  const auto fn = nt::factorize(pres.n);
  const auto fm = nt::factorize(pres.m);
  std::size_t i = 0, j = 0;
  while (i < fn.size() || j < fm.size()) {
    i64 p;
    i64 alpha = 0, beta = 0;
    if (i < fn.size() && (j >= fm.size() || fn[i].prime <= fm[j].prime)) {
      p = fn[i].prime;
      alpha = fn[i].exponent;
      ++i;
      if (j < fm.size() && fm[j].prime == p) {
        beta = fm[j].exponent;
        ++j;
      }
    } else {
      p = fm[j].prime;
      beta = fm[j].exponent;
      ++j;
    }
    PrimeProfile prof;
    prof.p = p;
    prof.alpha = alpha;
    prof.beta = beta;
    prof.gamma = nt::padic_deg(p, pres.t).value;  // t >= 1, finite
    prof.delta = nt::padic_deg(p, pres.r - 1);
    if (alpha == 0) {
      prof.lambda_class = LambdaClass::LambdaPrime;
    } else if (prof.delta > 0) {
      prof.lambda_class = LambdaClass::Lambda1;
    } else {
      prof.lambda_class = LambdaClass::Lambda2;
    }
    ctx.profiles.push_back(prof);
  }

  i64 m0 = 1;
  for (const auto& prof : ctx.profiles) {
    if (prof.lambda_class != LambdaClass::Lambda2) continue;
    i64 pk = 1;
    for (i64 e = 0; e < prof.alpha; ++e) pk *= prof.p;
    const i64 ord = nt::mul_order(pres.r, pk);
    m0 = std::lcm(m0, ord);
  }
  ctx.m0 = m0;

  ctx.dt = std::gcd(ctx.d, pres.t);
  ctx.y1_step = pres.m / std::gcd(pres.m, ctx.dt);

  check_profile_consistency(ctx);
  return ctx;
}

i64 mu(const GroupContext& ctx, i64 y1) {
  const PrimeProfile* two = ctx.find_profile(2);
  if (two == nullptr || two->lambda_class != LambdaClass::Lambda1) {
    throw std::invalid_argument("mu: defined only when 2 lies in Lambda1");
  }
  if (y1 < 0) throw std::invalid_argument("mu: y1 must be >= 0");
  if (!two->delta.is_finite()) return 0;
  const i64 alpha = two->alpha, beta = two->beta, gamma = two->gamma, delta = two->delta.value;
  if (gamma == beta) return 0;
  if (std::min(beta, gamma) != alpha - delta) return 0;
  if (!(nt::padic_deg(2, y1) == beta - delta)) return 0;
  if (alpha - delta - 1 < 0) return 0;  // feeds a congruence mod 2^(alpha-delta) <= 1, moot
  return i64{1} << (alpha - delta - 1);
}

std::string format_presentation(const Presentation& pres) {
  std::ostringstream os;
  os << pres.n << "," << pres.m << "," << pres.t << "," << pres.r;
  return os.str();
}

std::optional<Presentation> parse_presentation(const std::string& text) {
  std::istringstream is(text);
  i64 vals[4];
  char sep;
  for (int k = 0; k < 4; ++k) {
    if (k > 0 && (!(is >> sep) || sep != ',')) return std::nullopt;
    if (!(is >> vals[k])) return std::nullopt;
  }
  std::string rest;
  if (is >> rest) return std::nullopt;
  if (vals[0] < 1 || vals[1] < 1 || vals[2] < 1 || vals[3] < 1) return std::nullopt;
  return Presentation{vals[0], vals[1], vals[2], vals[3]};
}

}  // namespace metacyclic
