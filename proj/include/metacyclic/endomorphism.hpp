#pragma once

// Generator-image maps sigma: a -> a^x1 b^y1, b -> a^x2 b^y2, the congruence
// test deciding whether sigma extends to a homomorphism of H, and evaluation
// of sigma on arbitrary elements through the closed formula
//
//   a^u b^v -> a^( x1 [u]_{r^y1} + r^(y1 u) x2 [v]_{r^y2} ) b^(y1 u + y2 v).
//
// A map is well-defined iff
//   (1) (d,t) y1 = 0 (mod m)
//   (2) x2 [m]_{r^y2} + t y2 - x1 [t]_{r^y1} - (t y1 / m) t = 0 (mod n)
//   (3) (r^y1 - 1) x2 + ([r]_{r^y1} - r^y2) x1 + ((r-1) y1 / m) t = 0 (mod n)
// where the divisions by m are exact once (1) holds; (1) is always checked
// first so no undefined division is ever formed.

#include <optional>
#include <string>

#include "metacyclic/group.hpp"

namespace metacyclic {

struct EndoSpec {
  i64 x1 = 0;
  i64 y1 = 0;
  i64 x2 = 0;
  i64 y2 = 0;

  friend bool operator==(const EndoSpec&, const EndoSpec&) = default;
};

// Canonical identity quadruple. For m = 1 the element b coincides with a^t,
// so its canonical form has y2 = 0 and x2 = t mod n; canonicalize handles
// the degenerate shapes uniformly.
inline EndoSpec identity_spec(const GroupContext& ctx) {
  const Element a = canonicalize(ctx, 1, 0);
  const Element b = canonicalize(ctx, 0, 1);
  return {a.u, a.v, b.u, b.v};
}

// Lexicographic (y1, y2, x1, x2): the enumeration and report order.
struct EndoSpecYOrder {
  bool operator()(const EndoSpec& a, const EndoSpec& b) const {
    if (a.y1 != b.y1) return a.y1 < b.y1;
    if (a.y2 != b.y2) return a.y2 < b.y2;
    if (a.x1 != b.x1) return a.x1 < b.x1;
    return a.x2 < b.x2;
  }
};

bool is_canonical(const GroupContext& ctx, const EndoSpec& spec);

enum class WellDefinedCondition { One, Two, Three };

struct WellDefinedResult {
  bool ok = true;
  std::optional<WellDefinedCondition> failed;
  std::string detail;

  explicit operator bool() const { return ok; }
};

// Decides the three congruences above, reporting the first failure.
// Requires a normalized context (t | n) and a canonical spec.
WellDefinedResult is_well_defined(const GroupContext& ctx, const EndoSpec& spec);

// Image of e under sigma, canonicalized. Meaningful as a homomorphism image
// only when the spec is well-defined.
Element apply(const GroupContext& ctx, const EndoSpec& spec, const Element& e);

// Checks the three defining relations directly with group arithmetic:
//   sigma(a)^n = e,  sigma(b)^m = sigma(a)^t,  sigma(b)sigma(a)sigma(b)^-1 = sigma(a)^r.
// Independent of the congruence path; must agree with is_well_defined.
bool is_well_defined_oracle(const GroupContext& ctx, const EndoSpec& spec);

// Quadruple of sigma1 after sigma2 (apply sigma1 to sigma2's generator images).
EndoSpec compose(const GroupContext& ctx, const EndoSpec& s1, const EndoSpec& s2);

// "x1,y1,x2,y2" in decimal.
std::string format_spec(const EndoSpec& spec);
std::optional<EndoSpec> parse_spec(const std::string& text);

}  // namespace metacyclic
