#pragma once

// Exact normal-form arithmetic in H(n,m;t,r). Every element is written
// uniquely as a^u b^v with 0 <= u < n, 0 <= v < m, so equality is field-wise
// comparison and |H| = n*m. Canonical form is restored eagerly after every
// operation (reduce v via b^m = a^t first, then u mod n).

#include <optional>
#include <string>
#include <vector>

#include "metacyclic/presentation.hpp"

namespace metacyclic {

// Context carrying only the group law, valid for any presentation satisfying
// the defining congruences (t | n not required). Element arithmetic and the
// relation-checking oracle read nothing else; the profile-driven machinery
// requires the full build_context.
GroupContext arithmetic_context(const Presentation& pres);

struct Element {
  i64 u = 0;
  i64 v = 0;

  friend bool operator==(const Element&, const Element&) = default;
  friend bool operator<(const Element& a, const Element& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

inline Element identity_element() { return {0, 0}; }

bool is_canonical(const GroupContext& ctx, const Element& e);

// Canonical form of the word a^u b^v for arbitrary integer exponents
// (b^m = a^t with a^t central, so excess b-exponent folds into the a-part).
Element canonicalize(const GroupContext& ctx, i64 u, i64 v);

// (a^u1 b^v1)(a^u2 b^v2) = a^(u1 + r^v1 u2) b^(v1+v2), then canonicalize.
Element mul(const GroupContext& ctx, const Element& e1, const Element& e2);

Element inv(const GroupContext& ctx, const Element& e);

// (a^u b^v)^k = a^(u * [k]_{r^v}) b^(vk), with the central a^t factors from
// reducing b^(vk) folded in. O(log k).
Element pow(const GroupContext& ctx, const Element& e, i64 k);

// [g, h] = g h g^-1 h^-1; lands in <a>.
Element commutator(const GroupContext& ctx, const Element& e1, const Element& e2);

// Least k >= 1 with e^k = identity; divides n*m.
i64 element_order(const GroupContext& ctx, const Element& e);

// Precomputed table of r^v mod n, cutting a multiplication to a handful of
// machine operations. Used wherever all n*m elements get scanned.
class MulTable {
 public:
  explicit MulTable(const Presentation& pres);

  Element mul(const Element& e1, const Element& e2) const {
    i64 u = (e1.u + rpow_[static_cast<std::size_t>(e1.v)] * e2.u) % n_;
    i64 v = e1.v + e2.v;
    if (v >= m_) {
      v -= m_;
      u = (u + t_) % n_;
    }
    return {u, v};
  }

  i64 rpow(i64 v) const { return rpow_[static_cast<std::size_t>(v)]; }

 private:
  i64 n_, m_, t_;
  std::vector<i64> rpow_;
};

constexpr i64 kDefaultOracleMaxElements = 10000;

// All n*m canonical elements in lexicographic (u, v) order. Throws
// resource_limit_error when n*m exceeds max_elements.
std::vector<Element> all_elements(const GroupContext& ctx,
                                  i64 max_elements = kDefaultOracleMaxElements);

// "a^u*b^v"
std::string format_element(const Element& e);
// Accepts "a^u*b^v" or "(u,v)".
std::optional<Element> parse_element(const std::string& text);

}  // namespace metacyclic
