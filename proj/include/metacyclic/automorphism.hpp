#pragma once

// The automorphism criterion for H(n,m;t,r) as an executable predicate, plus
// enumeration of Aut(H) and group operations on it.
//
// A well-defined sigma (see endomorphism.hpp) is an automorphism iff it is
// injective, which splits into two independent parts:
//
//  * injectivity of the induced map on the abelianization
//    H^ab = < A, B | d A = 0, m B = t A >, d = (r-1, n). Per prime p this is
//    a surjectivity-mod-p test on the columns (x1,y1), (x2,y2) together with
//    the relation columns (d,0), (-t,m); clause I below spells it out per
//    Lambda-class. (For p | n with p not dividing r-1 the commutator part
//    contributes the extra unit condition p does not divide x1.)
//
//  * per-prime reductions of the two exponent congruences: clause II's
//    order conditions (m0 | y1, m0 | y2 - 1) for the primes outside r-1, and
//    clauses III-VI for the primes inside, where moduli p^(alpha-delta) with
//    nonpositive exponent degenerate to 1 and impose nothing.

#include <string>
#include <vector>

#include "metacyclic/endomorphism.hpp"

namespace metacyclic {

enum class Clause { WellDef, I, II, III, IV, V, VI };

const char* clause_name(Clause c);

struct TheoremVerdict {
  bool accepted = true;
  std::optional<Clause> failed_clause;
  std::string detail;

  explicit operator bool() const { return accepted; }
};

// Evaluates, in order: well-definedness, then clauses I..VI. The clauses are
// conjunctive, so the order only affects which failure gets reported.
// Requires a normalized context (t | n) and a canonical spec.
TheoremVerdict theorem_accepts(const GroupContext& ctx, const EndoSpec& spec);

// All accepted quadruples, each exactly once, in lexicographic
// (y1, y2, x1, x2) order. The y-grid is pre-filtered by the divisibility
// conditions of clauses I/II before the x-loops run; results are merged
// deterministically regardless of worker count.
std::vector<EndoSpec> enumerate_automorphisms(const GroupContext& ctx, int workers = 1);

// |Aut(H)|; always >= 1 since the identity is accepted.
i64 count_automorphisms(const GroupContext& ctx, int workers = 1);

// Inverse automorphism, found as spec^(k-1) where k is the order of spec
// under composition. Throws std::invalid_argument for non-accepted specs.
EndoSpec aut_inverse(const GroupContext& ctx, const EndoSpec& spec);

}  // namespace metacyclic
