#pragma once

// Brute-force automorphism authority. Decides automorphy by checking the
// three defining relations with plain group arithmetic and then testing
// injectivity of the full image map. Deliberately ignorant of prime
// profiles, Lambda classes and every congruence shortcut; this module is the
// ground truth the theorem predicate is validated against.

#include <chrono>
#include <cstdint>
#include <vector>

#include "metacyclic/automorphism.hpp"

namespace metacyclic {

constexpr i64 kDefaultOracleMaxQuadruples = 200000000;  // 2e8

struct OracleReport {
  Presentation pres;
  i64 total_quadruples = 0;
  std::vector<EndoSpec> automorphisms;  // (y1, y2, x1, x2)-lexicographic
  std::chrono::milliseconds elapsed{0};
};

// True iff spec passes the relation checks and maps the n*m elements onto
// n*m distinct images. Throws resource_limit_error when n*m > max_elements.
bool is_automorphism_brute(const GroupContext& ctx, const EndoSpec& spec,
                           i64 max_elements = kDefaultOracleMaxElements);

struct OracleOptions {
  i64 max_elements = kDefaultOracleMaxElements;
  i64 max_quadruples = kDefaultOracleMaxQuadruples;
  int workers = 1;
};

// Scans all n^2 m^2 canonical quadruples. Deterministic and independent of
// worker count. Throws resource_limit_error over budget (the theorem-based
// enumeration has no such limit).
OracleReport brute_enumerate(const GroupContext& ctx, const OracleOptions& opts = {});

struct Disagreement {
  EndoSpec spec;
  bool theorem_accepted = false;
  bool oracle_accepted = false;
  TheoremVerdict verdict;  // the theorem side's reasoning
};

struct EquivalenceOptions {
  // Full sweep below these; uniform sampling above.
  i64 full_max_elements = 120;
  i64 full_max_quadruples = kDefaultOracleMaxQuadruples;
  i64 sample_accepted = 10000;
  i64 sample_rejected = 10000;
  std::uint64_t seed = 20260808;
  i64 max_elements = kDefaultOracleMaxElements;
  int workers = 1;
  std::size_t max_reported = 64;  // disagreements kept in the report
};

struct EquivalenceReport {
  bool sampled = false;
  bool consistent = false;
  i64 theorem_count = 0;
  i64 oracle_count = -1;  // full mode only
  i64 checked_accepted = 0;  // sampled mode
  i64 checked_rejected = 0;
  i64 disagreement_count = 0;
  std::vector<Disagreement> disagreements;  // truncated to max_reported
  std::chrono::milliseconds elapsed{0};
};

// Compares the theorem-enumerated set against the oracle: exact set equality
// when the group fits the full-sweep budget, otherwise spot-checks random
// accepted and rejected quadruples brute-force.
EquivalenceReport verify_equivalence(const GroupContext& ctx, const EquivalenceOptions& opts = {});

}  // namespace metacyclic
