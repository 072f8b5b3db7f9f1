#include "metacyclic/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "metacyclic/errors.hpp"

namespace metacyclic {

using nt::i128;

namespace {

// Injectivity of the image map, walking the nm elements with one group
// multiplication each: img(u, v+1) = img(u, v) * sigma(b), row starts by
// img(u+1, 0) = img(u, 0) * sigma(a).
bool image_is_injective(const Presentation& pres, const MulTable& fg, const EndoSpec& spec,
                        std::vector<char>& seen) {
  const Element sa{spec.x1, spec.y1};
  const Element sb{spec.x2, spec.y2};
  std::fill(seen.begin(), seen.end(), 0);
  Element row = identity_element();
  for (i64 u = 0; u < pres.n; ++u) {
    Element img = row;
    for (i64 v = 0; v < pres.m; ++v) {
      char& slot = seen[static_cast<std::size_t>(img.u * pres.m + img.v)];
      if (slot) return false;
      slot = 1;
      img = fg.mul(img, sb);
    }
    row = fg.mul(row, sa);
  }
  return true;
}

void check_element_budget(const GroupContext& ctx, i64 max_elements, const char* who) {
  const i64 total = ctx.pres.n * ctx.pres.m;
  if (total > max_elements) {
    std::ostringstream os;
    os << who << ": |H| = " << total << " exceeds the oracle bound " << max_elements;
    throw resource_limit_error(os.str());
  }
}

}  // namespace

bool is_automorphism_brute(const GroupContext& ctx, const EndoSpec& spec, i64 max_elements) {
  check_element_budget(ctx, max_elements, "is_automorphism_brute");
  if (!is_well_defined_oracle(ctx, spec)) return false;
  const MulTable fg(ctx.pres);
  std::vector<char> seen(static_cast<std::size_t>(ctx.pres.n * ctx.pres.m));
  return image_is_injective(ctx.pres, fg, spec, seen);
}

OracleReport brute_enumerate(const GroupContext& ctx, const OracleOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const i64 n = ctx.pres.n, m = ctx.pres.m, t = ctx.pres.t, r = ctx.pres.r;
  check_element_budget(ctx, opts.max_elements, "brute_enumerate");
  const i128 total = static_cast<i128>(n) * n * m * m;
  if (total > opts.max_quadruples) {
    std::ostringstream os;
    os << "brute_enumerate: n^2 m^2 = " << static_cast<double>(total)
       << " quadruples exceed the budget " << opts.max_quadruples
       << "; use the theorem-based enumeration instead";
    throw resource_limit_error(os.str());
  }

  const MulTable fg(ctx.pres);
  const std::size_t nm = static_cast<std::size_t>(n * m);

  // Per-candidate powers, shared by every quadruple the candidate occurs in.
  std::vector<char> pow_n_is_id(nm);
  std::vector<Element> pow_t_of(nm), pow_m_of(nm), pow_r_of(nm), inv_of(nm);
  for (i64 x = 0; x < n; ++x) {
    for (i64 y = 0; y < m; ++y) {
      const Element e{x, y};
      const std::size_t idx = static_cast<std::size_t>(x * m + y);
      pow_n_is_id[idx] = pow(ctx, e, n) == identity_element();
      pow_t_of[idx] = pow(ctx, e, t);
      pow_m_of[idx] = pow(ctx, e, m);
      pow_r_of[idx] = pow(ctx, e, r);
      inv_of[idx] = inv(ctx, e);
    }
  }

  std::vector<std::pair<i64, i64>> pairs;  // (y1, y2) grid
  pairs.reserve(static_cast<std::size_t>(m * m));
  for (i64 y1 = 0; y1 < m; ++y1) {
    for (i64 y2 = 0; y2 < m; ++y2) pairs.push_back({y1, y2});
  }

  std::vector<std::vector<EndoSpec>> buckets(pairs.size());
  const auto scan_pair = [&](std::size_t idx, std::vector<char>& seen) {
    const auto [y1, y2] = pairs[idx];
    auto& out = buckets[idx];
    for (i64 x1 = 0; x1 < n; ++x1) {
      const std::size_t ia = static_cast<std::size_t>(x1 * m + y1);
      if (!pow_n_is_id[ia]) continue;  // sigma(a)^n != e
      const Element sa{x1, y1};
      const Element want_conj = pow_r_of[ia];
      for (i64 x2 = 0; x2 < n; ++x2) {
        const std::size_t ib = static_cast<std::size_t>(x2 * m + y2);
        if (!(pow_m_of[ib] == pow_t_of[ia])) continue;  // sigma(b)^m != sigma(a)^t
        const Element sb{x2, y2};
        const Element conj = fg.mul(sb, fg.mul(sa, inv_of[ib]));
        if (!(conj == want_conj)) continue;  // conjugation relation
        const EndoSpec spec{x1, y1, x2, y2};
        if (image_is_injective(ctx.pres, fg, spec, seen)) out.push_back(spec);
      }
    }
  };

  const int workers = std::max(1, opts.workers);
  if (workers == 1 || pairs.size() <= 1) {
    std::vector<char> seen(nm);
    for (std::size_t i = 0; i < pairs.size(); ++i) scan_pair(i, seen);
  } else {
    std::vector<std::thread> pool;
    const int count = std::min<int>(workers, static_cast<int>(pairs.size()));
    for (int w = 0; w < count; ++w) {
      pool.emplace_back([&, w]() {
        std::vector<char> seen(nm);
        for (std::size_t i = static_cast<std::size_t>(w); i < pairs.size();
             i += static_cast<std::size_t>(count)) {
          scan_pair(i, seen);
        }
      });
    }
    for (auto& th : pool) th.join();
  }

  OracleReport report;
  report.pres = ctx.pres;
  report.total_quadruples = static_cast<i64>(total);
  for (auto& bucket : buckets) {
    report.automorphisms.insert(report.automorphisms.end(), bucket.begin(), bucket.end());
  }
  // x1-major inside each (y1, y2) bucket: re-sort to x2-minor lexicographic.
  std::sort(report.automorphisms.begin(), report.automorphisms.end(), EndoSpecYOrder{});
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

EquivalenceReport verify_equivalence(const GroupContext& ctx, const EquivalenceOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const i64 n = ctx.pres.n, m = ctx.pres.m;
  EquivalenceReport report;

  const auto note = [&](const EndoSpec& spec, bool theo, bool orac) {
    ++report.disagreement_count;
    if (report.disagreements.size() < opts.max_reported) {
      report.disagreements.push_back({spec, theo, orac, theorem_accepts(ctx, spec)});
    }
  };

  const std::vector<EndoSpec> accepted = enumerate_automorphisms(ctx, opts.workers);
  report.theorem_count = static_cast<i64>(accepted.size());

  const i128 total_quads = static_cast<i128>(n) * n * m * m;
  const bool full = n * m <= opts.full_max_elements && total_quads <= opts.full_max_quadruples;

  if (full) {
    OracleOptions oo;
    oo.max_elements = std::max(opts.max_elements, n * m);
    oo.max_quadruples = opts.full_max_quadruples;
    oo.workers = opts.workers;
    const OracleReport oracle = brute_enumerate(ctx, oo);
    report.oracle_count = static_cast<i64>(oracle.automorphisms.size());

    std::size_t i = 0, j = 0;
    const EndoSpecYOrder less;
    while (i < accepted.size() || j < oracle.automorphisms.size()) {
      if (j >= oracle.automorphisms.size() ||
          (i < accepted.size() && less(accepted[i], oracle.automorphisms[j]))) {
        note(accepted[i], true, false);
        ++i;
      } else if (i >= accepted.size() || less(oracle.automorphisms[j], accepted[i])) {
        note(oracle.automorphisms[j], false, true);
        ++j;
      } else {
        ++i;
        ++j;
      }
    }
    report.consistent = report.disagreement_count == 0;
  } else {
    report.sampled = true;
    check_element_budget(ctx, opts.max_elements, "verify_equivalence");
    std::mt19937_64 rng(opts.seed);

    if (!accepted.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, accepted.size() - 1);
      for (i64 k = 0; k < opts.sample_accepted; ++k) {
        const EndoSpec spec = accepted[pick(rng)];
        ++report.checked_accepted;
        if (!is_automorphism_brute(ctx, spec, opts.max_elements)) note(spec, true, false);
      }
    }

    std::uniform_int_distribution<i64> pick_x(0, n - 1), pick_y(0, m - 1);
    const EndoSpecYOrder less;
    for (i64 k = 0; k < opts.sample_rejected; ++k) {
      EndoSpec spec;
      do {
        spec = EndoSpec{pick_x(rng), pick_y(rng), pick_x(rng), pick_y(rng)};
      } while (std::binary_search(accepted.begin(), accepted.end(), spec, less));
      ++report.checked_rejected;
      if (is_automorphism_brute(ctx, spec, opts.max_elements)) note(spec, false, true);
    }
    report.consistent = report.disagreement_count == 0;
  }

  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace metacyclic
