// Command-line front end: validation, normalization, profiling, enumeration,
// oracle verification and element arithmetic for metacyclic groups H(n,m;t,r).
// All arithmetic lives in the library; this file only parses flags and
// serializes results.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "metacyclic/errors.hpp"
#include "metacyclic/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace metacyclic;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitResourceLimit = 2;
constexpr int kExitUsage = 3;

struct CliConfig {
  std::string pres_text;
  std::string quad_text;
  std::string out_path;
  std::string format = "json";
  int workers = 1;
  i64 oracle_budget = kDefaultOracleMaxElements;
  std::string engine = "theorem";

  // elem subcommand
  std::string elem_op;
  std::string elem_a;
  std::string elem_b;
  i64 elem_k = 0;
};

std::ostream& output_stream(const CliConfig& cfg, std::ofstream& file) {
  if (cfg.out_path.empty()) return std::cout;
  file.open(cfg.out_path);
  if (!file) throw std::runtime_error("cannot open output file: " + cfg.out_path);
  return file;
}

Presentation parse_and_validate(const CliConfig& cfg) {
  const auto parsed = parse_presentation(cfg.pres_text);
  if (!parsed) {
    throw std::invalid_argument("--pres expects \"n,m,t,r\" with positive integers");
  }
  return validate(parsed->n, parsed->m, parsed->t, parsed->r);
}

// Commands downstream of profiling operate on the normalized presentation;
// quadruples refer to its generators.
GroupContext context_for(const CliConfig& cfg) { return build_context(normalize(parse_and_validate(cfg))); }

json presentation_json(const Presentation& p) {
  return json{{"schema", "1"}, {"n", p.n}, {"m", p.m}, {"t", p.t}, {"r", p.r}};
}

json spec_json(const EndoSpec& s) {
  return json{{"x1", s.x1}, {"y1", s.y1}, {"x2", s.x2}, {"y2", s.y2}};
}

int cmd_validate(const CliConfig& cfg, std::ostream& os) {
  const Presentation pres = parse_and_validate(cfg);
  if (cfg.format == "json") {
    json j = presentation_json(pres);
    j["valid"] = true;
    os << j.dump() << "\n";
  } else {
    os << "valid: H(" << pres.n << "," << pres.m << ";" << pres.t << "," << pres.r << ")\n";
  }
  return kExitOk;
}

int cmd_normalize(const CliConfig& cfg, std::ostream& os) {
  const Presentation norm = normalize(parse_and_validate(cfg));
  if (cfg.format == "json") {
    os << presentation_json(norm).dump() << "\n";
  } else {
    os << format_presentation(norm) << "\n";
  }
  return kExitOk;
}

int cmd_profile(const CliConfig& cfg, std::ostream& os) {
  const GroupContext ctx = context_for(cfg);
  if (cfg.format == "json") {
    json j = presentation_json(ctx.pres);
    j["d"] = ctx.d;
    if (ctx.epsilon) j["epsilon"] = *ctx.epsilon;
    j["m0"] = ctx.m0;
    json profs = json::array();
    for (const auto& p : ctx.profiles) {
      json e{{"p", p.p},       {"alpha", p.alpha}, {"beta", p.beta},
             {"gamma", p.gamma}};
      if (p.delta.is_finite()) {
        e["delta"] = p.delta.value;
      } else {
        e["delta"] = "infinity";
      }
      e["class"] = lambda_class_name(p.lambda_class);
      profs.push_back(e);
    }
    j["profiles"] = profs;
    os << j.dump() << "\n";
  } else {
    os << "H(" << ctx.pres.n << "," << ctx.pres.m << ";" << ctx.pres.t << "," << ctx.pres.r
       << "): d=" << ctx.d;
    if (ctx.epsilon) os << " epsilon=" << *ctx.epsilon;
    os << " m0=" << ctx.m0 << "\n";
    for (const auto& p : ctx.profiles) {
      os << "  p=" << p.p << " alpha=" << p.alpha << " beta=" << p.beta << " gamma=" << p.gamma
         << " delta=";
      if (p.delta.is_finite()) {
        os << p.delta.value;
      } else {
        os << "infinity";
      }
      os << " class=" << lambda_class_name(p.lambda_class) << "\n";
    }
  }
  return kExitOk;
}

int cmd_count(const CliConfig& cfg, std::ostream& os) {
  const GroupContext ctx = context_for(cfg);
  const i64 order = count_automorphisms(ctx, cfg.workers);
  if (cfg.format == "json") {
    json j = presentation_json(ctx.pres);
    j["aut_order"] = order;
    os << j.dump() << "\n";
  } else {
    os << order << "\n";
  }
  return kExitOk;
}

int cmd_enumerate(const CliConfig& cfg, std::ostream& os) {
  const GroupContext ctx = context_for(cfg);
  if (cfg.engine == "oracle") {
    OracleOptions opts;
    opts.max_elements = cfg.oracle_budget;
    opts.workers = cfg.workers;
    const OracleReport report = brute_enumerate(ctx, opts);
    for (const auto& s : report.automorphisms) {
      os << (cfg.format == "json" ? spec_json(s).dump() : format_spec(s)) << "\n";
    }
    if (cfg.format == "json") {
      json summary = presentation_json(ctx.pres);
      summary["total_quadruples"] = report.total_quadruples;
      summary["aut_order"] = report.automorphisms.size();
      summary["elapsed_ms"] = report.elapsed.count();
      os << summary.dump() << "\n";
    } else {
      os << "# " << report.automorphisms.size() << " of " << report.total_quadruples
         << " quadruples in " << report.elapsed.count() << " ms\n";
    }
    return kExitOk;
  }
  const auto specs = enumerate_automorphisms(ctx, cfg.workers);
  for (const auto& s : specs) {
    os << (cfg.format == "json" ? spec_json(s).dump() : format_spec(s)) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& os) {
  const GroupContext ctx = context_for(cfg);
  EquivalenceOptions opts;
  opts.workers = cfg.workers;
  opts.max_elements = cfg.oracle_budget;
  const auto rep = verify_equivalence(ctx, opts);
  if (cfg.format == "json") {
    json j = presentation_json(ctx.pres);
    j["mode"] = rep.sampled ? "sampled" : "full";
    j["consistent"] = rep.consistent;
    j["aut_order"] = rep.theorem_count;
    if (!rep.sampled) j["oracle_order"] = rep.oracle_count;
    if (rep.sampled) {
      j["checked_accepted"] = rep.checked_accepted;
      j["checked_rejected"] = rep.checked_rejected;
    }
    j["disagreements"] = rep.disagreement_count;
    json items = json::array();
    for (const auto& d : rep.disagreements) {
      json e = spec_json(d.spec);
      e["theorem"] = d.theorem_accepted;
      e["oracle"] = d.oracle_accepted;
      e["failed_clause"] =
          d.verdict.failed_clause ? clause_name(*d.verdict.failed_clause) : "";
      e["detail"] = d.verdict.detail;
      items.push_back(e);
    }
    if (!items.empty()) j["items"] = items;
    j["elapsed_ms"] = rep.elapsed.count();
    os << j.dump() << "\n";
  } else {
    if (rep.consistent) {
      os << "theorem == oracle: " << rep.theorem_count << " automorphisms";
      if (rep.sampled) {
        os << " (sampled: " << rep.checked_accepted << " accepted + " << rep.checked_rejected
           << " rejected re-checked)";
      }
      os << "\n";
    } else {
      os << "theorem != oracle: " << rep.disagreement_count << " disagreements\n";
      for (const auto& d : rep.disagreements) {
        os << "  " << format_spec(d.spec) << " theorem=" << d.theorem_accepted
           << " oracle=" << d.oracle_accepted << " clause="
           << (d.verdict.failed_clause ? clause_name(*d.verdict.failed_clause) : "-") << " "
           << d.verdict.detail << "\n";
      }
    }
  }
  return rep.consistent ? kExitOk : kExitValidation;
}

int cmd_check_quadruple(const CliConfig& cfg, std::ostream& os) {
  const GroupContext ctx = context_for(cfg);
  const auto parsed = parse_spec(cfg.quad_text);
  if (!parsed) throw std::invalid_argument("--quad expects \"x1,y1,x2,y2\"");
  EndoSpec spec = *parsed;
  if (!is_canonical(ctx, spec)) {
    throw std::invalid_argument("--quad values must satisfy 0 <= x < n, 0 <= y < m");
  }
  const auto verdict = theorem_accepts(ctx, spec);
  if (cfg.format == "json") {
    json j = presentation_json(ctx.pres);
    j["quad"] = spec_json(spec);
    j["accepted"] = verdict.accepted;
    if (verdict.failed_clause) {
      j["failed_clause"] = clause_name(*verdict.failed_clause);
      j["detail"] = verdict.detail;
    }
    os << j.dump() << "\n";
  } else {
    if (verdict.accepted) {
      os << "accepted\n";
    } else {
      os << "rejected at clause " << clause_name(*verdict.failed_clause) << ": " << verdict.detail
         << "\n";
    }
  }
  return kExitOk;
}

int cmd_elem(const CliConfig& cfg, std::ostream& os) {
  const GroupContext ctx = context_for(cfg);
  const auto parse_canonical = [&](const std::string& text) {
    const auto e = parse_element(text);
    if (!e) throw std::invalid_argument("element expects \"a^u*b^v\" or \"(u,v)\": " + text);
    return canonicalize(ctx, e->u, e->v);
  };

  const auto emit = [&](const Element& e) {
    if (cfg.format == "json") {
      json j{{"schema", "1"}, {"u", e.u}, {"v", e.v}, {"text", format_element(e)}};
      os << j.dump() << "\n";
    } else {
      os << format_element(e) << "\n";
    }
  };

  if (cfg.elem_op == "mul") {
    emit(mul(ctx, parse_canonical(cfg.elem_a), parse_canonical(cfg.elem_b)));
  } else if (cfg.elem_op == "inv") {
    emit(inv(ctx, parse_canonical(cfg.elem_a)));
  } else if (cfg.elem_op == "pow") {
    if (cfg.elem_k < 0) throw std::invalid_argument("--k must be >= 0");
    emit(pow(ctx, parse_canonical(cfg.elem_a), cfg.elem_k));
  } else if (cfg.elem_op == "order") {
    const i64 ord = element_order(ctx, parse_canonical(cfg.elem_a));
    if (cfg.format == "json") {
      json j{{"schema", "1"}, {"order", ord}};
      os << j.dump() << "\n";
    } else {
      os << ord << "\n";
    }
  } else {
    throw std::invalid_argument("--op must be one of mul, inv, pow, order");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic and automorphism enumeration for metacyclic groups H(n,m;t,r)"};
  app.require_subcommand(1);

  CliConfig cfg;
  app.add_option("--pres", cfg.pres_text, "presentation as n,m,t,r")->required();
  app.add_option("--out", cfg.out_path, "write output to this file instead of stdout");
  app.add_option("--format", cfg.format, "json or plain")
      ->check(CLI::IsMember({"json", "plain"}))
      ->capture_default_str();
  app.add_option("--workers", cfg.workers, "worker threads for enumeration/oracle")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--oracle-budget", cfg.oracle_budget, "max group order the oracle will scan")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // Let global flags appear after the subcommand too.
  app.fallthrough();

  auto* validate_cmd = app.add_subcommand("validate", "check the defining congruences");
  auto* normalize_cmd = app.add_subcommand("normalize", "rewrite so that t divides n");
  auto* profile_cmd = app.add_subcommand("profile", "per-prime invariants, d, epsilon, m0");
  auto* count_cmd = app.add_subcommand("count", "order of the automorphism group");
  auto* enumerate_cmd = app.add_subcommand("enumerate", "stream all automorphism quadruples");
  enumerate_cmd->add_option("--engine", cfg.engine, "theorem (criterion) or oracle (brute force)")
      ->check(CLI::IsMember({"theorem", "oracle"}))
      ->capture_default_str();
  auto* verify_cmd = app.add_subcommand("verify", "compare the criterion against brute force");
  auto* check_cmd = app.add_subcommand("check-quadruple", "explain one quadruple");
  check_cmd->add_option("--quad", cfg.quad_text, "quadruple as x1,y1,x2,y2")->required();
  auto* elem_cmd = app.add_subcommand("elem", "element arithmetic in H");
  elem_cmd->add_option("--op", cfg.elem_op, "mul | inv | pow | order")->required();
  elem_cmd->add_option("--a", cfg.elem_a, "first element, a^u*b^v or (u,v)")->required();
  elem_cmd->add_option("--b", cfg.elem_b, "second element (mul)");
  elem_cmd->add_option("--k", cfg.elem_k, "exponent (pow)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    std::ofstream file;
    std::ostream& os = output_stream(cfg, file);
    if (validate_cmd->parsed()) return cmd_validate(cfg, os);
    if (normalize_cmd->parsed()) return cmd_normalize(cfg, os);
    if (profile_cmd->parsed()) return cmd_profile(cfg, os);
    if (count_cmd->parsed()) return cmd_count(cfg, os);
    if (enumerate_cmd->parsed()) return cmd_enumerate(cfg, os);
    if (verify_cmd->parsed()) return cmd_verify(cfg, os);
    if (check_cmd->parsed()) return cmd_check_quadruple(cfg, os);
    if (elem_cmd->parsed()) return cmd_elem(cfg, os);
    std::cerr << "no subcommand\n";
    return kExitUsage;
  } catch (const validation_error& e) {
    std::cerr << e.what() << "\n";
    return kExitValidation;
  } catch (const resource_limit_error& e) {
    std::cerr << e.what() << "\n";
    return kExitResourceLimit;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
