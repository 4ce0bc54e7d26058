#include "commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lagcert/certify.hpp"
#include "lagcert/fp_poly.hpp"
#include "lagcert/oracle.hpp"
#include "lagcert/polygon.hpp"

namespace lagcert::cli {

namespace {

using ojson = nlohmann::ordered_json;

const std::set<std::string> kTableSections{"s1",     "s2",      "s3",         "s4", "exp",
                                           "factorizations", "primes", "exceptions", "k1", "root"};

ojson violations_json(const std::vector<Violation>& vs) {
  ojson arr = ojson::array();
  for (const auto& v : vs) {
    arr.push_back({{"kind", to_string(v.kind)},
                   {"prime", v.prime.get_str()},
                   {"index", v.index},
                   {"message", v.message}});
  }
  return arr;
}

RatPoly divide(const IntPoly& f, const Integer& d) { return RatPoly(f) * make_rational(1, d); }

Integer factorial(std::int64_t m) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
  return r;
}

void print_usage_error(std::ostream& err, const std::string& what) { err << "error: " << what << "\n"; }

}  // namespace

InstanceParams to_params(const InstanceFlags& flags) {
  if (flags.m < 1) throw std::invalid_argument("-m must be at least 1");
  if (flags.phi.empty()) throw std::invalid_argument("--phi is required");
  InstanceParams p;
  p.m = flags.m;
  p.u = flags.u;
  p.v = flags.v;
  p.a_m = Integer(flags.a_m);
  p.phi = parse_poly(flags.phi);
  if (p.phi.degree() < 1 || !p.phi.is_monic()) throw std::invalid_argument("--phi must be monic of degree >= 1");
  const auto middle = static_cast<std::size_t>(flags.m - 1);
  std::vector<std::string> upper = flags.a;  // a_{m-1} .. a_1
  if (upper.empty()) upper.assign(middle, "1");
  if (upper.size() == 1 && middle > 1) upper.assign(middle, upper.front());
  if (upper.size() != middle) {
    throw std::invalid_argument("--a expects " + std::to_string(middle) + " values (a_{m-1} .. a_1) or one value");
  }
  p.a_parts.push_back(parse_poly(flags.a0));
  for (std::size_t i = upper.size(); i-- > 0;) p.a_parts.push_back(parse_poly(upper[i]));
  if (p.a_m == 0) throw std::invalid_argument("--am must be nonzero");
  if (p.v < 1) throw std::invalid_argument("-v must be positive");
  AlphaParam check(p.u, p.v);  // rejects gcd(u, v) != 1 and negative integers
  (void)check;
  return p;
}

std::string certificate_directory(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("LAGUERRE_CERT_HOME"); env != nullptr && *env != '\0') return env;
  return ".";
}

std::string certificate_filename(const InstanceParams& params) {
  return "certificate_m" + std::to_string(params.m) + "_u" + std::to_string(params.u) + "_v" +
         std::to_string(params.v) + ".json";
}

int cmd_construct(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  InstanceParams params;
  try {
    params = to_params(cfg.instance);
  } catch (const std::exception& e) {
    print_usage_error(err, e.what());
    return kExitInvalid;
  }
  const auto violations = check_hypotheses(params);
  const LaguerreInstance inst = build_instance_relaxed(params);
  const Integer vm = pow_int(Integer(static_cast<long>(params.v)), static_cast<std::uint64_t>(params.m));
  const RatPoly f = divide(inst.scaled_f(), vm);
  const RatPoly L = inst.laguerre_polynomial();
  if (cfg.json) {
    ojson j;
    j["m"] = params.m;
    j["alpha"] = rational_to_string(inst.alpha().value());
    j["b"] = ojson::array();
    for (const auto& b : inst.coeffs().b) j["b"].push_back(rational_to_string(b));
    j["f"] = to_string(f);
    j["L"] = to_string(L);
    j["hypotheses_ok"] = violations.empty();
    j["violations"] = violations_json(violations);
    out << j.dump(2) << "\n";
  } else {
    out << serialize_instance(params);
    out << "alpha = " << rational_to_string(inst.alpha().value()) << "\n";
    out << "b_0..b_m =";
    for (const auto& b : inst.coeffs().b) out << " " << rational_to_string(b);
    out << "\n";
    out << "f(x) = " << to_string(f) << "\n";
    out << "L(x) = f(x)/" << factorial(params.m).get_str() << " = " << to_string(L) << "\n";
    if (violations.empty()) {
      out << "hypotheses: satisfied\n";
    } else {
      for (const auto& v : violations) out << "hypothesis violated: " << to_string(v.kind) << ": " << v.message << "\n";
    }
  }
  return violations.empty() ? kExitOk : kExitInvalid;
}

int cmd_polygon(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  IntPoly f, phi;
  Integer p;
  try {
    if (cfg.f.empty() || cfg.instance.phi.empty() || cfg.p.empty()) {
      throw std::invalid_argument("polygon needs --f, --phi and -p");
    }
    f = parse_poly(cfg.f);
    phi = parse_poly(cfg.instance.phi);
    p = Integer(cfg.p);
    if (!is_prime(p)) throw std::invalid_argument("-p " + cfg.p + " is not prime");
    if (phi.degree() < 1 || !phi.is_monic()) throw std::invalid_argument("--phi must be monic of degree >= 1");
    if (f.is_zero()) throw std::invalid_argument("--f must be nonzero");
  } catch (const std::exception& e) {
    print_usage_error(err, e.what());
    return kExitInvalid;
  }
  const PhiExpansion e = phi_expand(f, phi);
  if (e.parts.front().is_zero()) {
    print_usage_error(err, "f is divisible by phi (constant part of the phi-expansion is zero)");
    return kExitInvalid;
  }
  const NewtonPolygon poly = build_polygon(e, p);
  if (cfg.json) {
    ojson j = to_json(poly);
    j["p"] = p.get_str();
    out << j.dump(2) << "\n";
  } else {
    out << to_text(poly);
  }
  return kExitOk;
}

namespace {

int verify_file(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  std::ifstream in(cfg.verify_path);
  if (!in) {
    print_usage_error(err, "cannot open " + cfg.verify_path);
    return kExitInvalid;
  }
  Certificate cert;
  std::optional<LaguerreInstance> inst;
  try {
    cert = certificate_from_json(nlohmann::json::parse(in));
    inst.emplace(build_instance_relaxed(instance_params(cert)));
  } catch (const std::exception& e) {
    print_usage_error(err, std::string("malformed certificate: ") + e.what());
    return kExitInvalid;
  }
  const bool ok = verify_certificate(cert, *inst);
  if (cfg.json) {
    out << ojson{{"file", cfg.verify_path}, {"valid", ok}}.dump(2) << "\n";
  } else {
    out << (ok ? "certificate valid" : "certificate REJECTED") << ": " << cfg.verify_path << "\n";
  }
  return ok ? kExitOk : kExitUncovered;
}

}  // namespace

int cmd_certify(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  if (!cfg.verify_path.empty()) return verify_file(cfg, out, err);
  InstanceParams params;
  std::optional<LaguerreInstance> inst;
  try {
    params = to_params(cfg.instance);
    inst.emplace(build_instance(params));
  } catch (const HypothesisError& e) {
    for (const auto& v : e.violations()) err << "hypothesis violated: " << to_string(v.kind) << ": " << v.message << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    print_usage_error(err, e.what());
    return kExitInvalid;
  }
  const CertifyResult result = certify(*inst);
  if (const auto* cert = std::get_if<Certificate>(&result)) {
    const std::filesystem::path dir = certificate_directory(cfg.cert_dir);
    const std::filesystem::path file = dir / certificate_filename(params);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    std::ofstream os(file);
    if (!os) {
      print_usage_error(err, "cannot write " + file.string());
      return kExitInvalid;
    }
    os << to_json(*cert).dump(2) << "\n";
    if (cfg.json) {
      ojson j = to_json(*cert);
      j["file"] = file.string();
      out << j.dump(2) << "\n";
    } else {
      out << "small-degree prime " << cert->small_degree_prime.get_str() << " divides vm+u = "
          << inst->hypothesis_bound() << "\n";
      for (const auto& w : cert->witnesses) {
        out << "k=" << w.k << " p=" << w.p.get_str() << " slope " << rational_to_string(w.slope) << " < 1/" << w.k
            << " (" << to_string(w.tier) << ")\n";
      }
      out << "irreducible over Q; certificate written to " << file.string() << "\n";
    }
    return kExitOk;
  }
  const auto& report = std::get<FailureReport>(result);
  if (cfg.json) {
    out << to_json(report).dump(2) << "\n";
  } else {
    if (report.small_degree_failed()) out << "small-degree step: no admissible prime divides vm+u\n";
    for (const auto& w : report.found) {
      out << "k=" << w.k << " p=" << w.p.get_str() << " slope " << rational_to_string(w.slope) << "\n";
    }
    for (auto k : report.uncovered_k) out << "k=" << k << " uncovered: no witness prime\n";
    out << "not certified\n";
  }
  return kExitUncovered;
}

int cmd_tables(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  for (const auto& s : cfg.tables.only) {
    if (!kTableSections.count(s)) {
      print_usage_error(err, "unknown --only section '" + s + "'");
      return kExitInvalid;
    }
  }
  if (cfg.tables.st_bound < 2 || cfg.tables.exp_bound < 1 || cfg.tables.k1_bound < 2) {
    print_usage_error(err, "bounds must be positive (st >= 2, exp >= 1, k1 >= 2)");
    return kExitInvalid;
  }
  const TableReport report = verify_reference_tables(cfg.tables);
  if (cfg.json) {
    ojson arr = ojson::array();
    for (const auto& l : report.lines) {
      const char* st = l.status == CheckStatus::kPass ? "PASS" : (l.status == CheckStatus::kFail ? "FAIL" : "FLAG");
      arr.push_back({{"status", st}, {"check", l.anchor}, {"detail", l.detail}});
    }
    out << ojson{{"failures", report.failures()}, {"checks", arr}}.dump(2) << "\n";
  } else {
    out << report.to_text();
    out << report.failures() << " failing check(s)\n";
  }
  return report.all_pass() ? kExitOk : kExitUncovered;
}

int cmd_oracle(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  IntPoly f;
  Integer scale = 1;
  try {
    if (!cfg.f.empty()) {
      f = parse_poly(cfg.f);
    } else if (!cfg.instance.phi.empty()) {
      f = build_instance_relaxed(to_params(cfg.instance)).scaled_f();
    } else {
      throw std::invalid_argument("oracle needs --f or instance flags with --phi");
    }
    if (f.degree() < 1) throw std::invalid_argument("polynomial must have degree >= 1");
  } catch (const std::exception& e) {
    print_usage_error(err, e.what());
    return kExitInvalid;
  }
  scale = content(f) * (f.leading() < 0 ? -1 : 1);
  OracleVerdict v = oracle_verdict(primitive_part(f), cfg.budget);
  if (v.witness) {
    v.witness->c *= scale;
    v.witness->c.canonicalize();
  }
  if (cfg.json) {
    ojson j = to_json(v);
    j["polynomial"] = to_string(f);
    out << j.dump(2) << "\n";
  } else {
    out << "polynomial: " << to_string(f) << "\n";
    out << "verdict: " << to_string(v.kind) << "\n";
    out << "primes used:";
    for (auto p : v.degrees.primes_used) out << " " << p;
    out << "\n";
    out << "possible factor degrees:";
    for (int d : v.degrees.possible) out << " " << d;
    out << "\n";
    if (v.degrees.low_confidence) out << "low confidence: no usable prime within the budget\n";
    if (v.witness) {
      out << "witness: (" << rational_to_string(v.witness->c) << ") * (" << to_string(v.witness->g) << ") * ("
          << to_string(v.witness->h) << ")\n";
    }
  }
  switch (v.kind) {
    case VerdictKind::kIrreducible: return kExitOk;
    case VerdictKind::kReducible: return kExitReducible;
    case VerdictKind::kInconclusive: return kExitUncovered;
  }
  return kExitUncovered;
}

int cmd_witness_search(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  IntPoly phi;
  std::optional<AlphaParam> alpha;
  try {
    if (cfg.instance.m < 1) throw std::invalid_argument("-m must be at least 1");
    if (cfg.instance.phi.empty()) throw std::invalid_argument("--phi is required");
    if (cfg.bound < 1) throw std::invalid_argument("--bound must be at least 1");
    phi = parse_poly(cfg.instance.phi);
    if (phi.degree() < 1 || !phi.is_monic()) throw std::invalid_argument("--phi must be monic of degree >= 1");
    alpha.emplace(cfg.instance.u, cfg.instance.v);
  } catch (const std::exception& e) {
    print_usage_error(err, e.what());
    return kExitInvalid;
  }
  const auto hit = search_reducible_witness(cfg.instance.m, *alpha, phi, cfg.bound, cfg.budget);
  if (cfg.json) {
    ojson j;
    j["m"] = cfg.instance.m;
    j["u"] = cfg.instance.u;
    j["v"] = cfg.instance.v;
    j["bound"] = cfg.bound;
    if (hit) {
      j["found"] = true;
      j["a_m"] = hit->params.a_m.get_str();
      j["a_parts"] = ojson::array();
      for (const auto& a : hit->params.a_parts) j["a_parts"].push_back(to_string(a));
      j["witness"] = {{"c", rational_to_string(hit->witness.c)},
                      {"g", to_string(hit->witness.g)},
                      {"h", to_string(hit->witness.h)}};
      j["instances_tried"] = hit->instances_tried;
    } else {
      j["found"] = false;
    }
    out << j.dump(2) << "\n";
  } else if (hit) {
    out << serialize_instance(hit->params);
    out << "F = v^m f = (" << rational_to_string(hit->witness.c) << ") * (" << to_string(hit->witness.g) << ") * ("
        << to_string(hit->witness.h) << ")\n";
    out << "valid instances tried: " << hit->instances_tried << "\n";
  } else {
    out << "no reducible instance with coefficients in [-" << cfg.bound << ", " << cfg.bound << "]\n";
  }
  return hit ? kExitReducible : kExitOk;
}

int run_command(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.subcommand == "construct") return cmd_construct(cfg, out, err);
  if (cfg.subcommand == "polygon") return cmd_polygon(cfg, out, err);
  if (cfg.subcommand == "certify") return cmd_certify(cfg, out, err);
  if (cfg.subcommand == "tables") return cmd_tables(cfg, out, err);
  if (cfg.subcommand == "oracle") return cmd_oracle(cfg, out, err);
  if (cfg.subcommand == "witness-search") return cmd_witness_search(cfg, out, err);
  print_usage_error(err, "unknown subcommand '" + cfg.subcommand + "'");
  return kExitInvalid;
}

namespace {

void add_instance_flags(CLI::App* sub, InstanceFlags& inst, bool with_parts) {
  sub->add_option("-m", inst.m, "degree m in phi");
  sub->add_option("-u", inst.u, "numerator of alpha");
  sub->add_option("-v", inst.v, "denominator of alpha");
  sub->add_option("--phi", inst.phi, "monic polynomial phi, e.g. \"x^2-x+17\"");
  if (with_parts) {
    sub->add_option("--am", inst.a_m, "integer a_m");
    sub->add_option("--a", inst.a, "a_{m-1} .. a_1 (one value is used for all)");
    sub->add_option("--a0", inst.a0, "polynomial a_0");
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CommandConfig cfg;
  CLI::App app{"Irreducibility certificates for generalized phi-Laguerre polynomials", "lagcert"};
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json, "machine-readable output");

  auto* construct = app.add_subcommand("construct", "build an instance and report its data");
  add_instance_flags(construct, cfg.instance, true);

  auto* polygon = app.add_subcommand("polygon", "phi-Newton polygon of f with respect to p");
  polygon->add_option("--f", cfg.f, "polynomial f");
  polygon->add_option("--phi", cfg.instance.phi, "monic polynomial phi");
  polygon->add_option("-p", cfg.p, "prime p");

  auto* certify_cmd = app.add_subcommand("certify", "produce or verify an irreducibility certificate");
  add_instance_flags(certify_cmd, cfg.instance, true);
  certify_cmd->add_option("--cert-dir", cfg.cert_dir, "certificate directory (default $LAGUERRE_CERT_HOME or .)");
  certify_cmd->add_option("--verify", cfg.verify_path, "re-verify a certificate file");

  auto* tables = app.add_subcommand("tables", "recompute the finite tables and lemmas");
  tables->add_option("--st-bound", cfg.tables.st_bound, "m bound for the S_t scan");
  tables->add_option("--exp-bound", cfg.tables.exp_bound, "exponent bound for the exponential equations");
  tables->add_option("--k1-bound", cfg.tables.k1_bound, "m bound for the k = 1 subcases");
  std::vector<std::string> only;
  tables->add_option("--only", only, "restrict to sections: s1 s2 s3 s4 exp factorizations primes exceptions k1 root");

  auto* oracle = app.add_subcommand("oracle", "independent irreducibility evidence");
  oracle->add_option("--f", cfg.f, "polynomial f (otherwise instance flags)");
  add_instance_flags(oracle, cfg.instance, true);
  oracle->add_option("--budget", cfg.budget, "largest prime used for degree patterns");

  auto* search = app.add_subcommand("witness-search", "search small coefficients for a reducible instance");
  add_instance_flags(search, cfg.instance, false);
  search->add_option("--bound", cfg.bound, "coefficient bound");
  search->add_option("--budget", cfg.budget, "largest prime used for degree patterns");

  for (auto* sub : {construct, polygon, certify_cmd, tables, oracle, search}) sub->add_flag("--json", cfg.json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }
  cfg.tables.only.insert(only.begin(), only.end());
  cfg.subcommand = app.get_subcommands().front()->get_name();
  return run_command(cfg, out, err);
}

}  // namespace lagcert::cli
