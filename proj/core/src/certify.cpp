#include "lagcert/certify.hpp"

#include <algorithm>
#include <set>

#include "lagcert/fp_poly.hpp"
#include "lagcert/reference_tables.hpp"

namespace lagcert {

namespace {

Integer as_int(std::int64_t x) { return Integer(static_cast<long>(x)); }

bool divides(const Integer& p, const Integer& n) { return mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0; }

bool fits_fp(const Integer& p) { return p > 1 && mpz_sizeinbase(p.get_mpz_t(), 2) < 63; }

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  if (abs_value(n) < 2) return out;
  for (const auto& [q, e] : factor_integer(n)) out.push_back(q);
  std::sort(out.begin(), out.end());
  return out;
}

void append_sorted_unique(std::vector<Integer>& dst, std::vector<Integer> src) {
  std::sort(src.begin(), src.end());
  src.erase(std::unique(src.begin(), src.end()), src.end());
  dst.insert(dst.end(), src.begin(), src.end());
}

std::int64_t floor_half(std::int64_t m) { return m / 2; }

}  // namespace

std::string to_string(WitnessTier tier) {
  switch (tier) {
    case WitnessTier::kProductPrime: return "product";
    case WitnessTier::kSubcasePrime: return "subcase";
    case WitnessTier::kTablePrime: return "table";
    case WitnessTier::kFallback: return "fallback";
  }
  return "unknown";
}

PhiExpansion monic_model(const LaguerreInstance& instance) {
  PhiExpansion e;
  e.phi = instance.phi();
  const auto& B = instance.scaled_coefficients();
  for (std::int64_t j = 0; j < instance.m(); ++j) e.parts.push_back(IntPoly::constant(B[static_cast<std::size_t>(j)]));
  e.parts.push_back(IntPoly::constant(1));
  return e;
}

Integer exclude_small_degrees(const LaguerreInstance& instance) {
  const Integer n = as_int(instance.hypothesis_bound());
  if (abs_value(n) < 2) {
    throw NoSmallDegreePrime("vm+u = " + n.get_str() + " has no prime divisor");
  }
  const auto& B = instance.scaled_coefficients();
  for (const Integer& p : prime_divisors(n)) {
    if (divides(p, instance.a_m()) || !fits_fp(p)) continue;
    if (!is_irreducible_mod_p(instance.phi(), p.get_ui())) continue;
    bool all = true;
    for (std::int64_t j = 0; j < instance.m() && all; ++j) all = divides(p, B[static_cast<std::size_t>(j)]);
    if (all) return p;
  }
  throw NoSmallDegreePrime("no admissible prime divides vm+u = " + n.get_str());
}

bool lemma_exclusion_check(const IntPoly& g, const IntPoly& phi, const Integer& p, std::int64_t ell,
                           std::int64_t k, const std::vector<IntPoly>& multipliers) {
  if (!g.is_monic()) throw std::invalid_argument("lemma check needs a monic polynomial");
  const PhiExpansion e = phi_expand(g, phi);
  const auto m = static_cast<std::int64_t>(e.top_index());
  if (ell < 0 || ell >= k || 2 * k > m) {
    throw std::invalid_argument("lemma check needs 0 <= ell < k <= m/2 (m = " + std::to_string(m) + ")");
  }
  if (multipliers.size() != static_cast<std::size_t>(m) + 1) {
    throw std::invalid_argument("lemma check needs m+1 multipliers");
  }
  if (!is_prime(p) || !fits_fp(p)) throw std::invalid_argument("lemma check needs a prime below 2^63");
  if (!is_irreducible_mod_p(phi, p.get_ui())) throw std::invalid_argument("phi is reducible modulo p");
  if (e.parts.front().is_zero()) throw std::invalid_argument("polynomial is divisible by phi");

  for (std::int64_t i = 0; i <= m - ell - 1; ++i) {
    const IntPoly& fi = e.parts[static_cast<std::size_t>(i)];
    if (!fi.is_zero() && gauss_valuation(p, fi).value() == 0) return false;
  }
  if (rightmost_slope(build_polygon(e, p)) >= make_rational(1, as_int(k))) return false;
  for (std::int64_t i = 0; i <= m; ++i) {
    const IntPoly& fi = e.parts[static_cast<std::size_t>(i)];
    const IntPoly& ai = multipliers[static_cast<std::size_t>(i)];
    if (fi.is_zero() || ai.is_zero()) continue;
    if (ai.degree() >= phi.degree() - fi.degree()) return false;
  }
  const IntPoly& a0 = multipliers.front();
  if (a0.is_zero() || divides(p, content(a0))) return false;
  const IntPoly& am = multipliers.back();
  if (am.is_zero() || divides(p, am.leading())) return false;
  return true;
}

std::optional<ExclusionWitness> try_witness_prime(const LaguerreInstance& instance, std::int64_t k,
                                                  const Integer& p, WitnessTier tier) {
  const std::int64_t m = instance.m();
  if (k < 1 || 2 * k > m) throw std::invalid_argument("witness k must satisfy 1 <= k <= m/2");
  if (!fits_fp(p) || !is_prime(p)) return std::nullopt;
  if (divides(p, as_int(instance.alpha().v())) || divides(p, instance.a_m())) return std::nullopt;
  const IntPoly& a0 = instance.a_part(0);
  if (a0.is_zero() || divides(p, content(a0))) return std::nullopt;
  for (std::int64_t i = 0; i < m; ++i) {
    if (instance.a_part(i).degree() >= instance.phi().degree()) return std::nullopt;
  }
  if (!is_irreducible_mod_p(instance.phi(), p.get_ui())) return std::nullopt;
  const auto& B = instance.scaled_coefficients();
  for (std::int64_t j = 0; j <= m - k; ++j) {
    if (!divides(p, B[static_cast<std::size_t>(j)])) return std::nullopt;
  }
  const PhiExpansion model = monic_model(instance);
  const Rational slope = rightmost_slope(build_polygon(model, p));
  if (slope != rightmost_slope_formula(model, p)) {
    throw std::logic_error("hull slope and max-formula slope disagree");
  }
  if (slope >= make_rational(1, as_int(k))) return std::nullopt;
  return ExclusionWitness{k, p, slope, m - k, true, tier};
}

std::variant<ExclusionWitness, NotFound> find_prime_for_k(const LaguerreInstance& instance, std::int64_t k) {
  const std::int64_t m = instance.m();
  if (k < 1 || 2 * k > m) throw std::invalid_argument("find_prime_for_k needs 1 <= k <= floor(m/2)");
  const std::int64_t u = instance.alpha().u();
  const std::int64_t v = instance.alpha().v();
  std::set<Integer> tried;
  auto attempt = [&](const std::vector<Integer>& candidates,
                     WitnessTier tier) -> std::optional<ExclusionWitness> {
    for (const Integer& p : candidates) {
      if (!tried.insert(p).second) continue;
      if (auto w = try_witness_prime(instance, k, p, tier)) return w;
    }
    return std::nullopt;
  };

  if (v == 1) {
    if (k >= 2) {
      std::vector<Integer> c;
      for (std::int64_t i = 1; i <= k; ++i) {
        for (const Integer& q : prime_divisors(as_int(m - k + u + i))) {
          if (q >= k + u + 1) c.push_back(q);
        }
      }
      std::vector<Integer> sorted;
      append_sorted_unique(sorted, std::move(c));
      if (auto w = attempt(sorted, WitnessTier::kProductPrime)) return *w;
    } else {
      std::vector<Integer> c;
      for (const Integer& q : prime_divisors(as_int(m) * as_int(m + u))) {
        if (q >= u + 2) c.push_back(q);
      }
      if (auto w = attempt(c, WitnessTier::kSubcasePrime)) return *w;
    }
    std::vector<Integer> table;
    if (k >= 2) {
      for (const auto& row : reference::kPrimeRows) {
        if (row.u == u && row.k == k && row.m == m && row.p != 0) table.push_back(as_int(row.p));
      }
    } else {
      for (const auto& row : reference::kSubstituteRows) {
        if (row.u == u && row.m == m) table.push_back(as_int(row.p));
      }
    }
    if (auto w = attempt(table, WitnessTier::kTablePrime)) return *w;
  }

  const std::int64_t bound = instance.hypothesis_bound();
  if (bound >= 2) {
    std::vector<Integer> c;
    for (std::uint64_t q : sieve_primes(static_cast<std::uint64_t>(bound)).primes()) {
      c.emplace_back(static_cast<unsigned long>(q));
    }
    if (auto w = attempt(c, WitnessTier::kFallback)) return *w;
  }
  return NotFound{k};
}

CertifyResult certify(const LaguerreInstance& instance) {
  if (!instance.hypotheses_checked()) {
    auto violations = check_hypotheses(instance.params());
    if (!violations.empty()) throw HypothesisError(std::move(violations));
  }
  const auto& params = instance.params();
  std::optional<Integer> small;
  try {
    small = exclude_small_degrees(instance);
  } catch (const NoSmallDegreePrime&) {
  }
  std::vector<ExclusionWitness> found;
  std::vector<std::int64_t> uncovered;
  for (std::int64_t k = 1; k <= floor_half(params.m); ++k) {
    auto r = find_prime_for_k(instance, k);
    if (auto* w = std::get_if<ExclusionWitness>(&r)) {
      found.push_back(*w);
    } else {
      uncovered.push_back(k);
    }
  }
  if (small && uncovered.empty()) {
    return Certificate{params.m, params.u, params.v, params.a_m, params.a_parts, params.phi, *small,
                       std::move(found), true};
  }
  return FailureReport{params.m, params.u, params.v, small, std::move(uncovered), std::move(found)};
}

bool coverage_holds(std::int64_t m, int deg_phi, const std::vector<std::int64_t>& ks) {
  if (deg_phi < 1 || m < 1) return false;
  const std::int64_t top = m * deg_phi / 2;
  for (std::int64_t d = 1; d <= top; ++d) {
    if (d < deg_phi) continue;
    const bool hit = std::any_of(ks.begin(), ks.end(), [&](std::int64_t k) {
      return k * deg_phi <= d && d < (k + 1) * deg_phi;
    });
    if (!hit) return false;
  }
  return true;
}

bool verify_certificate(const Certificate& cert, const LaguerreInstance& instance) {
  try {
    const auto& params = instance.params();
    if (!cert.irreducible) return false;
    if (cert.m != params.m || cert.u != params.u || cert.v != params.v || cert.a_m != params.a_m ||
        cert.a_parts != params.a_parts || cert.phi != params.phi) {
      return false;
    }
    const std::int64_t m = cert.m;
    const auto& B = instance.scaled_coefficients();
    if (instance.coeffs().b.size() != static_cast<std::size_t>(m) + 1) return false;

    const Integer& sp = cert.small_degree_prime;
    if (!fits_fp(sp) || !is_prime(sp)) return false;
    if (!divides(sp, as_int(instance.hypothesis_bound()))) return false;
    if (divides(sp, cert.a_m) || !is_irreducible_mod_p(cert.phi, sp.get_ui())) return false;
    for (std::int64_t j = 0; j < m; ++j) {
      if (!divides(sp, B[static_cast<std::size_t>(j)])) return false;
    }

    std::vector<std::int64_t> ks;
    const PhiExpansion model = monic_model(instance);
    for (const ExclusionWitness& w : cert.witnesses) {
      if (w.k < 1 || 2 * w.k > m) return false;
      if (std::find(ks.begin(), ks.end(), w.k) != ks.end()) return false;
      ks.push_back(w.k);
      if (!w.divisibility_checked || w.divisible_through != m - w.k) return false;
      const Integer& p = w.p;
      if (!fits_fp(p) || !is_prime(p)) return false;
      if (divides(p, as_int(cert.v)) || divides(p, cert.a_m)) return false;
      const IntPoly& a0 = cert.a_parts.front();
      if (a0.is_zero() || divides(p, content(a0))) return false;
      if (!is_irreducible_mod_p(cert.phi, p.get_ui())) return false;
      for (const IntPoly& a : cert.a_parts) {
        if (a.degree() >= cert.phi.degree()) return false;
      }
      for (std::int64_t j = 0; j <= m - w.k; ++j) {
        if (!divides(p, B[static_cast<std::size_t>(j)])) return false;
      }
      const Rational slope = rightmost_slope(build_polygon(model, p));
      if (slope != w.slope || slope != rightmost_slope_formula(model, p)) return false;
      if (slope >= make_rational(1, as_int(w.k))) return false;
    }
    for (std::int64_t k = 1; k <= floor_half(m); ++k) {
      if (std::find(ks.begin(), ks.end(), k) == ks.end()) return false;
    }
    return coverage_holds(m, cert.phi.degree(), ks);
  } catch (const std::exception&) {
    return false;
  }
}

namespace {

nlohmann::ordered_json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return Integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

nlohmann::ordered_json witness_json(const ExclusionWitness& w) {
  nlohmann::ordered_json j;
  j["k"] = w.k;
  j["p"] = integer_json(w.p);
  j["slope"] = rational_to_string(w.slope);
  j["divisible_through"] = w.divisible_through;
  j["tier"] = to_string(w.tier);
  return j;
}

WitnessTier tier_from_string(const std::string& s) {
  for (auto t : {WitnessTier::kProductPrime, WitnessTier::kSubcasePrime, WitnessTier::kTablePrime,
                 WitnessTier::kFallback}) {
    if (to_string(t) == s) return t;
  }
  throw std::invalid_argument("unknown witness tier '" + s + "'");
}

}  // namespace

nlohmann::ordered_json to_json(const Certificate& cert) {
  nlohmann::ordered_json j;
  j["m"] = cert.m;
  j["u"] = cert.u;
  j["v"] = cert.v;
  j["a_m"] = integer_json(cert.a_m);
  j["a_parts"] = nlohmann::ordered_json::array();
  for (const IntPoly& a : cert.a_parts) j["a_parts"].push_back(to_string(a));
  j["phi"] = to_string(cert.phi);
  j["small_degree_prime"] = integer_json(cert.small_degree_prime);
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : cert.witnesses) j["witnesses"].push_back(witness_json(w));
  j["conclusion"] = cert.irreducible ? "irreducible" : "none";
  return j;
}

nlohmann::ordered_json to_json(const FailureReport& report) {
  nlohmann::ordered_json j;
  j["m"] = report.m;
  j["u"] = report.u;
  j["v"] = report.v;
  j["small_degree_prime"] = report.small_degree_prime ? integer_json(*report.small_degree_prime)
                                                      : nlohmann::ordered_json(nullptr);
  j["uncovered_k"] = report.uncovered_k;
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : report.found) j["witnesses"].push_back(witness_json(w));
  j["conclusion"] = "uncovered";
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  try {
    Certificate c;
    c.m = j.at("m").get<std::int64_t>();
    c.u = j.at("u").get<std::int64_t>();
    c.v = j.at("v").get<std::int64_t>();
    c.a_m = integer_from_json(j.at("a_m"));
    for (const auto& a : j.at("a_parts")) c.a_parts.push_back(parse_poly(a.get<std::string>()));
    c.phi = parse_poly(j.at("phi").get<std::string>());
    c.small_degree_prime = integer_from_json(j.at("small_degree_prime"));
    for (const auto& w : j.at("witnesses")) {
      ExclusionWitness x;
      x.k = w.at("k").get<std::int64_t>();
      x.p = integer_from_json(w.at("p"));
      x.slope = parse_rational(w.at("slope").get<std::string>());
      x.divisible_through = w.at("divisible_through").get<std::int64_t>();
      x.divisibility_checked = true;
      x.tier = tier_from_string(w.at("tier").get<std::string>());
      c.witnesses.push_back(x);
    }
    c.irreducible = j.at("conclusion").get<std::string>() == "irreducible";
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

InstanceParams instance_params(const Certificate& cert) {
  return InstanceParams{cert.m, cert.u, cert.v, cert.a_m, cert.a_parts, cert.phi};
}

}  // namespace lagcert
