#include "lagcert/laguerre.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "lagcert/fp_poly.hpp"

namespace lagcert {

namespace {

Integer as_int(std::int64_t x) { return Integer(static_cast<long>(x)); }

void require_structure(const InstanceParams& p) {
  if (p.m < 1) throw std::invalid_argument("m must be at least 1");
  if (p.a_parts.size() != static_cast<std::size_t>(p.m)) {
    throw std::invalid_argument("expected " + std::to_string(p.m) + " polynomials a_0..a_{m-1}, got " +
                                std::to_string(p.a_parts.size()));
  }
  if (p.phi.degree() < 1 || !p.phi.is_monic()) throw std::invalid_argument("phi must be monic of degree >= 1");
  if (p.a_m == 0) throw std::invalid_argument("a_m must be nonzero");
}

}  // namespace

AlphaParam::AlphaParam(std::int64_t u, std::int64_t v) : u_(u), v_(v) {
  if (v <= 0) throw std::invalid_argument("alpha denominator must be positive");
  if (std::gcd(u, v) != 1) throw std::invalid_argument("alpha = u/v needs gcd(u, v) = 1");
  if (v == 1 && u < 0) throw std::invalid_argument("alpha must not be a negative integer");
}

std::vector<Rational> coefficients_product_form(std::int64_t m, const AlphaParam& alpha) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  const Rational a = alpha.value();
  std::vector<Rational> b(static_cast<std::size_t>(m) + 1);
  for (std::int64_t j = 0; j < m; ++j) {
    Rational prod = Rational(binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(j)));
    for (std::int64_t i = j + 1; i <= m; ++i) prod *= Rational(as_int(i)) + a;
    prod.canonicalize();
    b[static_cast<std::size_t>(j)] = prod;
  }
  b[static_cast<std::size_t>(m)] = 1;
  return b;
}

std::vector<Rational> coefficients_quotient_form(std::int64_t m, const AlphaParam& alpha) {
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  std::vector<Rational> b(static_cast<std::size_t>(m) + 1);
  const Integer u = as_int(alpha.u()), v = as_int(alpha.v());
  for (std::int64_t l = 0; l < m; ++l) {
    Integer num = binomial(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(l));
    for (std::int64_t i = l + 1; i <= m; ++i) num *= v * as_int(i) + u;
    b[static_cast<std::size_t>(l)] = make_rational(num, pow_int(v, static_cast<std::uint64_t>(m - l)));
  }
  b[static_cast<std::size_t>(m)] = 1;
  return b;
}

LaguerreCoefficients laguerre_coefficients(std::int64_t m, const AlphaParam& alpha, const Integer& a_m) {
  auto product = coefficients_product_form(m, alpha);
  if (product != coefficients_quotient_form(m, alpha)) {
    throw std::logic_error("product and quotient forms of b_j disagree");
  }
  product.back() = a_m;
  return {m, alpha.u(), alpha.v(), std::move(product)};
}

Rational coefficient_ratio(std::int64_t j, const LaguerreCoefficients& coeffs) {
  if (coeffs.v != 1) throw std::invalid_argument("coefficient_ratio needs an integer alpha");
  if (j < 1 || j > coeffs.m) throw std::invalid_argument("coefficient_ratio: j out of range");
  Integer num = 1;
  for (std::int64_t i = 1; i <= j; ++i) num *= as_int(i + coeffs.u);
  Rational closed = make_rational(num, binomial(static_cast<std::uint64_t>(coeffs.m), static_cast<std::uint64_t>(j)));
  // The closed form describes b_0 / b_j with b_m = 1; rescale for a stored multiplier.
  Rational bj = coeffs.b[static_cast<std::size_t>(j)];
  if (j == coeffs.m) bj = 1;
  Rational direct = coeffs.b[0] / bj;
  direct.canonicalize();
  if (direct != closed) throw std::logic_error("closed form of b_0/b_j disagrees with direct quotient");
  return closed;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kBadAlpha: return "bad-alpha";
    case ViolationKind::kNegativeIntegerAlpha: return "negative-integer-alpha";
    case ViolationKind::kDegree: return "degree";
    case ViolationKind::kContentLeading: return "content-leading";
    case ViolationKind::kContentConstant: return "content-constant";
    case ViolationKind::kPhiReducible: return "phi-reducible";
  }
  return "unknown";
}

namespace {

std::string join_messages(const std::vector<Violation>& vs) {
  std::string out = "instance violates hypotheses:";
  for (const auto& v : vs) out += " [" + v.message + "]";
  return out;
}

}  // namespace

HypothesisError::HypothesisError(std::vector<Violation> violations)
    : std::invalid_argument(join_messages(violations)), violations_(std::move(violations)) {}

std::vector<Violation> check_hypotheses(const InstanceParams& p) {
  require_structure(p);
  std::vector<Violation> out;
  if (p.v <= 0 || std::gcd(p.u, p.v) != 1) {
    out.push_back({ViolationKind::kBadAlpha, 0, -1, "alpha = u/v needs v > 0 and gcd(u, v) = 1"});
    return out;
  }
  if (p.v == 1 && p.u < 0) {
    out.push_back({ViolationKind::kNegativeIntegerAlpha, 0, -1,
                   "alpha = " + std::to_string(p.u) + " is a negative integer"});
    return out;
  }
  for (std::int64_t i = 0; i < p.m; ++i) {
    if (p.a_parts[static_cast<std::size_t>(i)].degree() >= p.phi.degree()) {
      out.push_back({ViolationKind::kDegree, 0, i, "deg a_" + std::to_string(i) + " >= deg phi"});
    }
  }
  const std::int64_t bound = p.v * p.m + p.u;
  const IntPoly& a0 = p.a_parts.front();
  if (a0.is_zero()) out.push_back({ViolationKind::kContentConstant, 0, 0, "a_0 is zero"});
  const auto primes = bound >= 2 ? sieve_primes(static_cast<std::uint64_t>(bound)).primes()
                                 : std::vector<std::uint64_t>{};
  for (std::uint64_t q : primes) {
    const Integer P(static_cast<unsigned long>(q));
    if (mpz_divisible_p(p.a_m.get_mpz_t(), P.get_mpz_t())) {
      out.push_back({ViolationKind::kContentLeading, P, -1, std::to_string(q) + " divides a_m"});
    }
    if (!a0.is_zero() && mpz_divisible_p(content(a0).get_mpz_t(), P.get_mpz_t())) {
      out.push_back({ViolationKind::kContentConstant, P, 0, std::to_string(q) + " divides content(a_0)"});
    }
  }
  for (std::uint64_t q : primes) {
    if (!is_irreducible_mod_p(p.phi, q)) {
      out.push_back({ViolationKind::kPhiReducible, Integer(static_cast<unsigned long>(q)), -1,
                     "phi is reducible modulo " + std::to_string(q)});
    }
  }
  return out;
}

LaguerreInstance::LaguerreInstance(InstanceParams params, bool checked)
    : params_(std::move(params)), alpha_(params_.u, params_.v), checked_(checked) {
  coeffs_ = laguerre_coefficients(params_.m, alpha_, params_.a_m);
  const Integer v = as_int(params_.v);
  const Integer vm = pow_int(v, static_cast<std::uint64_t>(params_.m));
  scaled_.resize(static_cast<std::size_t>(params_.m) + 1);
  for (std::int64_t j = 0; j < params_.m; ++j) {
    Rational s = coeffs_.b[static_cast<std::size_t>(j)] * Rational(vm);
    s.canonicalize();
    if (s.get_den() != 1) throw std::logic_error("v^m b_j is not an integer");
    scaled_[static_cast<std::size_t>(j)] = s.get_num();
  }
  scaled_.back() = vm * params_.a_m;
  IntPoly acc = IntPoly::constant(scaled_.back());
  for (std::int64_t j = params_.m - 1; j >= 0; --j) {
    acc = acc * params_.phi + params_.a_parts[static_cast<std::size_t>(j)] * scaled_[static_cast<std::size_t>(j)];
  }
  scaled_f_ = std::move(acc);
}

RatPoly LaguerreInstance::laguerre_polynomial() const {
  Integer denom = pow_int(as_int(params_.v), static_cast<std::uint64_t>(params_.m));
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(params_.m));
  return RatPoly(scaled_f_) * make_rational(1, denom * fact);
}

LaguerreInstance build_instance(InstanceParams params) {
  auto violations = check_hypotheses(params);
  if (!violations.empty()) throw HypothesisError(std::move(violations));
  return LaguerreInstance(std::move(params), true);
}

LaguerreInstance build_instance_relaxed(InstanceParams params) {
  require_structure(params);
  // AlphaParam's constructor still rejects alphas for which some b_j vanishes.
  return LaguerreInstance(std::move(params), false);
}

std::vector<Valuation> valuation_vector(const LaguerreCoefficients& coeffs, const Integer& p) {
  if (mpz_divisible_p(as_int(coeffs.v).get_mpz_t(), p.get_mpz_t())) {
    throw std::invalid_argument("valuation_vector: p divides the denominator v of alpha");
  }
  std::vector<Valuation> out;
  out.reserve(coeffs.b.size());
  for (const Rational& b : coeffs.b) out.push_back(vp_rat(p, b));
  return out;
}

std::vector<Valuation> valuation_vector(const LaguerreInstance& instance, const Integer& p) {
  return valuation_vector(instance.coeffs(), p);
}

std::string serialize_instance(const InstanceParams& p) {
  std::ostringstream os;
  os << "m = " << p.m << "\n";
  os << "u = " << p.u << "\n";
  os << "v = " << p.v << "\n";
  os << "a_m = " << p.a_m.get_str() << "\n";
  for (std::size_t i = p.a_parts.size(); i-- > 0;) os << "a_" << i << " = " << to_string(p.a_parts[i]) << "\n";
  os << "phi = " << to_string(p.phi) << "\n";
  return os.str();
}

InstanceParams parse_instance(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        throw std::invalid_argument("instance line without '=': " + line);
      }
      continue;
    }
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  auto need = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw std::invalid_argument("instance is missing '" + key + "'");
    return it->second;
  };
  InstanceParams p;
  p.m = std::stoll(need("m"));
  p.u = std::stoll(need("u"));
  p.v = kv.count("v") ? std::stoll(kv["v"]) : 1;
  p.a_m = Integer(need("a_m"));
  p.phi = parse_poly(need("phi"));
  if (p.m < 1) throw std::invalid_argument("m must be at least 1");
  for (std::int64_t i = 0; i < p.m; ++i) p.a_parts.push_back(parse_poly(need("a_" + std::to_string(i))));
  return p;
}

}  // namespace lagcert
