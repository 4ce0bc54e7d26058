#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "lagcert/laguerre.hpp"
#include "lagcert/polygon.hpp"

namespace lagcert {

/// Strategy that produced a witness prime, in search order.
enum class WitnessTier {
  kProductPrime = 1,  // prime >= k+u+1 dividing P(m-k+u, k)
  kSubcasePrime = 2,  // k = 1: prime >= u+2 dividing m(vm+u)
  kTablePrime = 3,    // transcribed exception tables and k = 1 substitutes
  kFallback = 4,      // any admissible prime <= vm+u
};

std::string to_string(WitnessTier tier);

/// Evidence excluding factor degrees in [k deg phi, (k+1) deg phi).
struct ExclusionWitness {
  std::int64_t k = 1;
  Integer p;
  Rational slope;
  std::int64_t divisible_through = 0;  // v_p(b_j) >= 1 checked for 0 <= j <= this
  bool divisibility_checked = false;
  WitnessTier tier = WitnessTier::kFallback;

  friend bool operator==(const ExclusionWitness&, const ExclusionWitness&) = default;
};

struct Certificate {
  std::int64_t m = 0;
  std::int64_t u = 0;
  std::int64_t v = 1;
  Integer a_m;
  std::vector<IntPoly> a_parts;  // a_0 .. a_{m-1}
  IntPoly phi;
  Integer small_degree_prime;
  std::vector<ExclusionWitness> witnesses;  // k = 1 .. floor(m/2)
  bool irreducible = false;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct NotFound {
  std::int64_t k = 0;
  friend bool operator==(const NotFound&, const NotFound&) = default;
};

struct FailureReport {
  std::int64_t m = 0;
  std::int64_t u = 0;
  std::int64_t v = 1;
  std::optional<Integer> small_degree_prime;  // empty when that step failed
  std::vector<std::int64_t> uncovered_k;
  std::vector<ExclusionWitness> found;

  bool small_degree_failed() const { return !small_degree_prime.has_value(); }
};

using CertifyResult = std::variant<Certificate, FailureReport>;

class NoSmallDegreePrime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// v^m b_j as constant polynomials plus v^m a_m on top: the monic model
/// G = phi^m + sum B_j phi^j written as an expansion (leading part 1).
PhiExpansion monic_model(const LaguerreInstance& instance);

/// A prime p | vm+u with p not dividing a_m, phi irreducible mod p and p | b_j
/// for every j < m. Throws NoSmallDegreePrime when none exists.
Integer exclude_small_degrees(const LaguerreInstance& instance);

/// The degree-interval lemma for a monic model g with expansion parts f_i and
/// multipliers a_0..a_m. Requires 0 <= ell < k <= m/2, phi irreducible mod p
/// and f_0 != 0; violations throw std::invalid_argument.
bool lemma_exclusion_check(const IntPoly& g, const IntPoly& phi, const Integer& p, std::int64_t ell,
                           std::int64_t k, const std::vector<IntPoly>& multipliers);

/// Validates one candidate prime against every witness invariant.
std::optional<ExclusionWitness> try_witness_prime(const LaguerreInstance& instance, std::int64_t k,
                                                  const Integer& p, WitnessTier tier);

/// Tiered deterministic search; 1 <= k <= floor(m/2).
std::variant<ExclusionWitness, NotFound> find_prime_for_k(const LaguerreInstance& instance, std::int64_t k);

/// Throws HypothesisError for an instance that fails the hypotheses.
CertifyResult certify(const LaguerreInstance& instance);

/// Every d in [1, floor(m deg/2)] lies in [1, deg) or some [k deg, (k+1) deg).
bool coverage_holds(std::int64_t m, int deg_phi, const std::vector<std::int64_t>& ks);

/// Independent recheck of all recorded evidence. Never throws.
bool verify_certificate(const Certificate& cert, const LaguerreInstance& instance);

nlohmann::ordered_json to_json(const Certificate& cert);
nlohmann::ordered_json to_json(const FailureReport& report);
/// Throws std::invalid_argument on malformed input.
Certificate certificate_from_json(const nlohmann::json& j);
/// Rebuilds the (relaxed) instance a certificate talks about.
InstanceParams instance_params(const Certificate& cert);

}  // namespace lagcert
