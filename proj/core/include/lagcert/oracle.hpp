#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lagcert/laguerre.hpp"
#include "lagcert/poly.hpp"

namespace lagcert {

/// Factor degrees of f modulo p.
struct DegreePattern {
  std::uint64_t p = 0;
  std::vector<int> degrees;  // ascending; empty when unusable
  bool usable = false;       // false when f mod p is not squarefree
};

/// p must be prime, below 2^63, and must not divide the leading coefficient.
DegreePattern degree_pattern(const IntPoly& f, std::uint64_t p);

/// Degrees a factor of f over Z may have, given the patterns seen.
struct DegreeSet {
  int degree = 0;
  std::set<int> possible;
  std::vector<std::uint64_t> primes_used;
  bool low_confidence = false;  // no usable prime in the budget

  bool contains(int d) const { return possible.count(d) != 0; }
  bool only_trivial() const { return possible.size() == 2 || degree <= 1; }
};

inline constexpr std::uint64_t kDefaultPrimeBudget = 200;

/// Intersection of subset sums over usable primes <= budget. Stops early once
/// only {0, deg f} remains. f must be primitive with deg f >= 1.
DegreeSet possible_degrees(const IntPoly& f, std::uint64_t prime_budget = kDefaultPrimeBudget);

/// c * g * h with deg g, deg h >= 1.
struct ReducibilityWitness {
  Rational c;
  IntPoly g;
  IntPoly h;

  friend bool operator==(const ReducibilityWitness&, const ReducibilityWitness&) = default;
};

bool verify_witness(const IntPoly& target, const ReducibilityWitness& w);
bool verify_witness(const RatPoly& target, const ReducibilityWitness& w);

/// A nontrivial factor pair of a primitive f: repeated factors via gcd(f, f'),
/// otherwise a single-prime Zassenhaus search (Hensel lifting plus subset
/// recombination restricted to degrees in `allowed`). The recombination stops
/// after `subset_cap` subsets.
std::optional<ReducibilityWitness> find_factor_witness(const IntPoly& f, const DegreeSet& allowed,
                                                       std::size_t subset_cap = 200000);

enum class VerdictKind { kIrreducible, kReducible, kInconclusive };
std::string to_string(VerdictKind kind);

struct OracleVerdict {
  VerdictKind kind = VerdictKind::kInconclusive;
  DegreeSet degrees;
  std::optional<ReducibilityWitness> witness;
};

/// f primitive with deg f >= 1; std::invalid_argument otherwise.
OracleVerdict oracle_verdict(const IntPoly& f, std::uint64_t prime_budget = kDefaultPrimeBudget);

/// Verdict on F = v^m f; a witness is rescaled to F itself.
OracleVerdict oracle_verdict(const LaguerreInstance& instance, std::uint64_t prime_budget = kDefaultPrimeBudget);

nlohmann::ordered_json to_json(const OracleVerdict& verdict);

struct WitnessSearchHit {
  InstanceParams params;
  ReducibilityWitness witness;  // c * g * h = F = v^m f
  std::uint64_t instances_tried = 0;
};

/// Exhaustive search over valid a_m, a_0..a_{m-1} with coefficients in
/// [-bound, bound]. Coordinates are ordered with the non-constant coefficients
/// of the a_i outermost, then a_m, then the constant terms a_{m-1}(0)..a_0(0);
/// each runs through 0, 1, -1, 2, -2, ... (a_m skips 0). The first instance the
/// oracle proves reducible is returned.
std::optional<WitnessSearchHit> search_reducible_witness(std::int64_t m, const AlphaParam& alpha,
                                                         const IntPoly& phi, std::int64_t coefficient_bound,
                                                         std::uint64_t prime_budget = kDefaultPrimeBudget);

}  // namespace lagcert
