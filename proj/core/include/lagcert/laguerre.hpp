#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagcert/arith.hpp"
#include "lagcert/poly.hpp"

namespace lagcert {

/// alpha = u / v with gcd(u, v) = 1, v > 0, and alpha not a negative integer.
class AlphaParam {
 public:
  /// Throws std::invalid_argument on any violated invariant.
  AlphaParam(std::int64_t u, std::int64_t v);

  std::int64_t u() const { return u_; }
  std::int64_t v() const { return v_; }
  bool is_integer() const { return v_ == 1; }
  Rational value() const { return make_rational(Integer(static_cast<long>(u_)), Integer(static_cast<long>(v_))); }

  friend bool operator==(const AlphaParam&, const AlphaParam&) = default;

 private:
  std::int64_t u_;
  std::int64_t v_;
};

/// b_0, ..., b_m; b_j = C(m,j)(m+alpha)...(j+1+alpha) for j < m and b_m the
/// leading multiplier (a_m, or 1 when no multiplier is supplied).
struct LaguerreCoefficients {
  std::int64_t m = 0;
  std::int64_t u = 0;
  std::int64_t v = 1;
  std::vector<Rational> b;
};

/// Product form over the rational alpha.
std::vector<Rational> coefficients_product_form(std::int64_t m, const AlphaParam& alpha);
/// Quotient form C(m,l) (vm+u)(v(m-1)+u)...(v(l+1)+u) / v^(m-l).
std::vector<Rational> coefficients_quotient_form(std::int64_t m, const AlphaParam& alpha);

/// Both forms, asserted equal; b_m set to a_m.
LaguerreCoefficients laguerre_coefficients(std::int64_t m, const AlphaParam& alpha,
                                           const Integer& a_m = 1);

/// b_0 / b_j by the closed form (j+u)...(1+u) / C(m,j), checked against the
/// direct quotient. Requires v = 1 and 1 <= j <= m.
Rational coefficient_ratio(std::int64_t j, const LaguerreCoefficients& coeffs);

/// Raw inputs of an instance, before validation.
struct InstanceParams {
  std::int64_t m = 1;
  std::int64_t u = 0;
  std::int64_t v = 1;
  Integer a_m = 1;
  std::vector<IntPoly> a_parts;  // a_0 ... a_{m-1}
  IntPoly phi;

  friend bool operator==(const InstanceParams&, const InstanceParams&) = default;
};

enum class ViolationKind {
  kBadAlpha,            // gcd(u, v) != 1 or v <= 0
  kNegativeIntegerAlpha,
  kDegree,              // deg a_i >= deg phi
  kContentLeading,      // prime <= vm+u divides a_m
  kContentConstant,     // prime <= vm+u divides content(a_0), or a_0 = 0
  kPhiReducible,        // phi reducible modulo a prime <= vm+u
};

struct Violation {
  ViolationKind kind;
  Integer prime = 0;      // offending prime where applicable
  std::int64_t index = -1;  // offending a_i for kDegree
  std::string message;
};

std::string to_string(ViolationKind kind);

class HypothesisError : public std::invalid_argument {
 public:
  explicit HypothesisError(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Structural problems (m < 1, wrong number of parts, phi not monic, a_m = 0)
/// throw std::invalid_argument. Hypothesis violations are returned, one per
/// failed condition.
std::vector<Violation> check_hypotheses(const InstanceParams& params);

/// A generalized phi-Laguerre instance. Internally the integer model
/// F = v^m * f is kept, whose phi-expansion has parts v^m b_j a_j(x).
class LaguerreInstance {
 public:
  const InstanceParams& params() const { return params_; }
  std::int64_t m() const { return params_.m; }
  const AlphaParam& alpha() const { return alpha_; }
  const Integer& a_m() const { return params_.a_m; }
  const IntPoly& phi() const { return params_.phi; }
  const IntPoly& a_part(std::int64_t i) const { return params_.a_parts.at(static_cast<std::size_t>(i)); }
  const LaguerreCoefficients& coeffs() const { return coeffs_; }
  /// v^m (vm + u): the bound below which the hypotheses are imposed is v*m + u.
  std::int64_t hypothesis_bound() const { return params_.v * params_.m + params_.u; }
  /// v^m * b_j as an integer, j = 0..m-1; index m holds v^m * a_m.
  const std::vector<Integer>& scaled_coefficients() const { return scaled_; }
  /// F = v^m * (a_m phi^m + sum b_j a_j phi^j).
  const IntPoly& scaled_f() const { return scaled_f_; }
  /// L = F / (v^m m!).
  RatPoly laguerre_polynomial() const;
  bool hypotheses_checked() const { return checked_; }

 private:
  friend LaguerreInstance build_instance(InstanceParams params);
  friend LaguerreInstance build_instance_relaxed(InstanceParams params);
  LaguerreInstance(InstanceParams params, bool checked);

  InstanceParams params_;
  AlphaParam alpha_;
  LaguerreCoefficients coeffs_;
  std::vector<Integer> scaled_;
  IntPoly scaled_f_;
  bool checked_;
};

/// Eager validation; throws HypothesisError listing every violation.
LaguerreInstance build_instance(InstanceParams params);
/// Structural checks only; for instances that knowingly violate hypotheses.
LaguerreInstance build_instance_relaxed(InstanceParams params);

/// v_p(b_j) for j = 0..m (b_m = a_m); p must not divide v.
std::vector<Valuation> valuation_vector(const LaguerreInstance& instance, const Integer& p);
/// Same, from coefficients alone.
std::vector<Valuation> valuation_vector(const LaguerreCoefficients& coeffs, const Integer& p);

/// Textual block: one "key = value" per line (m, u, v, a_m, a_{m-1}..a_0, phi).
std::string serialize_instance(const InstanceParams& params);
InstanceParams parse_instance(const std::string& text);

}  // namespace lagcert
