#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lagcert/arith.hpp"
#include "lagcert/numeric.hpp"

namespace lagcert {

/// Dense univariate polynomial over Z, coefficients in ascending degree.
/// Canonical: no trailing zeros, so the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t degree);
  static IntPoly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Integer& leading() const;
  /// Coefficient of x^i, zero beyond the degree.
  Integer coeff(std::size_t i) const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  Integer evaluate(const Integer& at) const;
  Rational evaluate(const Rational& at) const;
  IntPoly derivative() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& g);
  IntPoly& operator-=(const IntPoly& g);
  IntPoly& operator*=(const IntPoly& g);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly f, const IntPoly& g) { return f += g; }
  friend IntPoly operator-(IntPoly f, const IntPoly& g) { return f -= g; }
  friend IntPoly operator*(const IntPoly& f, const IntPoly& g);
  friend IntPoly operator*(IntPoly f, const Integer& c) { return f *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly f) { return f *= c; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPoly add(const IntPoly& f, const IntPoly& g);
IntPoly sub(const IntPoly& f, const IntPoly& g);
IntPoly mul(const IntPoly& f, const IntPoly& g);
IntPoly scale(const IntPoly& f, const Integer& c);
IntPoly pow(const IntPoly& f, unsigned e);

/// Quotient and remainder by a monic divisor.
struct DivRem {
  IntPoly quotient;
  IntPoly remainder;
};
DivRem divrem_monic(const IntPoly& f, const IntPoly& monic_divisor);

/// f / g when g divides f in Z[x], nullopt otherwise.
std::optional<IntPoly> exact_divide(const IntPoly& f, const IntPoly& g);

/// Substitute inner into outer: outer(inner(x)).
IntPoly compose(const IntPoly& outer, const IntPoly& inner);

/// Positive gcd of the coefficients; f must be nonzero.
Integer content(const IntPoly& f);
/// f / content(f) with positive leading coefficient.
IntPoly primitive_part(const IntPoly& f);
/// Primitive gcd in Z[x] with positive leading coefficient.
IntPoly gcd(const IntPoly& f, const IntPoly& g);

Valuation gauss_valuation(const Integer& p, const IntPoly& f);

/// Polynomial with exact rational coefficients, ascending degree, canonical.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  explicit RatPoly(const IntPoly& f);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const;

  RatPoly& operator*=(const Rational& c);
  friend RatPoly operator*(RatPoly f, const Rational& c) { return f *= c; }
  friend bool operator==(const RatPoly&, const RatPoly&) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Unique representation f = sum parts[i] * phi^i with deg parts[i] < deg phi.
struct PhiExpansion {
  IntPoly phi;
  std::vector<IntPoly> parts;

  std::size_t top_index() const { return parts.empty() ? 0 : parts.size() - 1; }
  IntPoly reassemble() const;
};

PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi);

// Text format: "3x^2 - x + 17". Parsing accepts any term order, optional '*',
// and repeated powers; printing is descending and canonical.
IntPoly parse_poly(std::string_view text);
std::string to_string(const IntPoly& f);
std::string to_string(const RatPoly& f);
std::ostream& operator<<(std::ostream& os, const IntPoly& f);
std::ostream& operator<<(std::ostream& os, const RatPoly& f);

}  // namespace lagcert
