#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lagcert/poly.hpp"

namespace lagcert {

/// Polynomial over the prime field F_p with word-size residues (p < 2^63).
class FpPoly {
 public:
  explicit FpPoly(std::uint64_t p) : p_(p) {}
  FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static FpPoly x(std::uint64_t p) { return FpPoly(p, {0, 1}); }
  static FpPoly constant(std::uint64_t p, std::uint64_t c) { return FpPoly(p, {c % p}); }

  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::uint64_t leading() const { return c_.empty() ? 0 : c_.back(); }
  std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<std::uint64_t>& coeffs() const { return c_; }

  FpPoly monic() const;
  FpPoly derivative() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, std::uint64_t s);
  friend bool operator==(const FpPoly&, const FpPoly&) = default;

 private:
  void trim();
  std::uint64_t p_;
  std::vector<std::uint64_t> c_;
};

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);

struct FpDivRem {
  FpPoly quotient;
  FpPoly remainder;
};
FpDivRem divrem(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
/// Monic gcd (zero if both inputs are zero).
FpPoly gcd(FpPoly a, FpPoly b);
/// Returns g = gcd(a, b) monic and s, t with s*a + t*b = g.
struct FpXgcd {
  FpPoly g, s, t;
};
FpXgcd xgcd(const FpPoly& a, const FpPoly& b);
/// base^e mod m.
FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m);

/// Coefficientwise reduction; p must be prime and below 2^63.
FpPoly reduce_mod_p(const IntPoly& f, std::uint64_t p);

/// Irreducibility over F_p of a polynomial whose degree survives reduction.
bool is_irreducible(const FpPoly& f);
/// phi monic with deg >= 1; true iff phi mod p is irreducible over F_p.
bool is_irreducible_mod_p(const IntPoly& phi, std::uint64_t p);
/// True iff phi is irreducible modulo every prime <= bound.
bool check_phi(const IntPoly& phi, std::uint64_t bound);
/// Monic degree-d polynomial irreducible modulo every prime <= bound, built by CRT.
IntPoly construct_phi(int degree, std::uint64_t bound);

/// Distinct-degree factorization of a squarefree monic f: (degree, product) pairs.
std::vector<std::pair<int, FpPoly>> distinct_degree_factorization(const FpPoly& f);
/// Splits a monic squarefree product of degree-d irreducibles into its factors.
std::vector<FpPoly> equal_degree_split(const FpPoly& f, int d, std::mt19937_64& rng);
/// Complete factorization of a monic squarefree polynomial into monic irreducibles,
/// sorted by (degree, coefficients).
std::vector<FpPoly> factor_squarefree(const FpPoly& f, std::uint64_t seed = 0x5eed);

}  // namespace lagcert
