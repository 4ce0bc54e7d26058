#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "lagcert/numeric.hpp"

namespace lagcert {

/// p-adic valuation value. The valuation of zero is a distinguished infinity
/// that compares above every finite value.
class Valuation {
 public:
  constexpr Valuation() = default;
  constexpr explicit Valuation(std::int64_t value) : value_(value), infinite_(false) {}

  static constexpr Valuation infinity() {
    Valuation v;
    v.infinite_ = true;
    return v;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  // Throws std::logic_error on infinity.
  std::int64_t value() const;

  friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) {
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    }
    return a.value_ <=> b.value_;
  }
  friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return infinity();
    return Valuation(a.value_ + b.value_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Valuation& v);

 private:
  std::int64_t value_ = 0;
  bool infinite_ = true;
};

/// All primes up to `bound`, ascending.
class PrimeSieve {
 public:
  PrimeSieve() = default;
  explicit PrimeSieve(std::uint64_t bound);

  std::uint64_t bound() const { return bound_; }
  const std::vector<std::uint64_t>& primes() const& { return primes_; }
  std::vector<std::uint64_t> primes() && { return std::move(primes_); }
  std::size_t size() const { return primes_.size(); }
  bool contains(std::uint64_t n) const;

 private:
  std::uint64_t bound_ = 0;
  std::vector<std::uint64_t> primes_;
};

PrimeSieve sieve_primes(std::uint64_t bound);

bool is_prime(std::uint64_t n);
bool is_prime(const Integer& n);

// Valuations. `p` must be prime (std::invalid_argument otherwise).
Valuation vp_int(const Integer& p, const Integer& n);
Valuation vp_rat(const Integer& p, const Rational& q);

/// v_p(n!) by Legendre's formula.
std::uint64_t factorial_valuation(std::uint64_t p, std::uint64_t n);

/// Largest prime dividing n, |n| >= 2.
Integer largest_prime_factor(const Integer& n);

/// Prime factorization of |n| (n != 0) as ascending (prime, exponent) pairs.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

/// Largest prime factor of (m+1)(m+2)...(m+k), for m >= k >= 2.
Integer product_lpf(std::int64_t m, std::int64_t k);

/// Largest prime p in (x-h, x] with p = u (mod v); requires gcd(u, v) = 1.
std::optional<Integer> prime_in_ap(const Integer& x, const Integer& h, const Integer& u,
                                   const Integer& v);

/// Smallest-prime-factor table for 0..bound; entry 0 and 1 hold 0.
std::vector<std::uint32_t> smallest_factor_table(std::uint32_t bound);

/// Largest-prime-factor table for 0..bound; entries 0 and 1 hold 1.
std::vector<std::uint32_t> largest_factor_table(std::uint32_t bound);

}  // namespace lagcert
