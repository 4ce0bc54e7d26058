#include <gtest/gtest.h>

#include <random>

#include "lagcert/arith.hpp"

namespace lagcert {
namespace {

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

TEST(Sieve, MatchesTrialDivision) {
  const PrimeSieve s = sieve_primes(5000);
  for (std::uint64_t n = 0; n <= 5000; ++n) {
    EXPECT_EQ(s.contains(n), trial_prime(n)) << n;
    EXPECT_EQ(is_prime(n), trial_prime(n)) << n;
  }
  EXPECT_EQ(s.size(), 669u);
}

TEST(Sieve, TemporaryPrimesSurviveTheLoop) {
  std::uint64_t sum = 0;
  for (std::uint64_t p : sieve_primes(30).primes()) sum += p;
  EXPECT_EQ(sum, 129u);
}

TEST(IsPrime, BigIntegers) {
  EXPECT_TRUE(is_prime(Integer("170141183460469231731687303715884105727")));
  EXPECT_FALSE(is_prime(Integer("170141183460469231731687303715884105729")));
  EXPECT_FALSE(is_prime(Integer(-7)));
}

TEST(Valuation, Basics) {
  EXPECT_EQ(vp_int(2, 48), Valuation(4));
  EXPECT_EQ(vp_int(3, -54), Valuation(3));
  EXPECT_TRUE(vp_int(5, 0).is_infinite());
  EXPECT_EQ(vp_rat(2, Rational(3, 8)), Valuation(-3));
  EXPECT_LT(Valuation(100), Valuation::infinity());
  EXPECT_EQ(Valuation(2) + Valuation(3), Valuation(5));
  EXPECT_THROW((void)Valuation::infinity().value(), std::logic_error);
}

TEST(Valuation, LegendreAgreesWithFactorial) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    Integer fact = 1;
    for (std::uint64_t n = 1; n <= 80; ++n) {
      fact *= static_cast<unsigned long>(n);
      EXPECT_EQ(Valuation(static_cast<std::int64_t>(factorial_valuation(p, n))), vp_int(p, fact)) << p << " " << n;
    }
  }
}

TEST(Factor, RoundTripOnRandomIntegers) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const Integer n(static_cast<unsigned long>(rng() % 10000000 + 2));
    Integer back = 1;
    Integer last = 0;
    for (const auto& [p, e] : factor_integer(n)) {
      EXPECT_TRUE(is_prime(p));
      EXPECT_GT(p, last);
      last = p;
      for (unsigned k = 0; k < e; ++k) back *= p;
    }
    EXPECT_EQ(back, n);
    EXPECT_EQ(largest_prime_factor(n), last);
  }
}

TEST(Factor, ProductLargestPrimeFactor) {
  for (std::int64_t m = 2; m < 60; ++m) {
    for (std::int64_t k = 2; k <= m; ++k) {
      Integer prod = 1;
      for (std::int64_t i = 1; i <= k; ++i) prod *= static_cast<long>(m + i);
      EXPECT_EQ(product_lpf(m, k), largest_prime_factor(prod)) << m << " " << k;
    }
  }
}

TEST(Factor, Tables) {
  const auto spf = smallest_factor_table(200);
  const auto lpf = largest_factor_table(200);
  EXPECT_EQ(spf[0], 0u);
  EXPECT_EQ(lpf[1], 1u);
  for (std::uint32_t n = 2; n <= 200; ++n) {
    const auto f = factor_integer(Integer(n));
    EXPECT_EQ(spf[n], f.front().first.get_ui()) << n;
    EXPECT_EQ(lpf[n], f.back().first.get_ui()) << n;
  }
}

TEST(PrimeInAp, LargestInWindow) {
  EXPECT_EQ(prime_in_ap(100, 10, 1, 4), Integer(97));
  EXPECT_EQ(prime_in_ap(100, 10, 3, 4), std::nullopt);
  EXPECT_EQ(prime_in_ap(30, 30, 2, 3), Integer(29));
}

}  // namespace
}  // namespace lagcert
