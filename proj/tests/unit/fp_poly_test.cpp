#include <gtest/gtest.h>

#include "generators.hpp"
#include "lagcert/fp_poly.hpp"

namespace lagcert {
namespace {

using testing::kSeed;
using testing::uniform;

FpPoly random_fp(std::mt19937_64& rng, std::uint64_t p, int degree) {
  std::vector<std::uint64_t> c;
  for (int i = 0; i < degree; ++i) c.push_back(static_cast<std::uint64_t>(uniform(rng, 0, static_cast<long>(p) - 1)));
  c.push_back(1);
  return FpPoly(p, c);
}

// Monic degree-d polynomial with index n in base p.
FpPoly nth_monic(std::uint64_t p, int d, std::uint64_t n) {
  std::vector<std::uint64_t> c;
  for (int i = 0; i < d; ++i, n /= p) c.push_back(n % p);
  c.push_back(1);
  return FpPoly(p, c);
}

bool brute_irreducible(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t n = 0; n < count; ++n) {
      if ((f % nth_monic(p, d, n)).is_zero()) return false;
    }
  }
  return true;
}

TEST(FpArith, InverseAndDivision) {
  for (std::uint64_t a = 1; a < 97; ++a) EXPECT_EQ(mod_mul(a, mod_inv(a, 97), 97), 1u);
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t p = std::vector<std::uint64_t>{2, 3, 5, 13, 101}[static_cast<std::size_t>(uniform(rng, 0, 4))];
    const FpPoly a = random_fp(rng, p, static_cast<int>(uniform(rng, 0, 10)));
    const FpPoly b = random_fp(rng, p, static_cast<int>(uniform(rng, 1, 5)));
    const FpDivRem qr = divrem(a, b);
    EXPECT_EQ(qr.quotient * b + qr.remainder, a);
    EXPECT_LT(qr.remainder.degree(), b.degree());
    const FpXgcd x = xgcd(a, b);
    EXPECT_EQ(x.s * a + x.t * b, x.g);
    EXPECT_EQ(x.g, gcd(a, b));
    EXPECT_TRUE((a % x.g).is_zero());
  }
}

TEST(FpArith, PowmodMatchesRepeatedMultiplication) {
  const FpPoly m(7, {3, 0, 1, 1});
  FpPoly acc = FpPoly::constant(7, 1);
  for (int e = 0; e < 40; ++e) {
    EXPECT_EQ(powmod(FpPoly::x(7), e, m), acc) << e;
    acc = (acc * FpPoly::x(7)) % m;
  }
}

TEST(FpIrreducible, AgreesWithBruteForce) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    for (int d = 1; d <= 4; ++d) {
      std::uint64_t count = 1;
      for (int i = 0; i < d; ++i) count *= p;
      for (std::uint64_t n = 0; n < count; ++n) {
        const FpPoly f = nth_monic(p, d, n);
        EXPECT_EQ(is_irreducible(f), brute_irreducible(f)) << p << " " << d << " " << n;
      }
    }
  }
}

TEST(FpIrreducible, CountsMatchNecklaceFormula) {
  auto count_irreducible = [](std::uint64_t p, int d) {
    std::uint64_t total = 1, hits = 0;
    for (int i = 0; i < d; ++i) total *= p;
    for (std::uint64_t n = 0; n < total; ++n) hits += is_irreducible(nth_monic(p, d, n));
    return hits;
  };
  EXPECT_EQ(count_irreducible(2, 3), 2u);
  EXPECT_EQ(count_irreducible(2, 4), 3u);
  EXPECT_EQ(count_irreducible(3, 2), 3u);
  EXPECT_EQ(count_irreducible(3, 3), 8u);
  EXPECT_EQ(count_irreducible(5, 2), 10u);
}

TEST(FpFactor, SquarefreeFactorizationMultipliesBack) {
  std::mt19937_64 rng(kSeed + 1);
  int tested = 0;
  while (tested < 100) {
    const std::uint64_t p = std::vector<std::uint64_t>{3, 7, 11, 101}[static_cast<std::size_t>(uniform(rng, 0, 3))];
    const FpPoly f = random_fp(rng, p, static_cast<int>(uniform(rng, 1, 12)));
    if (gcd(f, f.derivative()).degree() != 0) continue;
    ++tested;
    FpPoly prod = FpPoly::constant(p, 1);
    int ddf_total = 0;
    for (const auto& [d, part] : distinct_degree_factorization(f)) ddf_total += part.degree();
    EXPECT_EQ(ddf_total, f.degree());
    for (const auto& g : factor_squarefree(f)) {
      EXPECT_TRUE(is_irreducible(g));
      prod = prod * g;
    }
    EXPECT_EQ(prod, f);
  }
}

TEST(Phi, ReferencePolynomial) {
  const IntPoly phi = parse_poly("x^2 - x + 17");
  EXPECT_TRUE(check_phi(phi, 16));
  EXPECT_FALSE(is_irreducible_mod_p(phi, 17));
  EXPECT_FALSE(check_phi(phi, 17));
}

TEST(Phi, CrtConstruction) {
  for (int d : {2, 3}) {
    const IntPoly phi = construct_phi(d, 53);
    EXPECT_EQ(phi.degree(), d);
    EXPECT_TRUE(phi.is_monic());
    EXPECT_TRUE(check_phi(phi, 53));
  }
  EXPECT_THROW(construct_phi(1, 2), std::invalid_argument);
  EXPECT_THROW(construct_phi(0, 10), std::invalid_argument);
}

}  // namespace
}  // namespace lagcert
