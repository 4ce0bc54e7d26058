#include "lagcert/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lagcert {

namespace {

constexpr std::uint64_t kPlainSieveLimit = 100'000'000;
constexpr std::uint64_t kTrialDivisionLimit = 1'000'000;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> plain_sieve(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint64_t> segmented_sieve(std::uint64_t bound) {
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(bound))) + 1;
  std::vector<std::uint64_t> base = plain_sieve(root);
  std::vector<std::uint64_t> primes = base;
  constexpr std::uint64_t kSegment = 1u << 22;
  std::vector<char> mark(kSegment);
  for (std::uint64_t lo = root + 1; lo <= bound; lo += kSegment) {
    const std::uint64_t hi = std::min(bound, lo + kSegment - 1);
    std::fill(mark.begin(), mark.end(), 0);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= hi; j += p) mark[j - lo] = 1;
    }
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (!mark[n - lo]) primes.push_back(n);
    }
  }
  return primes;
}

void require_prime(const Integer& p) {
  if (p < 2 || !is_prime(p)) {
    throw std::invalid_argument("valuation base " + p.get_str() + " is not prime");
  }
}

Integer pollard_brent(const Integer& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    constexpr unsigned long kBlock = 128;
    auto step = [&](Integer& v) {
      v = (v * v + c) % n;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(kBlock, r - k); ++i) {
          step(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd_int(q, n);
        k += kBlock;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        g = gcd_int(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect_factors(const Integer& n, std::vector<Integer>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Integer d = pollard_brent(n);
  collect_factors(d, out);
  collect_factors(n / d, out);
}

}  // namespace

std::int64_t Valuation::value() const {
  if (infinite_) throw std::logic_error("valuation of zero is infinite");
  return value_;
}

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
  if (v.is_infinite()) return os << "inf";
  return os << v.value_;
}

PrimeSieve::PrimeSieve(std::uint64_t bound)
    : bound_(bound),
      primes_(bound > kPlainSieveLimit ? segmented_sieve(bound) : plain_sieve(bound)) {}

bool PrimeSieve::contains(std::uint64_t n) const {
  return std::binary_search(primes_.begin(), primes_.end(), n);
}

PrimeSieve sieve_primes(std::uint64_t bound) { return PrimeSieve(bound); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for every n < 2^64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n.fits_ulong_p()) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

Valuation vp_int(const Integer& p, const Integer& n) {
  require_prime(p);
  if (n == 0) return Valuation::infinity();
  Integer rest = abs(n);
  const auto e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
  return Valuation(static_cast<std::int64_t>(e));
}

Valuation vp_rat(const Integer& p, const Rational& q) {
  require_prime(p);
  if (q == 0) return Valuation::infinity();
  Rational c = q;
  c.canonicalize();
  return Valuation(vp_int(p, c.get_num()).value() - vp_int(p, c.get_den()).value());
}

std::uint64_t factorial_valuation(std::uint64_t p, std::uint64_t n) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("factorial_valuation: p must be prime");
  std::uint64_t total = 0;
  while (n) {
    n /= p;
    total += n;
  }
  return total;
}

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
  if (n == 0) throw std::invalid_argument("factor_integer: zero has no factorization");
  Integer rest = abs(n);
  std::vector<Integer> found;
  for (unsigned long d = 2; d <= kTrialDivisionLimit; d += (d == 2 ? 1 : 2)) {
    if (Integer(d) * d > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      found.emplace_back(d);
      rest /= d;
    }
  }
  if (rest > 1) collect_factors(rest, found);
  std::sort(found.begin(), found.end());
  std::vector<std::pair<Integer, unsigned>> result;
  for (const Integer& f : found) {
    if (!result.empty() && result.back().first == f) {
      ++result.back().second;
    } else {
      result.emplace_back(f, 1u);
    }
  }
  return result;
}

Integer largest_prime_factor(const Integer& n) {
  if (abs(n) < 2) throw std::invalid_argument("largest_prime_factor: |n| must be at least 2");
  return factor_integer(n).back().first;
}

Integer product_lpf(std::int64_t m, std::int64_t k) {
  if (k < 2 || m < k) throw std::invalid_argument("product_lpf: requires m >= k >= 2");
  Integer best = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    Integer p = largest_prime_factor(Integer(static_cast<long>(m + i)));
    if (p > best) best = p;
  }
  return best;
}

std::optional<Integer> prime_in_ap(const Integer& x, const Integer& h, const Integer& u,
                                   const Integer& v) {
  if (v <= 0 || h <= 0) throw std::invalid_argument("prime_in_ap: h and v must be positive");
  if (gcd_int(u, v) != 1) throw std::invalid_argument("prime_in_ap: gcd(u, v) must be 1");
  const Integer lo = x - h;
  Integer residue = u % v;
  if (residue < 0) residue += v;
  // Largest n <= x with n = u (mod v).
  Integer shift = (x - residue) % v;
  if (shift < 0) shift += v;
  for (Integer n = x - shift; n > lo; n -= v) {
    if (is_prime(n)) return n;
  }
  return std::nullopt;
}

std::vector<std::uint32_t> smallest_factor_table(std::uint32_t bound) {
  std::vector<std::uint32_t> spf(static_cast<std::size_t>(bound) + 1, 0);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (spf[i]) continue;
    for (std::uint64_t j = i; j <= bound; j += i) {
      if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
    }
  }
  return spf;
}

std::vector<std::uint32_t> largest_factor_table(std::uint32_t bound) {
  std::vector<std::uint32_t> lpf(static_cast<std::size_t>(bound) + 1, 1);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (lpf[i] != 1) continue;
    for (std::uint64_t j = i; j <= bound; j += i) lpf[j] = static_cast<std::uint32_t>(i);
  }
  return lpf;
}

}  // namespace lagcert
