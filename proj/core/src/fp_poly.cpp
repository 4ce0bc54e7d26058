#include "lagcert/fp_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace lagcert {

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
  if (new_r == 0) throw std::domain_error("zero has no inverse");
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

FpPoly::FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  return *this * mod_inv(leading(), p_);
}

FpPoly FpPoly::derivative() const {
  if (c_.size() <= 1) return FpPoly(p_);
  std::vector<std::uint64_t> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mod_mul(c_[i], i % p_, p_);
  return FpPoly(p_, std::move(d));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::uint64_t s = a.coeff(i) + b.coeff(i);
    if (s >= a.p_) s -= a.p_;
    r[i] = s;
  }
  return FpPoly(a.p_, std::move(r));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  std::vector<std::uint64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t x = a.coeff(i), y = b.coeff(i);
    r[i] = x >= y ? x - y : x + (a.p_ - y);
  }
  return FpPoly(a.p_, std::move(r));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
  std::vector<std::uint64_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r[i + j] = (r[i + j] + mod_mul(a.c_[i], b.c_[j], a.p_)) % a.p_;
    }
  }
  return FpPoly(a.p_, std::move(r));
}

FpPoly operator*(const FpPoly& a, std::uint64_t s) {
  std::vector<std::uint64_t> r(a.c_);
  for (auto& c : r) c = mod_mul(c, s % a.p_, a.p_);
  return FpPoly(a.p_, std::move(r));
}

FpDivRem divrem(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial over F_p");
  const std::uint64_t p = a.modulus();
  if (a.degree() < b.degree()) return {FpPoly(p), a};
  std::vector<std::uint64_t> r = a.coeffs();
  std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const std::uint64_t inv = mod_inv(b.leading(), p);
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    const std::uint64_t t = mod_mul(r[i], inv, p);
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) {
      const std::uint64_t sub = mod_mul(t, b.coeffs()[j], p);
      std::uint64_t& x = r[i - db + j];
      x = x >= sub ? x - sub : x + (p - sub);
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divrem(a, b).remainder; }

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpXgcd xgcd(const FpPoly& a, const FpPoly& b) {
  const std::uint64_t p = a.modulus();
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = FpPoly::constant(p, 1), s1(p);
  FpPoly t0(p), t1 = FpPoly::constant(p, 1);
  while (!r1.is_zero()) {
    FpDivRem qr = divrem(r0, r1);
    r0 = std::exchange(r1, qr.remainder);
    s0 = std::exchange(s1, s0 - qr.quotient * s1);
    t0 = std::exchange(t1, t0 - qr.quotient * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const std::uint64_t inv = mod_inv(r0.leading(), p);
  return {r0 * inv, s0 * inv, t0 * inv};
}

FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m) {
  const std::uint64_t p = m.modulus();
  FpPoly result = FpPoly::constant(p, 1) % m;
  FpPoly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

FpPoly reduce_mod_p(const IntPoly& f, std::uint64_t p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("reduce_mod_p: modulus must be prime");
  if (p >= (std::uint64_t{1} << 63)) throw std::invalid_argument("reduce_mod_p: prime too large");
  std::vector<std::uint64_t> c(f.coeffs().size());
  const Integer P(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < c.size(); ++i) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), f.coeffs()[i].get_mpz_t(), P.get_mpz_t());
    c[i] = r.get_ui();
  }
  return FpPoly(p, std::move(c));
}

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^(p^k) mod f by repeated p-th powering.
FpPoly frobenius_power(const FpPoly& f, int k) {
  const Integer P(static_cast<unsigned long>(f.modulus()));
  FpPoly h = FpPoly::x(f.modulus()) % f;
  for (int i = 0; i < k; ++i) h = powmod(h, P, f);
  return h;
}

}  // namespace

bool is_irreducible(const FpPoly& f) {
  const int d = f.degree();
  if (d < 1) throw std::invalid_argument("irreducibility test needs degree >= 1");
  if (d == 1) return true;
  const FpPoly g = f.monic();
  const FpPoly x = FpPoly::x(g.modulus());
  // Rabin: x^(p^d) = x mod g and gcd(x^(p^(d/q)) - x, g) = 1 for prime q | d.
  if (frobenius_power(g, d) != x % g) return false;
  for (int q : prime_divisors(d)) {
    if (gcd(frobenius_power(g, d / q) - x, g).degree() != 0) return false;
  }
  return true;
}

bool is_irreducible_mod_p(const IntPoly& phi, std::uint64_t p) {
  if (phi.degree() < 1) throw std::invalid_argument("is_irreducible_mod_p: phi must have degree >= 1");
  const FpPoly r = reduce_mod_p(phi, p);
  if (r.degree() != phi.degree()) {
    throw std::invalid_argument("is_irreducible_mod_p: degree drops modulo p");
  }
  return is_irreducible(r);
}

bool check_phi(const IntPoly& phi, std::uint64_t bound) {
  for (std::uint64_t p : sieve_primes(bound).primes()) {
    if (!is_irreducible_mod_p(phi, p)) return false;
  }
  return true;
}

IntPoly construct_phi(int degree, std::uint64_t bound) {
  if (degree < 1) throw std::invalid_argument("construct_phi: degree must be >= 1");
  if (bound < 2) throw std::invalid_argument("construct_phi: bound must be >= 2");
  if (degree == 1) {
    throw std::invalid_argument("construct_phi: linear phi is outside the supported range");
  }
  std::vector<Integer> coeffs(static_cast<std::size_t>(degree), Integer(0));
  Integer modulus = 1;
  for (std::uint64_t p : sieve_primes(bound).primes()) {
    // Enumerate monic degree-d polynomials by the base-p number of their lower coefficients.
    std::vector<std::uint64_t> low(static_cast<std::size_t>(degree), 0);
    for (;;) {
      std::vector<std::uint64_t> c = low;
      c.push_back(1);
      if (is_irreducible(FpPoly(p, c))) break;
      std::size_t i = 0;
      while (i < low.size() && ++low[i] == p) low[i++] = 0;
      if (i == low.size()) throw std::logic_error("no irreducible polynomial found");
    }
    const Integer P(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      // Solve c = coeffs[i] (mod modulus), c = low[i] (mod p).
      Integer inv;
      mpz_invert(inv.get_mpz_t(), modulus.get_mpz_t(), P.get_mpz_t());
      Integer delta = (Integer(static_cast<unsigned long>(low[i])) - coeffs[i]) * inv;
      mpz_fdiv_r(delta.get_mpz_t(), delta.get_mpz_t(), P.get_mpz_t());
      coeffs[i] += modulus * delta;
    }
    modulus *= P;
  }
  // Balanced representatives keep the coefficients small in absolute value.
  for (Integer& c : coeffs) {
    if (2 * c > modulus) c -= modulus;
  }
  coeffs.emplace_back(1);
  return IntPoly(std::move(coeffs));
}

std::vector<std::pair<int, FpPoly>> distinct_degree_factorization(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  const Integer P(static_cast<unsigned long>(p));
  std::vector<std::pair<int, FpPoly>> out;
  FpPoly rest = f.monic();
  const FpPoly x = FpPoly::x(p);
  FpPoly h = x % rest;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = powmod(h, P, rest);
    FpPoly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      out.emplace_back(d, g);
      rest = divrem(rest, g).quotient;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) out.emplace_back(rest.degree(), rest);
  return out;
}

std::vector<FpPoly> equal_degree_split(const FpPoly& f, int d, std::mt19937_64& rng) {
  if (f.degree() == d) return {f.monic()};
  const std::uint64_t p = f.modulus();
  const int n = f.degree();
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  for (;;) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(n));
    for (auto& v : c) v = coeff(rng);
    FpPoly a(p, c);
    if (a.degree() < 1) continue;
    FpPoly b(p);
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(d-1)).
      FpPoly t = a % f;
      FpPoly sum = t;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % f;
        sum = sum + t;
      }
      b = sum;
    } else {
      Integer e = pow_int(Integer(static_cast<unsigned long>(p)), static_cast<std::uint64_t>(d));
      e = (e - 1) / 2;
      b = powmod(a, e, f) - FpPoly::constant(p, 1);
    }
    FpPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < n) {
      auto left = equal_degree_split(g, d, rng);
      auto right = equal_degree_split(divrem(f, g).quotient.monic(), d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<FpPoly> factor_squarefree(const FpPoly& f, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FpPoly> out;
  for (auto& [d, product] : distinct_degree_factorization(f)) {
    auto pieces = equal_degree_split(product, d, rng);
    out.insert(out.end(), pieces.begin(), pieces.end());
  }
  std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                        b.coeffs().rend());
  });
  return out;
}

}  // namespace lagcert
