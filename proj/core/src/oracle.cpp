#include "lagcert/oracle.hpp"

#include <algorithm>
#include <functional>

#include "lagcert/fp_poly.hpp"

namespace lagcert {

namespace {

Integer as_int(std::int64_t x) { return Integer(static_cast<long>(x)); }

bool divides(const Integer& p, const Integer& n) { return mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0; }

// ---- polynomials modulo an integer M, coefficients kept in [0, M)

IntPoly reduce(const IntPoly& f, const Integer& M) {
  std::vector<Integer> c(f.coeffs());
  for (Integer& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly symmetric(const IntPoly& f, const Integer& M) {
  std::vector<Integer> c(f.coeffs());
  const Integer half = M / 2;
  for (Integer& x : c) {
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), M.get_mpz_t());
    if (x > half) x -= M;
  }
  return IntPoly(std::move(c));
}

IntPoly lift(const FpPoly& f) {
  std::vector<Integer> c;
  for (std::uint64_t x : f.coeffs()) c.emplace_back(static_cast<unsigned long>(x));
  return IntPoly(std::move(c));
}

struct Factorization {
  IntPoly g;
  IntPoly h;
  IntPoly s;
  IntPoly t;
};

// One quadratic Hensel step: f = g h mod M, s g + t h = 1 mod M, h monic,
// becomes the same relations modulo M^2.
Factorization hensel_step(const IntPoly& f, const Factorization& x, const Integer& M2) {
  const IntPoly e = reduce(f - x.g * x.h, M2);
  const DivRem qr = divrem_monic(reduce(x.s * e, M2), x.h);
  const IntPoly g1 = reduce(x.g + x.t * e + qr.quotient * x.g, M2);
  const IntPoly h1 = reduce(x.h + qr.remainder, M2);
  const IntPoly b = reduce(x.s * g1 + x.t * h1 - IntPoly::constant(1), M2);
  const DivRem cd = divrem_monic(reduce(x.s * b, M2), h1);
  const IntPoly s1 = reduce(x.s - cd.remainder, M2);
  const IntPoly t1 = reduce(x.t - x.t * b - cd.quotient * g1, M2);
  return {g1, h1, s1, t1};
}

FpPoly product(const std::vector<FpPoly>& fs, std::size_t lo, std::size_t hi, std::uint64_t p) {
  FpPoly acc = FpPoly::constant(p, 1);
  for (std::size_t i = lo; i < hi; ++i) acc = acc * fs[i];
  return acc;
}

// Lifts target = lc(target) * prod(factors[lo, hi)) mod p to monic factors
// modulo M = p^(2^steps).
void multifactor_lift(const IntPoly& target, const std::vector<FpPoly>& factors, std::size_t lo, std::size_t hi,
                      std::uint64_t p, const Integer& M, std::vector<IntPoly>& out) {
  if (hi - lo == 1) {
    Integer inv;
    const Integer lc = target.leading();
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
    out.push_back(reduce(target * inv, M));
    return;
  }
  const std::size_t mid = lo + (hi - lo) / 2;
  const std::uint64_t lc_p = reduce_mod_p(IntPoly::constant(target.leading()), p).coeff(0);
  const FpPoly g0 = product(factors, lo, mid, p) * lc_p;
  const FpPoly h0 = product(factors, mid, hi, p);
  FpXgcd eg = xgcd(g0, h0);
  // Normalize so that deg s < deg h and deg t < deg g.
  const FpDivRem qs = divrem(eg.s, h0);
  const FpPoly s0 = qs.remainder;
  const FpPoly t0 = eg.t + qs.quotient * g0;

  const Integer P(static_cast<unsigned long>(p));
  Factorization x{lift(g0), lift(h0), lift(s0), lift(t0)};
  for (Integer modulus = P; modulus < M;) {
    modulus *= modulus;
    x = hensel_step(reduce(target, modulus), x, modulus);
  }
  multifactor_lift(reduce(x.g, M), factors, lo, mid, p, M, out);
  multifactor_lift(reduce(x.h, M), factors, mid, hi, p, M, out);
}

Integer factor_bound(const IntPoly& f) {
  Integer sq = 0;
  for (const Integer& c : f.coeffs()) sq += c * c;
  Integer norm;
  mpz_sqrt(norm.get_mpz_t(), sq.get_mpz_t());
  norm += 1;
  Integer two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(f.degree()));
  return 2 * abs_value(f.leading()) * two_n * norm;
}

std::vector<int> subset_sums(const std::vector<int>& degrees, int n) {
  std::vector<char> reach(static_cast<std::size_t>(n) + 1, 0);
  reach[0] = 1;
  for (int d : degrees) {
    for (int s = n; s >= d; --s) {
      if (reach[static_cast<std::size_t>(s - d)]) reach[static_cast<std::size_t>(s)] = 1;
    }
  }
  std::vector<int> out;
  for (int s = 0; s <= n; ++s) {
    if (reach[static_cast<std::size_t>(s)]) out.push_back(s);
  }
  return out;
}

std::optional<ReducibilityWitness> zassenhaus(const IntPoly& f, const DegreeSet& allowed, std::size_t subset_cap) {
  const int n = f.degree();
  // Prime with the fewest modular factors among the first few usable ones.
  std::uint64_t best_p = 0;
  std::size_t best_r = 0;
  int usable = 0;
  for (std::uint64_t p : sieve_primes(kDefaultPrimeBudget * 5).primes()) {
    if (divides(Integer(static_cast<unsigned long>(p)), f.leading())) continue;
    const DegreePattern pat = degree_pattern(f, p);
    if (!pat.usable) continue;
    if (best_p == 0 || pat.degrees.size() < best_r) {
      best_p = p;
      best_r = pat.degrees.size();
    }
    if (++usable >= 8) break;
  }
  if (best_p == 0 || best_r < 2) return std::nullopt;

  const FpPoly fp = reduce_mod_p(f, best_p);
  const std::vector<FpPoly> modular = factor_squarefree(fp.monic());
  const Integer P(static_cast<unsigned long>(best_p));
  const Integer bound = factor_bound(f);
  Integer M = P;
  while (M <= bound) M *= M;

  std::vector<IntPoly> lifted;
  multifactor_lift(reduce(f, M), modular, 0, modular.size(), best_p, M, lifted);

  const std::size_t r = lifted.size();
  const Integer lc = f.leading();
  std::size_t visited = 0;
  std::vector<std::size_t> pick;
  std::optional<ReducibilityWitness> found;
  std::function<bool(std::size_t, std::size_t, int)> recurse = [&](std::size_t start, std::size_t left,
                                                                   int deg) -> bool {
    if (left == 0) {
      if (++visited > subset_cap) return true;
      if (deg < 1 || deg >= n || !allowed.contains(deg)) return false;
      IntPoly prod = IntPoly::constant(lc);
      for (std::size_t i : pick) prod = reduce(prod * lifted[i], M);
      const IntPoly cand = primitive_part(symmetric(prod, M));
      if (cand.degree() != deg) return false;
      if (auto q = exact_divide(f, cand)) {
        found = ReducibilityWitness{Rational(1), cand, *q};
        return true;
      }
      return false;
    }
    for (std::size_t i = start; i + left <= r; ++i) {
      pick.push_back(i);
      const bool stop = recurse(i + 1, left - 1, deg + lifted[i].degree());
      pick.pop_back();
      if (stop) return true;
    }
    return false;
  };
  for (std::size_t size = 1; size <= r / 2 && !found && visited <= subset_cap; ++size) recurse(0, size, 0);
  return found;
}

}  // namespace

DegreePattern degree_pattern(const IntPoly& f, std::uint64_t p) {
  if (f.degree() < 1) throw std::invalid_argument("degree_pattern needs deg f >= 1");
  if (!is_prime(p)) throw std::invalid_argument("degree_pattern needs a prime");
  if (divides(Integer(static_cast<unsigned long>(p)), f.leading())) {
    throw std::invalid_argument("p divides the leading coefficient");
  }
  DegreePattern out;
  out.p = p;
  const FpPoly fp = reduce_mod_p(f, p).monic();
  const FpPoly df = fp.derivative();
  if (df.is_zero() || gcd(fp, df).degree() > 0) return out;
  for (const auto& [d, prod] : distinct_degree_factorization(fp)) {
    for (int i = 0; i < prod.degree() / d; ++i) out.degrees.push_back(d);
  }
  std::sort(out.degrees.begin(), out.degrees.end());
  out.usable = true;
  return out;
}

DegreeSet possible_degrees(const IntPoly& f, std::uint64_t prime_budget) {
  if (f.degree() < 1) throw std::invalid_argument("possible_degrees needs deg f >= 1");
  const int n = f.degree();
  DegreeSet out;
  out.degree = n;
  std::vector<char> alive(static_cast<std::size_t>(n) + 1, 1);
  auto count_alive = [&] { return std::count(alive.begin(), alive.end(), 1); };
  if (n > 1 && prime_budget >= 2) {
    for (std::uint64_t p : sieve_primes(prime_budget).primes()) {
      if (divides(Integer(static_cast<unsigned long>(p)), f.leading())) continue;
      const DegreePattern pat = degree_pattern(f, p);
      if (!pat.usable) continue;
      out.primes_used.push_back(p);
      std::vector<char> reach(alive.size(), 0);
      for (int s : subset_sums(pat.degrees, n)) reach[static_cast<std::size_t>(s)] = 1;
      for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = alive[i] && reach[i];
      if (count_alive() == 2) break;
    }
  }
  out.low_confidence = n > 1 && out.primes_used.empty();
  for (int d = 0; d <= n; ++d) {
    if (alive[static_cast<std::size_t>(d)]) out.possible.insert(d);
  }
  return out;
}

bool verify_witness(const IntPoly& target, const ReducibilityWitness& w) {
  return verify_witness(RatPoly(target), w);
}

bool verify_witness(const RatPoly& target, const ReducibilityWitness& w) {
  if (w.g.degree() < 1 || w.h.degree() < 1) return false;
  return RatPoly(w.g * w.h) * w.c == target;
}

std::optional<ReducibilityWitness> find_factor_witness(const IntPoly& f, const DegreeSet& allowed,
                                                       std::size_t subset_cap) {
  if (f.degree() < 2) return std::nullopt;
  const Integer c = content(f) * (f.leading() < 0 ? -1 : 1);
  const IntPoly pp = primitive_part(f);
  std::optional<ReducibilityWitness> w;
  const IntPoly g = gcd(pp, pp.derivative());
  if (g.degree() >= 1) {
    w = ReducibilityWitness{Rational(1), g, *exact_divide(pp, g)};
  } else {
    w = zassenhaus(pp, allowed, subset_cap);
  }
  if (!w) return std::nullopt;
  w->c *= c;
  w->c.canonicalize();
  return w;
}

std::string to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kIrreducible: return "irreducible";
    case VerdictKind::kReducible: return "reducible";
    case VerdictKind::kInconclusive: return "inconclusive";
  }
  return "unknown";
}

OracleVerdict oracle_verdict(const IntPoly& f, std::uint64_t prime_budget) {
  if (f.degree() < 1) throw std::invalid_argument("oracle needs deg f >= 1");
  if (content(f) != 1) throw std::invalid_argument("oracle needs a primitive polynomial");
  OracleVerdict out;
  out.degrees = possible_degrees(f, prime_budget);
  if (f.degree() == 1 || (!out.degrees.low_confidence && out.degrees.only_trivial())) {
    out.kind = VerdictKind::kIrreducible;
    return out;
  }
  out.witness = find_factor_witness(f, out.degrees);
  if (out.witness) {
    if (!verify_witness(f, *out.witness)) throw std::logic_error("oracle produced an invalid witness");
    out.kind = VerdictKind::kReducible;
  }
  return out;
}

OracleVerdict oracle_verdict(const LaguerreInstance& instance, std::uint64_t prime_budget) {
  const IntPoly& F = instance.scaled_f();
  const Integer scale = content(F) * (F.leading() < 0 ? -1 : 1);
  OracleVerdict out = oracle_verdict(primitive_part(F), prime_budget);
  if (out.witness) {
    out.witness->c *= scale;
    out.witness->c.canonicalize();
  }
  return out;
}

nlohmann::ordered_json to_json(const OracleVerdict& verdict) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(verdict.kind);
  j["degree"] = verdict.degrees.degree;
  j["primes_used"] = verdict.degrees.primes_used;
  j["possible_degrees"] = verdict.degrees.possible;
  j["low_confidence"] = verdict.degrees.low_confidence;
  if (verdict.witness) {
    j["witness"] = {{"c", rational_to_string(verdict.witness->c)},
                    {"g", to_string(verdict.witness->g)},
                    {"h", to_string(verdict.witness->h)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::optional<WitnessSearchHit> search_reducible_witness(std::int64_t m, const AlphaParam& alpha,
                                                         const IntPoly& phi, std::int64_t coefficient_bound,
                                                         std::uint64_t prime_budget) {
  if (coefficient_bound < 1) throw std::invalid_argument("coefficient bound must be at least 1");
  if (m < 1) throw std::invalid_argument("m must be at least 1");
  if (phi.degree() < 1 || !phi.is_monic()) throw std::invalid_argument("phi must be monic of degree >= 1");
  const std::int64_t hb = alpha.v() * m + alpha.u();
  const std::vector<std::uint64_t> small_primes =
      hb >= 2 ? sieve_primes(static_cast<std::uint64_t>(hb)).primes() : std::vector<std::uint64_t>{};
  for (std::uint64_t q : small_primes) {
    if (!is_irreducible_mod_p(phi, q)) return std::nullopt;
  }

  const auto coeffs = laguerre_coefficients(m, alpha);
  const Integer vm = pow_int(as_int(alpha.v()), static_cast<std::uint64_t>(m));
  // term[j] = v^m b_j phi^j; term[m] = v^m phi^m.
  std::vector<IntPoly> term;
  IntPoly phi_pow = IntPoly::constant(1);
  for (std::int64_t j = 0; j <= m; ++j) {
    Rational s = (j < m ? coeffs.b[static_cast<std::size_t>(j)] : Rational(1)) * Rational(vm);
    s.canonicalize();
    term.push_back(phi_pow * s.get_num());
    phi_pow *= phi;
  }

  std::vector<std::int64_t> values{0};
  for (std::int64_t c = 1; c <= coefficient_bound; ++c) {
    values.push_back(c);
    values.push_back(-c);
  }
  const int d = phi.degree();
  const std::size_t upper_per_part = static_cast<std::size_t>(d - 1);
  const std::size_t n_upper = static_cast<std::size_t>(m) * upper_per_part;
  const std::size_t n_coords = n_upper + 1 + static_cast<std::size_t>(m);
  std::vector<std::size_t> idx(n_coords, 0);
  const std::size_t am_coord = n_upper;
  idx[am_coord] = 1;  // a_m skips 0

  auto value_at = [&](std::size_t coord) { return values[idx[coord]]; };
  std::uint64_t tried = 0;
  for (;;) {
    // Decode: upper coefficients for a_{m-1}..a_0, highest power first.
    std::vector<std::vector<Integer>> parts(static_cast<std::size_t>(m), std::vector<Integer>(static_cast<std::size_t>(d)));
    std::size_t coord = 0;
    for (std::int64_t i = m - 1; i >= 0; --i) {
      for (int e = d - 1; e >= 1; --e) parts[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)] = as_int(value_at(coord++));
    }
    const Integer a_m = as_int(value_at(coord++));
    for (std::int64_t i = m - 1; i >= 0; --i) parts[static_cast<std::size_t>(i)][0] = as_int(value_at(coord++));

    std::vector<IntPoly> a_parts;
    for (auto& c : parts) a_parts.emplace_back(std::move(c));
    const IntPoly& a0 = a_parts.front();
    bool valid = !a0.is_zero();
    if (valid) {
      const Integer ca0 = content(a0);
      for (std::uint64_t q : small_primes) {
        const Integer Q(static_cast<unsigned long>(q));
        if (divides(Q, a_m) || divides(Q, ca0)) {
          valid = false;
          break;
        }
      }
    }
    if (valid) {
      ++tried;
      IntPoly F = term.back() * a_m;
      for (std::int64_t j = 0; j < m; ++j) F += term[static_cast<std::size_t>(j)] * a_parts[static_cast<std::size_t>(j)];
      const Integer scale = content(F) * (F.leading() < 0 ? -1 : 1);
      const IntPoly pp = primitive_part(F);
      if (pp.degree() >= 2) {
        const DegreeSet ds = possible_degrees(pp, prime_budget);
        if (ds.low_confidence || !ds.only_trivial()) {
          if (auto w = find_factor_witness(pp, ds)) {
            w->c *= scale;
            w->c.canonicalize();
            if (!verify_witness(F, *w)) throw std::logic_error("search produced an invalid witness");
            InstanceParams params{m, alpha.u(), alpha.v(), a_m, std::move(a_parts), phi};
            return WitnessSearchHit{std::move(params), *w, tried};
          }
        }
      }
    }

    // Odometer: the last coordinate moves fastest.
    std::size_t pos = n_coords;
    for (;;) {
      if (pos == 0) return std::nullopt;
      --pos;
      if (++idx[pos] < values.size()) break;
      idx[pos] = pos == am_coord ? 1 : 0;
    }
  }
}

}  // namespace lagcert
