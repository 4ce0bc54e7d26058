#include "lagcert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace lagcert {

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

Integer IntPoly::evaluate(const Integer& at) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Rational IntPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + Rational(*it);
  }
  acc.canonicalize();
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (Integer& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& g) {
  if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size());
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] += g.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& g) {
  if (g.coeffs_.size() > coeffs_.size()) coeffs_.resize(g.coeffs_.size());
  for (std::size_t i = 0; i < g.coeffs_.size(); ++i) coeffs_[i] -= g.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero() || g.is_zero()) return {};
  std::vector<Integer> r(f.coeffs_.size() + g.coeffs_.size() - 1);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), f.coeffs_[i].get_mpz_t(), g.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& g) { return *this = *this * g; }

IntPoly& IntPoly::operator*=(const Integer& c) {
  for (Integer& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPoly add(const IntPoly& f, const IntPoly& g) { return f + g; }
IntPoly sub(const IntPoly& f, const IntPoly& g) { return f - g; }
IntPoly mul(const IntPoly& f, const IntPoly& g) { return f * g; }
IntPoly scale(const IntPoly& f, const Integer& c) { return f * c; }

IntPoly pow(const IntPoly& f, unsigned e) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = f;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

DivRem divrem_monic(const IntPoly& f, const IntPoly& monic_divisor) {
  if (!monic_divisor.is_monic()) throw std::invalid_argument("divisor must be monic");
  const int dg = monic_divisor.degree();
  if (f.degree() < dg) return {IntPoly{}, f};
  std::vector<Integer> r = f.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(f.degree() - dg + 1));
  const auto& g = monic_divisor.coeffs();
  for (int i = f.degree(); i >= dg; --i) {
    const Integer t = r[i];
    if (t == 0) continue;
    q[i - dg] = t;
    for (int j = 0; j <= dg; ++j) r[i - dg + j] -= t * g[j];
  }
  r.resize(static_cast<std::size_t>(dg));
  return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

std::optional<IntPoly> exact_divide(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  if (f.is_zero()) return IntPoly{};
  if (f.degree() < g.degree()) return std::nullopt;
  const int dg = g.degree();
  std::vector<Integer> r = f.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(f.degree() - dg + 1));
  const auto& gc = g.coeffs();
  for (int i = f.degree(); i >= dg; --i) {
    if (r[i] == 0) continue;
    if (!mpz_divisible_p(r[i].get_mpz_t(), gc[dg].get_mpz_t())) return std::nullopt;
    Integer t;
    mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), gc[dg].get_mpz_t());
    q[i - dg] = t;
    for (int j = 0; j <= dg; ++j) r[i - dg + j] -= t * gc[j];
  }
  for (int i = 0; i < dg; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  return IntPoly(std::move(q));
}

IntPoly compose(const IntPoly& outer, const IntPoly& inner) {
  IntPoly acc;
  const auto& c = outer.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * inner + IntPoly::constant(*it);
  }
  return acc;
}

Integer content(const IntPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("content of the zero polynomial");
  Integer g = 0;
  for (const Integer& c : f.coeffs()) {
    g = gcd_int(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly primitive_part(const IntPoly& f) {
  if (f.is_zero()) return f;
  Integer c = content(f);
  if (f.leading() < 0) c = -c;
  std::vector<Integer> r(f.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) mpz_divexact(r[i].get_mpz_t(), f.coeffs()[i].get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(r));
}

namespace {

// Remainder of lc(b)^k * a modulo b, up to a constant factor, made primitive.
IntPoly primitive_pseudo_remainder(IntPoly a, const IntPoly& b) {
  const Integer& lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
    IntPoly t = IntPoly::monomial(a.leading(), shift) * b;
    a = a * lb - t;
    if (!a.is_zero()) a = primitive_part(a);
  }
  return a;
}

}  // namespace

IntPoly gcd(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero()) return primitive_part(g);
  if (g.is_zero()) return primitive_part(f);
  IntPoly a = primitive_part(f);
  IntPoly b = primitive_part(g);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = primitive_pseudo_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return primitive_part(a);
}

Valuation gauss_valuation(const Integer& p, const IntPoly& f) {
  if (f.is_zero()) return vp_int(p, 0);
  Valuation best = Valuation::infinity();
  for (const Integer& c : f.coeffs()) {
    if (c != 0) best = std::min(best, vp_int(p, c));
  }
  return best;
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (Rational& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly::RatPoly(const IntPoly& f) {
  coeffs_.reserve(f.coeffs().size());
  for (const Integer& c : f.coeffs()) coeffs_.emplace_back(c);
}

Rational RatPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

RatPoly& RatPoly::operator*=(const Rational& c) {
  for (Rational& x : coeffs_) {
    x *= c;
    x.canonicalize();
  }
  trim();
  return *this;
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

// ---------------------------------------------------------------- phi-expansion

IntPoly PhiExpansion::reassemble() const {
  IntPoly acc;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) acc = acc * phi + *it;
  return acc;
}

PhiExpansion phi_expand(const IntPoly& f, const IntPoly& phi) {
  if (phi.degree() < 1) throw std::invalid_argument("phi must have degree at least 1");
  if (!phi.is_monic()) throw std::invalid_argument("phi must be monic");
  PhiExpansion e{phi, {}};
  IntPoly cur = f;
  while (!cur.is_zero()) {
    DivRem dr = divrem_monic(cur, phi);
    e.parts.push_back(std::move(dr.remainder));
    cur = std::move(dr.quotient);
  }
  return e;
}

// ---------------------------------------------------------------- text format

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(s) + "' at offset " +
                                std::to_string(pos) + ": " + what);
  }
  bool read_digits(std::string& out) {
    skip_ws();
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    out.assign(s.substr(start, pos - start));
    return pos > start;
  }
};

}  // namespace

IntPoly parse_poly(std::string_view text) {
  Parser ps{text};
  std::map<std::size_t, Integer> terms;
  if (ps.at_end()) ps.fail("empty input");
  bool first = true;
  while (!ps.at_end()) {
    int sign = 1;
    ps.skip_ws();
    if (ps.s[ps.pos] == '+' || ps.s[ps.pos] == '-') {
      sign = ps.s[ps.pos] == '-' ? -1 : 1;
      ++ps.pos;
    } else if (!first) {
      ps.fail("expected '+' or '-'");
    }
    first = false;
    std::string digits;
    Integer coeff = 1;
    const bool has_coeff = ps.read_digits(digits);
    if (has_coeff) coeff = Integer(digits);
    ps.skip_ws();
    std::size_t degree = 0;
    bool has_x = false;
    if (ps.pos < ps.s.size() && ps.s[ps.pos] == '*') {
      if (!has_coeff) ps.fail("'*' without coefficient");
      ++ps.pos;
      ps.skip_ws();
      if (ps.pos >= ps.s.size() || ps.s[ps.pos] != 'x') ps.fail("expected 'x' after '*'");
    }
    if (ps.pos < ps.s.size() && ps.s[ps.pos] == 'x') {
      has_x = true;
      ++ps.pos;
      degree = 1;
      ps.skip_ws();
      if (ps.pos < ps.s.size() && ps.s[ps.pos] == '^') {
        ++ps.pos;
        std::string exp;
        if (!ps.read_digits(exp)) ps.fail("expected exponent after '^'");
        degree = static_cast<std::size_t>(std::stoul(exp));
      }
    }
    if (!has_coeff && !has_x) ps.fail("expected a term");
    terms[degree] += sign * coeff;
  }
  std::vector<Integer> coeffs(terms.empty() ? 0 : terms.rbegin()->first + 1);
  for (auto& [deg, c] : terms) coeffs[deg] = c;
  return IntPoly(std::move(coeffs));
}

namespace {

template <class Coeff, class AbsString>
std::string render(const std::vector<Coeff>& c, AbsString abs_string) {
  if (c.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const bool negative = c[k] < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Coeff magnitude = negative ? Coeff(-c[k]) : c[k];
    if (k == 0 || magnitude != 1) out += abs_string(magnitude, k > 0);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace

std::string to_string(const IntPoly& f) {
  return render(f.coeffs(), [](const Integer& a, bool) { return a.get_str(); });
}

std::string to_string(const RatPoly& f) {
  return render(f.coeffs(), [](const Rational& a, bool has_x) {
    if (a.get_den() == 1) return a.get_num().get_str();
    const std::string q = a.get_str();
    return has_x ? "(" + q + ")" : q;
  });
}

std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << to_string(f); }
std::ostream& operator<<(std::ostream& os, const RatPoly& f) { return os << to_string(f); }

}  // namespace lagcert
