#include "lagcert/tables.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lagcert/arith.hpp"
#include "lagcert/fp_poly.hpp"
#include "lagcert/laguerre.hpp"
#include "lagcert/polygon.hpp"
#include "lagcert/reference_tables.hpp"

namespace lagcert {

namespace {

Integer as_int(std::int64_t x) { return Integer(static_cast<long>(x)); }

std::string pair_list(const std::set<MkPair>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [m, k] : s) {
    os << (first ? "" : ",") << "(" << m << "," << k << ")";
    first = false;
  }
  os << "}";
  return os.str();
}

template <typename Range>
std::string int_list(const Range& r) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto x : r) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << "}";
  return os.str();
}

CheckLine line(std::string anchor, bool ok, std::string detail) {
  return {std::move(anchor), ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(detail)};
}

std::uint32_t checked_table_bound(std::int64_t m_bound) {
  if (m_bound < 2) throw std::invalid_argument("S_t search bound must be at least 2");
  if (m_bound > 500000000) throw std::invalid_argument("S_t search bound too large");
  return static_cast<std::uint32_t>(2 * m_bound);
}

}  // namespace

std::array<StSets, 4> compute_S_sets(std::int64_t m_bound) {
  const std::uint32_t n = checked_table_bound(m_bound);
  const std::vector<std::uint32_t> lpf = largest_factor_table(n);

  // Sparse table for range maxima of lpf.
  std::vector<std::vector<std::uint32_t>> sparse{lpf};
  for (std::size_t w = 1; 2 * w <= lpf.size(); w *= 2) {
    const auto& prev = sparse.back();
    std::vector<std::uint32_t> next(prev.size() - w);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = std::max(prev[i], prev[i + w]);
    sparse.push_back(std::move(next));
  }
  auto range_max = [&](std::size_t lo, std::size_t hi) {
    std::size_t level = 0;
    while ((std::size_t{2} << level) <= hi - lo + 1) ++level;
    return std::max(sparse[level][lo], sparse[level][hi + 1 - (std::size_t{1} << level)]);
  };

  std::array<StSets, 4> out;
  for (int t = 1; t <= 4; ++t) out[static_cast<std::size_t>(t - 1)] = StSets{t, {}, m_bound};
  for (std::int64_t m = 2; m <= m_bound; ++m) {
    std::int64_t k = 2;
    while (k <= m) {
      const auto largest = static_cast<std::int64_t>(
          range_max(static_cast<std::size_t>(m + 1), static_cast<std::size_t>(m + k)));
      if (largest <= k + 4) {
        const std::int64_t t = largest - k;
        if (t >= 1) out[static_cast<std::size_t>(t - 1)].pairs.insert({m, k});
        ++k;
      } else {
        k = std::max(k + 1, largest - 4);
      }
    }
  }
  return out;
}

StSets compute_S_t(int t, std::int64_t m_bound) {
  if (t < 1 || t > 4) throw std::invalid_argument("t must lie in [1, 4]");
  return compute_S_sets(m_bound)[static_cast<std::size_t>(t - 1)];
}

StSets compute_S_t_bruteforce(int t, std::int64_t m_bound) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  const std::vector<std::uint32_t> lpf = largest_factor_table(checked_table_bound(m_bound));
  StSets out{t, {}, m_bound};
  for (std::int64_t m = 2; m <= m_bound; ++m) {
    std::int64_t largest = lpf[static_cast<std::size_t>(m + 1)];
    for (std::int64_t k = 2; k <= m; ++k) {
      largest = std::max<std::int64_t>(largest, lpf[static_cast<std::size_t>(m + k)]);
      if (largest == k + t) out.pairs.insert({m, k});
    }
  }
  return out;
}

std::string equation_label(ExpEquation eq) {
  switch (eq) {
    case ExpEquation::kPowerDifference: return "(i) a^r - b^s = +-1";
    case ExpEquation::kTwoThreeFive: return "(ii) 2^r + 3^s = 5^t";
    case ExpEquation::kTwoFiveThree: return "(iii) 2^r + 5^s = 3^t";
    case ExpEquation::kSixFive: return "(iv) 2^r 3^s - 5^t = +-1";
    case ExpEquation::kFifteenTwo: return "(v) 3^r 5^s - 2^t = +-1";
    case ExpEquation::kTenThree: return "(vi) 2^r 5^s - 3^t = +-1";
  }
  return "unknown";
}

std::set<std::pair<std::int64_t, std::int64_t>> solve_power_difference(std::int64_t a, std::int64_t b,
                                                                       std::int64_t exponent_bound) {
  auto allowed = [](std::int64_t x) { return x == 2 || x == 3 || x == 5; };
  if (!allowed(a) || !allowed(b) || a == b) {
    throw std::invalid_argument("a and b must be distinct members of {2, 3, 5}");
  }
  if (exponent_bound < 1) throw std::invalid_argument("exponent bound must be at least 1");
  std::map<Integer, std::int64_t> b_powers;
  Integer x = 1;
  for (std::int64_t s = 1; s <= exponent_bound; ++s) b_powers[x *= b] = s;
  std::set<std::pair<std::int64_t, std::int64_t>> out;
  Integer y = 1;
  for (std::int64_t r = 1; r <= exponent_bound; ++r) {
    y *= a;
    auto it = b_powers.find(y - 1);
    if (it != b_powers.end()) out.insert({r, it->second});
  }
  return out;
}

namespace {

std::vector<Integer> powers(std::int64_t base, std::int64_t bound) {
  std::vector<Integer> out{1};
  for (std::int64_t e = 1; e <= bound; ++e) out.push_back(out.back() * base);
  return out;
}

std::map<Integer, std::int64_t> power_index(std::int64_t base, std::int64_t bound) {
  std::map<Integer, std::int64_t> out;
  const auto p = powers(base, bound);
  for (std::int64_t e = 1; e <= bound; ++e) out[p[static_cast<std::size_t>(e)]] = e;
  return out;
}

}  // namespace

DioSolutions solve_exp_equation(ExpEquation eq, std::int64_t exponent_bound) {
  if (exponent_bound < 1) throw std::invalid_argument("exponent bound must be at least 1");
  DioSolutions out{eq, {}, exponent_bound};
  const std::int64_t B = exponent_bound;
  if (eq == ExpEquation::kPowerDifference) {
    for (std::int64_t a : {2, 3, 5}) {
      for (std::int64_t b : {2, 3, 5}) {
        if (a == b) continue;
        for (const auto& [r, s] : solve_power_difference(a, b, B)) out.solutions.insert({a, r, b, s});
      }
    }
    return out;
  }
  // Sum equations: x^r + y^s = z^t.
  auto sum_equation = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    const auto xp = powers(x, B), yp = powers(y, B);
    const auto zi = power_index(z, B);
    for (std::int64_t r = 1; r <= B; ++r) {
      for (std::int64_t s = 1; s <= B; ++s) {
        auto it = zi.find(xp[static_cast<std::size_t>(r)] + yp[static_cast<std::size_t>(s)]);
        if (it != zi.end()) out.solutions.insert({r, s, it->second, 0});
      }
    }
  };
  // Near-miss equations: x^r y^s - z^t = +-1.
  auto near_equation = [&](std::int64_t x, std::int64_t y, std::int64_t z) {
    const auto xp = powers(x, B), yp = powers(y, B);
    const auto zi = power_index(z, B);
    for (std::int64_t r = 1; r <= B; ++r) {
      for (std::int64_t s = 1; s <= B; ++s) {
        const Integer lhs = xp[static_cast<std::size_t>(r)] * yp[static_cast<std::size_t>(s)];
        if (auto it = zi.find(lhs - 1); it != zi.end()) out.solutions.insert({r, s, it->second, 1});
        if (auto it = zi.find(lhs + 1); it != zi.end()) out.solutions.insert({r, s, it->second, -1});
      }
    }
  };
  switch (eq) {
    case ExpEquation::kTwoThreeFive: sum_equation(2, 3, 5); break;
    case ExpEquation::kTwoFiveThree: sum_equation(2, 5, 3); break;
    case ExpEquation::kSixFive: near_equation(2, 3, 5); break;
    case ExpEquation::kFifteenTwo: near_equation(3, 5, 2); break;
    case ExpEquation::kTenThree: near_equation(2, 5, 3); break;
    case ExpEquation::kPowerDifference: break;
  }
  return out;
}

std::string describe_solution(ExpEquation eq, const std::array<std::int64_t, 4>& s) {
  std::ostringstream os;
  auto pw = [&](std::int64_t base, std::int64_t e) { os << base << "^" << e; };
  switch (eq) {
    case ExpEquation::kPowerDifference:
      pw(s[0], s[1]);
      os << " - ";
      pw(s[2], s[3]);
      os << " = 1";
      break;
    case ExpEquation::kTwoThreeFive:
    case ExpEquation::kTwoFiveThree: {
      const bool five_sum = eq == ExpEquation::kTwoThreeFive;
      pw(2, s[0]);
      os << " + ";
      pw(five_sum ? 3 : 5, s[1]);
      os << " = ";
      pw(five_sum ? 5 : 3, s[2]);
      break;
    }
    case ExpEquation::kSixFive:
    case ExpEquation::kFifteenTwo:
    case ExpEquation::kTenThree: {
      const std::int64_t x = eq == ExpEquation::kFifteenTwo ? 3 : 2;
      const std::int64_t y = eq == ExpEquation::kSixFive ? 3 : 5;
      const std::int64_t z = eq == ExpEquation::kSixFive ? 5 : (eq == ExpEquation::kFifteenTwo ? 2 : 3);
      pw(x, s[0]);
      os << " * ";
      pw(y, s[1]);
      os << " - ";
      pw(z, s[2]);
      os << " = " << s[3];
      break;
    }
  }
  return os.str();
}

bool TableReport::all_pass() const { return failures() == 0; }

std::size_t TableReport::failures() const {
  return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(),
                                                [](const CheckLine& l) { return l.status == CheckStatus::kFail; }));
}

void TableReport::append(const TableReport& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }

std::string TableReport::to_text() const {
  std::ostringstream os;
  for (const auto& l : lines) {
    const char* tag = l.status == CheckStatus::kPass ? "PASS" : (l.status == CheckStatus::kFail ? "FAIL" : "FLAG");
    os << tag << " " << l.anchor;
    if (!l.detail.empty()) os << ": " << l.detail;
    os << "\n";
  }
  return os.str();
}

std::vector<std::int64_t> integer_alpha_valuations(std::int64_t m, std::int64_t u, std::int64_t p) {
  const auto coeffs = laguerre_coefficients(m, AlphaParam(u, 1));
  const Integer P = as_int(p);
  std::vector<std::int64_t> out;
  for (const Rational& b : coeffs.b) out.push_back(vp_rat(P, b).value());
  return out;
}

PrimeCheck check_table_prime(std::int64_t u, std::int64_t k, std::int64_t m, std::int64_t p) {
  if (k < 1 || k > m) throw std::invalid_argument("table check needs 1 <= k <= m");
  if (!is_prime(static_cast<std::uint64_t>(p))) throw std::invalid_argument("table check needs a prime");
  const auto vals = integer_alpha_valuations(m, u, p);
  PrimeCheck out;
  out.divides = std::all_of(vals.begin(), vals.begin() + (m - k + 1), [](std::int64_t v) { return v >= 1; });
  std::vector<PolygonPoint> pts;
  for (std::int64_t i = 0; i <= m; ++i) pts.push_back({i, vals[static_cast<std::size_t>(m - i)]});
  out.slope = rightmost_slope(lower_hull(pts));
  if (out.slope != rightmost_slope_formula(vals)) throw std::logic_error("hull and formula slopes disagree");
  out.slope_ok = out.slope < make_rational(1, as_int(k));
  return out;
}

TableReport verify_factorization_tables() {
  TableReport report;
  const IntPoly phi = parse_poly("x^2 - x + 17");
  for (const auto& row : reference::kFactorizationRows) {
    InstanceParams params{2, row.alpha, 1, as_int(row.a2), {IntPoly::constant(as_int(row.a0)), IntPoly::constant(as_int(row.a1))}, phi};
    const LaguerreInstance inst = build_instance_relaxed(params);
    const IntPoly f1 = compose(IntPoly{row.r1, row.s1}, phi);
    const IntPoly f2 = compose(IntPoly{row.r2, row.s2}, phi);
    const RatPoly printed = RatPoly(f1 * f2) * make_rational(as_int(row.c_num), as_int(row.c_den));
    const bool equal = printed == inst.laguerre_polynomial();

    const ViolationKind expected = row.group == 1 ? ViolationKind::kContentConstant : ViolationKind::kContentLeading;
    const auto violations = check_hypotheses(params);
    const bool detected = std::any_of(violations.begin(), violations.end(), [&](const Violation& v) {
      return v.kind == expected && v.prime == 2;
    });
    const std::string group = row.group == 1 ? "a0-content-even" : "leading-even";
    const std::string anchor = "factorization/" + group + "/alpha=" + std::to_string(row.alpha);
    std::ostringstream detail;
    detail << "L = " << to_string(inst.laguerre_polynomial()) << (equal ? " matches" : " differs from printed ")
           << (equal ? "" : to_string(printed)) << "; violation " << to_string(expected)
           << (detected ? " detected" : " missing");
    report.lines.push_back(line(anchor, equal && detected, detail.str()));
  }
  return report;
}

TableReport verify_prime_tables() {
  TableReport report;
  for (const auto& row : reference::kPrimeRows) {
    std::ostringstream anchor;
    anchor << "prime-table/u=" << row.u << ",k=" << row.k << ",m=" << row.m << ",p="
           << (row.p == 0 ? std::string("none") : std::to_string(row.p));
    if (row.p != 0) {
      const PrimeCheck c = check_table_prime(row.u, row.k, row.m, row.p);
      std::ostringstream d;
      d << "p | b_j for j <= " << row.m - row.k << ": " << (c.divides ? "yes" : "no") << "; slope "
        << rational_to_string(c.slope) << (c.slope_ok ? " < " : " >= ") << "1/" << row.k;
      report.lines.push_back(line(anchor.str(), c.ok(), d.str()));
      continue;
    }
    std::vector<std::uint64_t> working;
    for (std::uint64_t q : sieve_primes(static_cast<std::uint64_t>(row.m + row.u)).primes()) {
      if (check_table_prime(row.u, row.k, row.m, static_cast<std::int64_t>(q)).ok()) working.push_back(q);
    }
    report.lines.push_back(line(anchor.str(), working.empty(),
                                working.empty() ? "no prime <= m+u qualifies"
                                                : "qualifying primes exist: " + int_list(working)));
  }
  return report;
}

TableReport verify_exception_table(const std::array<StSets, 4>& s_sets) {
  TableReport report;
  for (std::int64_t u = 1; u <= 4; ++u) {
    std::set<MkPair> S;
    for (std::int64_t t = 1; t <= u; ++t) {
      const auto& p = s_sets[static_cast<std::size_t>(t - 1)].pairs;
      S.insert(p.begin(), p.end());
    }
    std::set<MkPair> published;
    for (const auto& row : reference::kExceptionalPairs) {
      if (row.u != u) continue;
      published.insert({row.m, row.k});
      const bool in = S.count({row.m - row.k + u, row.k}) != 0;
      std::ostringstream a;
      a << "exception-table/u=" << u << ",(m,k)=(" << row.m << "," << row.k << ")";
      report.lines.push_back(line(a.str(), in,
                                  "(m-k+u,k) = (" + std::to_string(row.m - row.k + u) + "," + std::to_string(row.k) +
                                      ")" + (in ? " lies in S" : " is not in S")));
    }
    std::set<MkPair> derived;
    for (const auto& [mm, k] : S) {
      const std::int64_t m = mm + k - u;
      if (m >= 2 * k) derived.insert({m, k});
    }
    report.lines.push_back(line("exception-table/u=" + std::to_string(u) + " completeness", derived == published,
                                "derived " + pair_list(derived) + ", published " + pair_list(published)));
  }
  return report;
}

K1Report verify_k1_subcases(std::int64_t u, std::int64_t m_bound) {
  if (u < 0 || u > 4) throw std::invalid_argument("u must lie in [0, 4]");
  if (m_bound < 2) throw std::invalid_argument("m bound must be at least 2");
  K1Report out{u, m_bound, {}, {}};
  const std::int64_t start = u == 2 ? 3 : 2;
  for (std::int64_t m = start; m <= m_bound; ++m) {
    const Integer n = as_int(m) * as_int(m + u);
    if (largest_prime_factor(n) < u + 2) out.exceptional.push_back(m);
  }
  std::vector<std::int64_t> published;
  for (std::int64_t m : reference::k1_exceptions(u)) {
    if (m <= m_bound) published.push_back(m);
  }
  const bool same = out.exceptional == published;
  std::string detail = "computed " + int_list(out.exceptional) + ", published " + int_list(published);
  if (!same) {
    std::vector<std::int64_t> extra, missing;
    std::set_difference(out.exceptional.begin(), out.exceptional.end(), published.begin(), published.end(),
                        std::back_inserter(extra));
    std::set_difference(published.begin(), published.end(), out.exceptional.begin(), out.exceptional.end(),
                        std::back_inserter(missing));
    detail += "; unpublished " + int_list(extra) + ", spurious " + int_list(missing);
  }
  out.report.lines.push_back(line("k1-subcase/u=" + std::to_string(u) + " exceptional set", same, detail));
  for (const auto& row : reference::kSubstituteRows) {
    if (row.u != u || row.m > m_bound) continue;
    const PrimeCheck c = check_table_prime(u, 1, row.m, row.p);
    std::ostringstream a, d;
    a << "k1-subcase/u=" << u << ",m=" << row.m << ",p=" << row.p;
    d << "p | b_j for j <= " << row.m - 1 << ": " << (c.divides ? "yes" : "no") << "; slope "
      << rational_to_string(c.slope) << (c.slope_ok ? " < 1" : " >= 1");
    out.report.lines.push_back(line(a.str(), c.ok(), d.str()));
  }
  return out;
}

TableReport verify_root_counterexample() {
  TableReport report;
  const IntPoly phi = parse_poly("x^2 - x + 5");
  const IntPoly a = parse_poly("x - 3");
  const bool phi_ok = is_irreducible_mod_p(phi, 2) && is_irreducible_mod_p(phi, 3);
  report.lines.push_back(line("root-counterexample/phi", phi_ok, "x^2 - x + 5 irreducible modulo 2 and 3"));
  for (std::int64_t alpha = 0; alpha <= 4; ++alpha) {
    const IntPoly twice = a * phi * phi + a * phi * as_int(2 * (2 + alpha)) + a * as_int((2 + alpha) * (1 + alpha));
    const Rational at3 = Rational(twice.evaluate(Integer(3))) / 2;
    const Rational at2 = Rational(twice.evaluate(Integer(2))) / 2;
    report.lines.push_back(line("root-counterexample/alpha=" + std::to_string(alpha), at3 == 0 && at2 != 0,
                                "value at 3 is " + rational_to_string(at3) + ", at 2 is " + rational_to_string(at2)));
  }
  return report;
}

TableReport verify_s_sets(const std::array<StSets, 4>& s_sets) {
  TableReport report;
  for (int t = 1; t <= 4; ++t) {
    const auto ref = reference::s_set(t);
    const std::set<MkPair> published(ref.begin(), ref.end());
    const auto& got = s_sets[static_cast<std::size_t>(t - 1)];
    report.lines.push_back(line("st-sets/S" + std::to_string(t), got.pairs == published,
                                "bound " + std::to_string(got.search_bound) + ", computed " + pair_list(got.pairs) +
                                    ", published " + pair_list(published)));
  }
  return report;
}

TableReport verify_exp_equations(std::int64_t exponent_bound) {
  TableReport report;
  for (int e = 1; e <= 6; ++e) {
    const auto eq = static_cast<ExpEquation>(e);
    std::set<std::array<std::int64_t, 4>> published;
    for (const auto& row : reference::kExpRows) {
      if (row.equation != e) continue;
      const auto& v = row.values;
      const bool positive = e == 1 ? (v[1] > 0 && v[3] > 0) : (v[0] > 0 && v[1] > 0 && v[2] > 0);
      if (positive) {
        published.insert(v);
      } else {
        report.lines.push_back({"exp-equation/" + equation_label(eq), CheckStatus::kFlag,
                                "published entry " + describe_solution(eq, v) +
                                    " has a zero exponent and lies outside the search space"});
      }
    }
    const DioSolutions got = solve_exp_equation(eq, exponent_bound);
    std::string listing;
    for (const auto& s : got.solutions) listing += (listing.empty() ? "" : ", ") + describe_solution(eq, s);
    report.lines.push_back(line("exp-equation/" + equation_label(eq), got.solutions == published,
                                "bound " + std::to_string(exponent_bound) + ", found " + listing));
  }
  return report;
}

TableReport verify_reference_tables(const TableOptions& options) {
  auto wanted = [&](const std::string& name) { return options.only.empty() || options.only.count(name) != 0; };
  TableReport report;
  const bool need_sets = wanted("s1") || wanted("s2") || wanted("s3") || wanted("s4") || wanted("exceptions");
  std::array<StSets, 4> sets;
  if (need_sets) sets = compute_S_sets(options.st_bound);
  if (wanted("factorizations")) report.append(verify_factorization_tables());
  for (int t = 1; t <= 4; ++t) {
    if (!wanted("s" + std::to_string(t))) continue;
    const TableReport s = verify_s_sets(sets);
    report.lines.push_back(s.lines[static_cast<std::size_t>(t - 1)]);
  }
  if (wanted("exp")) report.append(verify_exp_equations(options.exp_bound));
  if (wanted("exceptions")) report.append(verify_exception_table(sets));
  if (wanted("primes")) report.append(verify_prime_tables());
  if (wanted("k1")) {
    for (std::int64_t u = 0; u <= 4; ++u) report.append(verify_k1_subcases(u, options.k1_bound).report);
  }
  if (wanted("root")) report.append(verify_root_counterexample());
  return report;
}

}  // namespace lagcert
