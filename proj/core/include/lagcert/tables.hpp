#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lagcert/numeric.hpp"

namespace lagcert {

using MkPair = std::pair<std::int64_t, std::int64_t>;

/// Pairs (m, k), m >= k >= 2, m <= search_bound, whose product
/// P(m, k) = (m+1)...(m+k) has largest prime factor exactly k + t.
struct StSets {
  int t = 0;
  std::set<MkPair> pairs;
  std::int64_t search_bound = 0;
};

/// One scan for t = 1..4: a largest-prime-factor table over [2, 2 m_bound]
/// and a sparse range-maximum; k jumps ahead whenever the running maximum
/// already exceeds k + 4.
std::array<StSets, 4> compute_S_sets(std::int64_t m_bound);
StSets compute_S_t(int t, std::int64_t m_bound);
/// Quadratic reference scan, used to cross-check the fast one.
StSets compute_S_t_bruteforce(int t, std::int64_t m_bound);

enum class ExpEquation {
  kPowerDifference = 1,  // a^r - b^s = +-1, a != b in {2, 3, 5}
  kTwoThreeFive,         // 2^r + 3^s = 5^t
  kTwoFiveThree,         // 2^r + 5^s = 3^t
  kSixFive,              // 2^r 3^s - 5^t = +-1
  kFifteenTwo,           // 3^r 5^s - 2^t = +-1
  kTenThree,             // 2^r 5^s - 3^t = +-1
};

std::string equation_label(ExpEquation eq);

struct DioSolutions {
  ExpEquation equation = ExpEquation::kPowerDifference;
  /// Same layout as the published rows: (a, r, b, s), (r, s, t) padded with a
  /// trailing 0, or (r, s, t, sign).
  std::set<std::array<std::int64_t, 4>> solutions;
  std::int64_t exponent_bound = 0;
};

/// Exhaustive search with all exponents in [1, exponent_bound].
DioSolutions solve_exp_equation(ExpEquation eq, std::int64_t exponent_bound);
/// a^r - b^s = 1 over exponents in [1, bound]; a, b distinct members of {2, 3, 5}.
std::set<std::pair<std::int64_t, std::int64_t>> solve_power_difference(std::int64_t a, std::int64_t b,
                                                                       std::int64_t exponent_bound);
std::string describe_solution(ExpEquation eq, const std::array<std::int64_t, 4>& s);

enum class CheckStatus { kPass, kFail, kFlag };

struct CheckLine {
  std::string anchor;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct TableReport {
  std::vector<CheckLine> lines;

  bool all_pass() const;
  std::size_t failures() const;
  void append(const TableReport& other);
  std::string to_text() const;
};

/// Valuations v_p(b_0..b_m) for integer alpha = u, b_m = 1.
std::vector<std::int64_t> integer_alpha_valuations(std::int64_t m, std::int64_t u, std::int64_t p);

/// p | b_j for 0 <= j <= m-k and right-most slope < 1/k (integer alpha = u).
struct PrimeCheck {
  bool divides = false;
  Rational slope;
  bool slope_ok = false;
  bool ok() const { return divides && slope_ok; }
};
PrimeCheck check_table_prime(std::int64_t u, std::int64_t k, std::int64_t m, std::int64_t p);

TableReport verify_factorization_tables();
TableReport verify_prime_tables();
/// Every exceptional pair lies in S_1 u ... u S_u and the list is complete.
TableReport verify_exception_table(const std::array<StSets, 4>& s_sets);

struct K1Report {
  std::int64_t u = 0;
  std::int64_t m_bound = 0;
  std::vector<std::int64_t> exceptional;  // computed
  TableReport report;
};
K1Report verify_k1_subcases(std::int64_t u, std::int64_t m_bound);

TableReport verify_root_counterexample();

TableReport verify_s_sets(const std::array<StSets, 4>& s_sets);
TableReport verify_exp_equations(std::int64_t exponent_bound);

struct TableOptions {
  std::int64_t st_bound = 100000;
  std::int64_t exp_bound = 60;
  std::int64_t k1_bound = 1000;
  /// Empty runs everything; otherwise any of s1 s2 s3 s4 exp factorizations
  /// primes exceptions k1 root.
  std::set<std::string> only;
};

/// Runs every check selected by the options.
TableReport verify_reference_tables(const TableOptions& options = {});

}  // namespace lagcert
