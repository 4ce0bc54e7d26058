#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>

// Finite data transcribed verbatim from the source tables. Every row keeps
// its published values, including rows that later fail verification.
namespace lagcert::reference {

/// (u, k, m, p): a prime p with p | b_j for j <= m-k and right-most slope < 1/k.
/// p = 0 marks a row published without a prime ("--").
struct PrimeRow {
  std::int64_t u;
  std::int64_t k;
  std::int64_t m;
  std::int64_t p;
};

inline constexpr std::array<PrimeRow, 17> kPrimeRows{{
    // first block
    {1, 2, 8, 7},
    {2, 2, 7, 7},
    {2, 3, 8, 7},
    {3, 2, 6, 5},
    {3, 3, 7, 7},
    {3, 2, 7, 7},
    // second block
    {3, 2, 13, 13},
    {3, 2, 22, 7},
    {3, 2, 78, 7},
    {4, 2, 5, 11},
    {4, 2, 6, 0},
    {4, 2, 12, 11},
    // third block
    {4, 2, 21, 7},
    {4, 2, 77, 7},
    {4, 3, 6, 0},
    {4, 3, 12, 11},
    {4, 3, 46, 23},
}};

/// Exceptional (m, k) pairs per u with 2k <= m and (m-k+u, k) in S_1 u ... u S_u.
struct ExceptionalPair {
  std::int64_t u;
  std::int64_t m;
  std::int64_t k;
};

inline constexpr std::array<ExceptionalPair, 17> kExceptionalPairs{{
    {1, 8, 2},
    {2, 7, 2}, {2, 8, 3},
    {3, 6, 2}, {3, 7, 3}, {3, 7, 2}, {3, 13, 2}, {3, 22, 2}, {3, 78, 2},
    {4, 5, 2}, {4, 6, 2}, {4, 12, 2}, {4, 21, 2}, {4, 77, 2}, {4, 6, 3}, {4, 12, 3}, {4, 46, 3},
}};

/// k = 1: values of m with no prime >= u+2 dividing m(m+u), per u.
inline constexpr std::array<std::int64_t, 3> kK1ExceptionsU2{4, 6, 16};
inline constexpr std::array<std::int64_t, 4> kK1ExceptionsU3{3, 6, 9, 24};
inline constexpr std::array<std::int64_t, 12> kK1ExceptionsU4{2, 4, 5, 8, 12, 16, 20, 32, 36, 60, 96, 320};

inline std::span<const std::int64_t> k1_exceptions(std::int64_t u) {
  switch (u) {
    case 2: return kK1ExceptionsU2;
    case 3: return kK1ExceptionsU3;
    case 4: return kK1ExceptionsU4;
    default: return {};
  }
}

/// k = 1 substitute primes for the exceptional m. m = 4 with u = 4 has none.
struct SubstituteRow {
  std::int64_t u;
  std::int64_t m;
  std::int64_t p;
};

inline constexpr std::array<SubstituteRow, 18> kSubstituteRows{{
    {2, 4, 2}, {2, 16, 2}, {2, 6, 3},
    {3, 3, 3}, {3, 6, 3}, {3, 9, 3}, {3, 24, 3},
    {4, 2, 3}, {4, 8, 3}, {4, 12, 3}, {4, 32, 3}, {4, 36, 3}, {4, 96, 3},
    {4, 16, 2},
    {4, 5, 5}, {4, 20, 5}, {4, 60, 5}, {4, 320, 5},
}};

/// Pairs of the four S_t sets.
inline constexpr std::array<std::pair<std::int64_t, std::int64_t>, 2> kS1{{{2, 2}, {7, 2}}};
inline constexpr std::array<std::pair<std::int64_t, std::int64_t>, 3> kS2{{{3, 3}, {7, 3}, {5, 5}}};
inline constexpr std::array<std::pair<std::int64_t, std::int64_t>, 9> kS3{
    {{3, 2}, {4, 2}, {8, 2}, {14, 2}, {23, 2}, {79, 2}, {4, 4}, {5, 4}, {6, 4}}};
inline constexpr std::array<std::pair<std::int64_t, std::int64_t>, 5> kS4{
    {{4, 3}, {5, 3}, {6, 3}, {13, 3}, {47, 3}}};

inline std::span<const std::pair<std::int64_t, std::int64_t>> s_set(int t) {
  switch (t) {
    case 1: return kS1;
    case 2: return kS2;
    case 3: return kS3;
    case 4: return kS4;
    default: return {};
  }
}

/// Published solutions of the six exponential equations. Layouts:
/// (i) (a, r, b, s) with a^r - b^s = 1; (ii), (iii) (r, s, t);
/// (iv)-(vi) (r, s, t, sign) with sign the value of the left-hand side.
/// Entries with a zero exponent are kept as published.
struct ExpRow {
  int equation;  // 1..6
  std::array<std::int64_t, 4> values;
};

inline constexpr std::array<ExpRow, 15> kExpRows{{
    {1, {3, 1, 2, 1}}, {1, {2, 2, 3, 1}}, {1, {5, 1, 2, 2}}, {1, {3, 2, 2, 3}},
    {2, {1, 1, 1, 0}}, {2, {4, 2, 2, 0}},
    {3, {1, 0, 1, 0}}, {3, {1, 2, 3, 0}}, {3, {2, 1, 2, 0}}, {3, {3, 0, 2, 0}},
    {4, {1, 1, 1, 1}}, {4, {3, 1, 2, -1}},
    {5, {1, 1, 4, -1}},
    {6, {1, 1, 2, 1}}, {6, {4, 1, 4, -1}},
}};

/// Factorizations printed for m = 2 and phi = x^2 - x + 17:
/// L = (c_num / c_den) (s1 phi + r1)(s2 phi + r2).
struct FactorizationRow {
  int group;  // 1: content of a_0 even, 2: a_2 even
  std::int64_t alpha;
  std::int64_t a2;
  std::int64_t a1;
  std::int64_t a0;
  std::int64_t c_num;
  std::int64_t c_den;
  std::int64_t s1, r1, s2, r2;
};

inline constexpr std::array<FactorizationRow, 8> kFactorizationRows{{
    {1, 1, 3, 1, -4, 3, 2, 1, 4, 1, -2},
    {1, 2, 1, 1, -4, 1, 2, 1, -4, 1, 12},
    {1, 3, 1, 1, -10, 1, 2, 1, -10, 1, 20},
    {1, 4, 3, 1, -6, 3, 2, 1, 10, 1, -6},
    {2, 1, 6, 2, 1, 3, 1, 1, 1, 1, 1},
    {2, 2, 4, 1, -1, 2, 1, 1, 3, 1, -1},
    {2, 3, 2, 1, -5, 1, 1, 1, 10, 1, -5},
    {2, 4, 18, 1, -1, 1, 1, 1, -1, 9, 15},
}};

}  // namespace lagcert::reference
