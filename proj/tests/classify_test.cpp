#include "ntv/classify.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace ntv {
namespace {

// Independent oracles: plain trial division, no sieve tables, no Miller-Rabin.
std::vector<std::pair<std::uint64_t, unsigned>> brute_factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e > 0) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool brute_r_full(std::uint64_t n, unsigned r) {
  for (auto [p, e] : brute_factor(n))
    if (e < r) return false;
  return true;
}

bool brute_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool has_rth_power_divisor(std::uint64_t n, unsigned r) {
  for (std::uint64_t d = 2;; ++d) {
    std::uint64_t power = 1;
    for (unsigned i = 0; i < r; ++i) power *= d;
    if (power > n) return false;
    if (n % power == 0) return true;
  }
}

BigInt product(const Factorization& f) {
  BigInt out = 1;
  for (const auto& pp : f.factors) out *= pow(pp.prime, pp.exponent);
  return out;
}

void expect_valid(const Factorization& f) {
  EXPECT_EQ(product(f), f.n);
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    EXPECT_TRUE(is_prime(f.factors[i].prime)) << f.factors[i].prime;
    EXPECT_GE(f.factors[i].exponent, 1U);
    if (i > 0) EXPECT_LT(f.factors[i - 1].prime, f.factors[i].prime);
  }
}

TEST(IsPrimeTest, Examples) {
  EXPECT_TRUE(is_prime(std::uint64_t{2}));
  EXPECT_FALSE(is_prime(std::uint64_t{1}));
  EXPECT_TRUE(is_prime(std::uint64_t{5}));
  EXPECT_FALSE(is_prime(std::uint64_t{0}));
}

TEST(IsPrimeTest, AgreesWithTrialDivisionBelow100k) {
  for (std::uint64_t n = 0; n < 100'000; ++n) ASSERT_EQ(is_prime(n), brute_prime(n)) << n;
}

TEST(IsPrimeTest, StrongPseudoprimesAndLargePrimes) {
  // Strong pseudoprimes to small base sets.
  for (std::uint64_t n : {2047ULL, 1373653ULL, 25326001ULL, 3215031751ULL, 2152302898747ULL, 3474749660383ULL,
                          341550071728321ULL, 3825123056546413051ULL})
    EXPECT_FALSE(is_prime(n)) << n;
  EXPECT_FALSE(is_prime(std::uint64_t{561}));
  EXPECT_TRUE(is_prime((std::uint64_t{1} << 61) - 1));
  EXPECT_TRUE(is_prime(std::uint64_t{18446744073709551557ULL}));  // largest 64-bit prime
  EXPECT_FALSE(is_prime(std::uint64_t{18446744073709551555ULL}));
  EXPECT_TRUE(is_prime(pow2(89) - 1));
  EXPECT_TRUE(is_prime(pow2(127) - 1));
  EXPECT_FALSE(is_prime((pow2(61) - 1) * (pow2(31) - 1)));
  EXPECT_FALSE(is_prime(pow2(67) - 1));
}

TEST(FactorizeTest, Examples) {
  const Factorization f12 = factorize(std::uint64_t{12});
  ASSERT_EQ(f12.factors.size(), 2U);
  EXPECT_EQ(f12.factors[0], (PrimePower{2, 2}));
  EXPECT_EQ(f12.factors[1], (PrimePower{3, 1}));
  EXPECT_TRUE(factorize(std::uint64_t{1}).factors.empty());
  const Factorization f72 = factorize(std::uint64_t{72});
  ASSERT_EQ(f72.factors.size(), 2U);
  EXPECT_EQ(f72.factors[0], (PrimePower{2, 3}));
  EXPECT_EQ(f72.factors[1], (PrimePower{3, 2}));
  EXPECT_EQ(f72.to_string(), "2^3 * 3^2");
  EXPECT_THROW(factorize(BigInt(0)), std::invalid_argument);
}

TEST(FactorizeTest, MatchesTrialDivision) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::uint64_t> dist(1, 10'000'000'000ULL);
  for (int it = 0; it < 300; ++it) {
    const std::uint64_t n = dist(rng);
    const Factorization f = factorize(n);
    expect_valid(f);
    const auto oracle = brute_factor(n);
    ASSERT_EQ(f.factors.size(), oracle.size()) << n;
    for (std::size_t i = 0; i < oracle.size(); ++i) {
      EXPECT_EQ(f.factors[i].prime, oracle[i].first);
      EXPECT_EQ(f.factors[i].exponent, oracle[i].second);
    }
  }
}

TEST(FactorizeTest, SplitsLargeSemiprimesWithRho) {
  const BigInt a = 999'999'937, b = 1'000'000'007;
  const Factorization f = factorize(a * b);
  expect_valid(f);
  ASSERT_EQ(f.factors.size(), 2U);
  EXPECT_EQ(f.factors[0].prime, a);

  const BigInt m61 = pow2(61) - 1, m31 = pow2(31) - 1;
  const BigInt n = m61 * m61 * m31 * 3 * b;  // beyond 64 bits
  const Factorization g = factorize(n);
  expect_valid(g);
  EXPECT_EQ(g.exponent_of(m61), 2U);
  EXPECT_EQ(g.exponent_of(m31), 1U);
  EXPECT_EQ(g.exponent_of(3), 1U);

  const Factorization h = factorize(pow2(67) - 1);
  expect_valid(h);
  EXPECT_EQ(h.factors.size(), 2U);  // 193707721 * 761838257287
  EXPECT_EQ(h.factors[0].prime, 193707721);
}

TEST(FactorizeTest, SameSeedSameResult) {
  const BigInt n = (pow2(61) - 1) * 1'000'000'007 * 999'999'937;
  EXPECT_EQ(factorize(n, 7).factors, factorize(n, 7).factors);
  EXPECT_EQ(factorize(n, 7).factors, factorize(n, 8).factors);
}

TEST(RFreeRFullTest, Examples) {
  EXPECT_FALSE(is_r_free(BigInt(12), 2));
  EXPECT_TRUE(is_r_free(BigInt(1), 2));
  EXPECT_TRUE(is_r_free(BigInt(12), 3));
  EXPECT_FALSE(is_r_full(BigInt(12), 2));
  EXPECT_TRUE(is_r_full(BigInt(1), 2));
  EXPECT_TRUE(is_r_full(BigInt(72), 2));
  EXPECT_THROW(is_r_full(BigInt(12), 1), std::invalid_argument);
}

TEST(SieveTest, Examples) {
  // Frozen from the brute-force oracle below.
  const std::vector<std::uint64_t> expected30{1, 4, 8, 9, 16, 25, 27};
  std::vector<std::uint64_t> oracle;
  for (std::uint64_t n = 1; n <= 30; ++n)
    if (brute_r_full(n, 2)) oracle.push_back(n);
  ASSERT_EQ(oracle, expected30);
  EXPECT_EQ(r_full_up_to(30, 2), expected30);
  EXPECT_EQ(r_full_up_to(7, 3), std::vector<std::uint64_t>{1});
  EXPECT_EQ(r_full_up_to(1, 2), std::vector<std::uint64_t>{1});
  EXPECT_EQ(squarefull_via_a2b3(30), expected30);
  EXPECT_EQ(squarefull_via_a2b3(1), std::vector<std::uint64_t>{1});
  EXPECT_EQ(squarefull_via_a2b3(100), r_full_up_to(100, 2));
}

TEST(SieveTest, MemoryGuard) {
  ResourceCaps caps;
  caps.sieve = 1000;
  EXPECT_THROW(r_full_up_to(1001, 2, caps), CapExceeded);
  EXPECT_THROW(squarefull_via_a2b3(1001, caps), CapExceeded);
  EXPECT_NO_THROW(r_full_up_to(1000, 2, caps));
}

TEST(SieveTest, AgreesWithFactorizationBelow20k) {
  for (unsigned r : {2U, 3U, 4U}) {
    const auto sieved = r_full_up_to(20'000, r);
    std::vector<std::uint64_t> direct;
    for (std::uint64_t n = 1; n <= 20'000; ++n)
      if (is_r_full(factorize(n), r)) direct.push_back(n);
    EXPECT_EQ(sieved, direct) << "r = " << r;
  }
}

TEST(SieveTest, RFreeMatchesDivisorCheck) {
  for (unsigned r : {2U, 3U}) {
    const auto free = r_free_up_to(100'000, r);
    std::vector<bool> in_free(100'001, false);
    for (auto n : free) in_free[n] = true;
    for (std::uint64_t n = 1; n <= 100'000; ++n) ASSERT_NE(in_free[n], has_rth_power_divisor(n, r)) << n;
  }
  for (std::uint64_t n = 1; n <= 3'000; ++n)
    ASSERT_NE(is_r_free(BigInt(n), 2), has_rth_power_divisor(n, 2)) << n;
}

TEST(SieveTest, A2B3OracleAgreesAcrossLimits) {
  for (std::uint64_t n : {1ULL, 2ULL, 3ULL, 4ULL, 7ULL, 8ULL, 63ULL, 64ULL, 999ULL, 12345ULL, 200000ULL})
    EXPECT_EQ(squarefull_via_a2b3(n), r_full_up_to(n, 2)) << n;
}

TEST(RFullProperties, ClosedUnderMultiplication) {
  const auto full2 = r_full_up_to(100'000, 2);
  const auto full3 = r_full_up_to(100'000, 3);
  std::mt19937_64 rng(5);
  for (int it = 0; it < 500; ++it) {
    for (auto [list, r] : {std::pair{&full2, 2U}, std::pair{&full3, 3U}}) {
      std::uniform_int_distribution<std::size_t> pick(0, list->size() - 1);
      const BigInt a = (*list)[pick(rng)], b = (*list)[pick(rng)];
      EXPECT_TRUE(is_r_full(a * b, r)) << a << " * " << b;
    }
  }
}

TEST(RFullProperties, OnlyOneIsBothFreeAndFull) {
  for (std::uint64_t n = 1; n <= 10'000; ++n) {
    const Factorization f = factorize(n);
    EXPECT_EQ(is_r_free(f, 2) && is_r_full(f, 2), n == 1) << n;
  }
}

TEST(FirstFilteredTermsTest, SquareFreeAndSquareFull) {
  EXPECT_EQ(first_filtered_terms(TermFilter::RFree, 2, 10),
            (std::vector<std::uint64_t>{1, 2, 3, 5, 6, 7, 10, 11, 13, 14}));
  EXPECT_EQ(first_filtered_terms(TermFilter::RFull, 2, 7), (std::vector<std::uint64_t>{1, 4, 8, 9, 16, 25, 27}));
}

TEST(SeriesDigitsTest, Examples) {
  const std::vector<std::uint64_t> one{1};
  const SeriesDigits a = series_digits(one, 2, 3);
  EXPECT_EQ(a.digits, "100");
  EXPECT_EQ(a.partial_sum, BigRational(BigInt(1), BigInt(2)));
  EXPECT_EQ(a.integer_part, 0);

  // 1/2 + 2/4 = 1: integer part 1, zero fractional digits.
  const std::vector<std::uint64_t> two{1, 2};
  const SeriesDigits b = series_digits(two, 2, 4);
  EXPECT_EQ(b.partial_sum, BigRational(1));
  EXPECT_EQ(b.integer_part, 1);
  EXPECT_EQ(b.digits, "0000");
}

TEST(SeriesDigitsTest, RejectsBadTerms) {
  const std::vector<std::uint64_t> flat{1, 1}, zero{0, 1}, empty;
  EXPECT_THROW(series_digits(flat, 2, 4), std::invalid_argument);
  EXPECT_THROW(series_digits(zero, 2, 4), std::invalid_argument);
  EXPECT_THROW(series_digits(empty, 2, 4), std::invalid_argument);
  EXPECT_THROW(series_digits(std::vector<std::uint64_t>{1}, 1, 4), std::invalid_argument);
}

TEST(SeriesDigitsTest, SquareFreeDigitsMatchDirectExtraction) {
  const auto terms = first_filtered_terms(TermFilter::RFree, 2, 10);
  for (unsigned base : {2U, 3U, 10U}) {
    const std::size_t digits = 40;
    const SeriesDigits s = series_digits(terms, base, digits);
    // Oracle: digit i is floor(sum * base^i) mod base, computed independently.
    for (std::size_t i = 1; i <= digits; ++i) {
      const BigInt scaled = rat_floor(s.partial_sum * BigRational(pow(BigInt(base), static_cast<unsigned>(i))));
      const BigInt digit = scaled % base;
      const char expected = static_cast<char>(digit < 10 ? '0' + static_cast<int>(digit) : 'a' + static_cast<int>(digit) - 10);
      ASSERT_EQ(s.digits[i - 1], expected) << "base " << base << " digit " << i;
    }
  }
}

TEST(SeriesDigitsTest, DigitsBracketThePartialSum) {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 100; ++it) {
    std::vector<std::uint64_t> terms;
    std::uint64_t v = 0;
    std::uniform_int_distribution<std::uint64_t> gap(1, 6);
    for (int i = 0; i < 8; ++i) terms.push_back(v += gap(rng));
    const unsigned base = 2 + static_cast<unsigned>(it % 9);
    const std::size_t d = 12;
    const SeriesDigits s = series_digits(terms, base, d);
    BigInt digits_value = 0;
    for (char c : s.digits) digits_value = digits_value * base + (c - '0');
    const BigInt scale = pow(BigInt(base), static_cast<unsigned>(d));
    const BigRational lower = BigRational(s.integer_part) + BigRational(digits_value, scale);
    const BigRational upper = lower + BigRational(BigInt(1), scale);
    EXPECT_LE(lower, s.partial_sum);
    EXPECT_LT(s.partial_sum, upper);
  }
}

}  // namespace
}  // namespace ntv
