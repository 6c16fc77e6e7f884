#include "ntv/core.hpp"

#include <gtest/gtest.h>

#include <random>

namespace ntv {
namespace {

BigRational q(std::int64_t n, std::int64_t d) { return BigRational(BigInt(n), BigInt(d)); }

BigRational random_rational(std::mt19937_64& rng, std::int64_t span = 1000) {
  std::uniform_int_distribution<std::int64_t> num(-span, span);
  std::uniform_int_distribution<std::int64_t> den(1, span);
  return q(num(rng), den(rng));
}

bool reduced(const BigRational& x) {
  const BigInt a = x.num().sign() < 0 ? BigInt(-x.num()) : x.num();
  return x.den() > 0 && boost::multiprecision::gcd(a, x.den()) == 1;
}

TEST(BigRationalTest, NormalizesSignAndGcd) {
  const BigRational x = q(6, -8);
  EXPECT_EQ(x.num(), -3);
  EXPECT_EQ(x.den(), 4);
  EXPECT_EQ(q(0, -5).den(), 1);
  EXPECT_THROW(q(1, 0), std::domain_error);
}

TEST(BigRationalTest, ParsesFractionsAndExactDecimals) {
  EXPECT_EQ(BigRational::parse("3/2"), q(3, 2));
  EXPECT_EQ(BigRational::parse("0.3"), q(3, 10));
  EXPECT_EQ(BigRational::parse("-1.25"), q(-5, 4));
  EXPECT_EQ(BigRational::parse(" 17 "), BigRational(17));
  EXPECT_EQ(BigRational::parse(".5"), q(1, 2));
  EXPECT_THROW(BigRational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(BigRational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(BigRational::parse(""), std::invalid_argument);
  EXPECT_THROW(BigRational::parse("1e5"), std::invalid_argument);
}

TEST(BigRationalTest, ToStringAlwaysHasDenominator) {
  EXPECT_EQ(BigRational(5).to_string(), "5/1");
  EXPECT_EQ(q(-9, 12).to_string(), "-3/4");
  EXPECT_EQ(q(1, 3).to_decimal(4), "0.3333");
  EXPECT_EQ(q(-7, 2).to_decimal(1), "-3.5");
}

TEST(RatPowTest, Examples) {
  EXPECT_EQ(rat_pow(q(3, 2), 0), BigRational(1));
  EXPECT_EQ(rat_pow(q(3, 2), 2), q(9, 4));
  // Oracle: eight explicit multiplications.
  BigRational product(1);
  for (int i = 0; i < 8; ++i) product = product * q(3, 2);
  EXPECT_EQ(product, q(6561, 256));
  EXPECT_EQ(rat_pow(q(3, 2), 8), product);
}

TEST(RatPowTest, RejectsNonPositiveBase) {
  EXPECT_THROW(rat_pow(BigRational(0), 3), std::invalid_argument);
  EXPECT_THROW(rat_pow(q(-1, 2), 3), std::invalid_argument);
}

TEST(RatFloorTest, Examples) {
  EXPECT_EQ(rat_floor(q(9, 4)), 2);
  EXPECT_EQ(rat_floor(BigRational(17)), 17);
  EXPECT_EQ(rat_floor(q(225, 17)), 13);
  EXPECT_EQ(rat_floor(q(-1, 2)), -1);
  EXPECT_EQ(rat_floor(q(-4, 2)), -2);
  EXPECT_EQ(rat_ceil(q(-1, 2)), 0);
  EXPECT_EQ(rat_ceil(q(15, 1)), 15);
  EXPECT_EQ(rat_ceil(q(29, 2)), 15);
}

TEST(IntervalTest, IntersectExamples) {
  const RatInterval unit(BigRational(0), BigRational(1));
  EXPECT_EQ(interval_intersect(unit, unit), unit);
  EXPECT_TRUE(interval_intersect(RatInterval(q(8, 17), q(9, 17)), RatInterval(q(16, 25), q(17, 25))).empty());
  EXPECT_TRUE(interval_intersect(RatInterval(q(1, 20), q(1, 10)), RatInterval(q(1, 20), q(1, 20))).empty());
}

TEST(IntervalTest, HalfOpenMembership) {
  const RatInterval i(q(8, 17), q(9, 17));
  EXPECT_TRUE(i.contains(q(8, 17)));
  EXPECT_FALSE(i.contains(q(9, 17)));
  EXPECT_TRUE(i.contains(i.midpoint()));
  EXPECT_THROW(RatInterval(BigRational(1), BigRational(0)), std::invalid_argument);
  EXPECT_TRUE(RatInterval().empty());
}

TEST(IsqrtTest, ExactAroundSquares) {
  for (std::int64_t n = 0; n < 2000; ++n) {
    const BigInt r = isqrt(BigInt(n));
    EXPECT_LE(r * r, n);
    EXPECT_GT((r + 1) * (r + 1), n);
  }
  const BigInt big = pow(BigInt(10), 40) + 7;
  const BigInt r = isqrt(big);
  EXPECT_LE(r * r, big);
  EXPECT_GT((r + 1) * (r + 1), big);
}

// Property suites over seeded random rationals.

TEST(CoreProperties, ArithmeticStaysReduced) {
  std::mt19937_64 rng(1);
  for (int it = 0; it < 2000; ++it) {
    const BigRational a = random_rational(rng);
    BigRational b = random_rational(rng);
    EXPECT_TRUE(reduced(a + b));
    EXPECT_TRUE(reduced(a - b));
    EXPECT_TRUE(reduced(a * b));
    if (b.sign() != 0) EXPECT_TRUE(reduced(a / b));
  }
}

TEST(CoreProperties, FloorBrackets) {
  std::mt19937_64 rng(2);
  for (int it = 0; it < 2000; ++it) {
    const BigRational x = random_rational(rng, 100000);
    const BigRational f(rat_floor(x));
    EXPECT_LE(f, x);
    EXPECT_LT(x, f + BigRational(1));
  }
}

TEST(CoreProperties, IntersectIsCommutativeAndAssociative) {
  std::mt19937_64 rng(3);
  const auto random_interval = [&] {
    BigRational a = random_rational(rng, 50);
    BigRational b = random_rational(rng, 50);
    if (b < a) std::swap(a, b);
    return RatInterval(a, b);
  };
  const auto same = [](const RatInterval& x, const RatInterval& y) { return (x.empty() && y.empty()) || x == y; };
  for (int it = 0; it < 1000; ++it) {
    const RatInterval a = random_interval(), b = random_interval(), c = random_interval();
    EXPECT_TRUE(same(interval_intersect(a, b), interval_intersect(b, a)));
    EXPECT_TRUE(same(interval_intersect(interval_intersect(a, b), c), interval_intersect(a, interval_intersect(b, c))));
    // A wide window acts as identity on contained intervals.
    const RatInterval wide(BigRational(-1000), BigRational(1000));
    EXPECT_TRUE(same(interval_intersect(a, wide), a));
  }
}

TEST(CoreProperties, PowIsAdditiveInExponent) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> exp(0, 30);
  for (int it = 0; it < 200; ++it) {
    BigRational base = random_rational(rng, 20);
    if (base.sign() <= 0) base = -base + BigRational(1);
    const int m = exp(rng), n = exp(rng);
    EXPECT_EQ(rat_pow(base, m + n), rat_pow(base, m) * rat_pow(base, n));
  }
}

}  // namespace
}  // namespace ntv
