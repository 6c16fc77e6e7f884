#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ntv {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number, always stored reduced with a positive denominator.
///
/// Every constructor and arithmetic operator normalizes, so two equal values
/// always have identical (num, den) pairs and comparisons never need to
/// reduce first.
class BigRational {
 public:
  BigRational() : num_(0), den_(1) {}
  BigRational(BigInt value) : num_(std::move(value)), den_(1) {}  // NOLINT
  BigRational(std::int64_t value) : num_(value), den_(1) {}      // NOLINT
  BigRational(int value) : num_(value), den_(1) {}               // NOLINT

  /// Throws std::domain_error when den == 0.
  BigRational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_.sign(); }

  /// Canonical "num/den" form; integers are written with "/1".
  std::string to_string() const;

  /// Approximate decimal rendering for display only, truncated toward zero.
  std::string to_decimal(unsigned places) const;

  /// Accepts "a/b", "a" and exact decimal fractions such as "0.3" or "-1.25".
  /// Throws std::invalid_argument on malformed input or a zero denominator.
  static BigRational parse(std::string_view text);

  BigRational operator-() const;
  friend BigRational operator+(const BigRational& a, const BigRational& b);
  friend BigRational operator-(const BigRational& a, const BigRational& b);
  friend BigRational operator*(const BigRational& a, const BigRational& b);
  /// Throws std::domain_error on division by zero.
  friend BigRational operator/(const BigRational& a, const BigRational& b);

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

 private:
  struct Unchecked {};
  BigRational(BigInt num, BigInt den, Unchecked) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

/// Half-open rational interval [lo, hi). Empty iff lo == hi.
class RatInterval {
 public:
  /// The empty interval [0, 0).
  RatInterval() = default;

  /// Throws std::invalid_argument when hi < lo.
  RatInterval(BigRational lo, BigRational hi);

  static RatInterval empty_at(const BigRational& point) { return RatInterval(point, point); }

  const BigRational& lo() const { return lo_; }
  const BigRational& hi() const { return hi_; }

  bool empty() const { return lo_ == hi_; }
  bool contains(const BigRational& x) const { return lo_ <= x && x < hi_; }

  /// lo <= other.lo and other.hi <= hi; an empty interval is contained in anything.
  bool contains(const RatInterval& other) const {
    return other.empty() || (lo_ <= other.lo_ && other.hi_ <= hi_);
  }

  /// Midpoint, or lo for an empty interval.
  BigRational midpoint() const;

  friend bool operator==(const RatInterval&, const RatInterval&) = default;

 private:
  BigRational lo_;
  BigRational hi_;
};

/// base^n exactly. Throws std::invalid_argument unless base > 0.
BigRational rat_pow(const BigRational& base, std::uint64_t n);

/// Greatest integer <= q.
BigInt rat_floor(const BigRational& q);

/// Least integer >= q.
BigInt rat_ceil(const BigRational& q);

/// [max(lo), min(hi)), collapsed to an empty interval when disjoint.
RatInterval interval_intersect(const RatInterval& a, const RatInterval& b);

/// Largest r with r*r <= n. Throws std::domain_error for negative n.
BigInt isqrt(const BigInt& n);

BigInt pow2(std::uint64_t e);

}  // namespace ntv
