#include "ntv/core.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "ntv/errors.hpp"

namespace ntv {

namespace {

BigInt abs_value(const BigInt& x) { return x.sign() < 0 ? BigInt(-x) : x; }

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("missing digits in '" + std::string(text) + "'");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("invalid digit in '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

BigRational::BigRational(BigInt num, BigInt den) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  BigInt g = boost::multiprecision::gcd(abs_value(num), den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

std::string BigRational::to_string() const { return num_.str() + "/" + den_.str(); }

std::string BigRational::to_decimal(unsigned places) const {
  const bool negative = num_.sign() < 0;
  const BigInt n = abs_value(num_);
  BigInt whole = n / den_;
  BigInt rem = n % den_;
  std::string out = (negative ? "-" : "") + whole.str();
  if (places == 0) return out;
  out += '.';
  for (unsigned i = 0; i < places; ++i) {
    rem *= 10;
    out += static_cast<char>('0' + static_cast<int>(rem / den_));
    rem %= den_;
  }
  return out;
}

BigRational BigRational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return BigRational(std::move(num), std::move(den));
  }

  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = false;
    if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) {
      negative = whole[0] == '-';
      whole.remove_prefix(1);
    }
    if (whole.empty() && frac.empty()) throw std::invalid_argument("invalid decimal '" + std::string(text) + "'");
    std::string digits = std::string(whole) + std::string(frac);
    BigInt num = parse_integer(digits.empty() ? "0" : digits);
    BigInt den = pow(BigInt(10), static_cast<unsigned>(frac.size()));
    return BigRational(negative ? BigInt(-num) : num, std::move(den));
  }

  return BigRational(parse_integer(text));
}

BigRational BigRational::operator-() const { return BigRational(-num_, den_, Unchecked{}); }

BigRational operator+(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

BigRational operator-(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

BigRational operator*(const BigRational& a, const BigRational& b) {
  return BigRational(a.num_ * b.num_, a.den_ * b.den_);
}

BigRational operator/(const BigRational& a, const BigRational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero");
  return BigRational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

RatInterval::RatInterval(BigRational lo, BigRational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("interval with hi < lo: [" + lo_.to_string() + ", " + hi_.to_string() + ")");
}

BigRational RatInterval::midpoint() const { return (lo_ + hi_) * BigRational(BigInt(1), BigInt(2)); }

BigRational rat_pow(const BigRational& base, std::uint64_t n) {
  if (base.sign() <= 0) throw std::invalid_argument("rat_pow requires a positive base");
  BigRational result(1);
  BigRational square = base;
  // Square-and-multiply; reduced fractions stay reduced under powers.
  while (n > 0) {
    if (n & 1U) result = result * square;
    n >>= 1U;
    if (n > 0) square = square * square;
  }
  return result;
}

BigInt rat_floor(const BigRational& q) {
  BigInt quotient = q.num() / q.den();  // truncates toward zero
  if (q.num().sign() < 0 && quotient * q.den() != q.num()) quotient -= 1;
  return quotient;
}

BigInt rat_ceil(const BigRational& q) { return -rat_floor(-q); }

RatInterval interval_intersect(const RatInterval& a, const RatInterval& b) {
  const BigRational& lo = std::max(a.lo(), b.lo());
  const BigRational& hi = std::min(a.hi(), b.hi());
  if (hi <= lo) return RatInterval::empty_at(lo);
  return RatInterval(lo, hi);
}

BigInt isqrt(const BigInt& n) {
  if (n.sign() < 0) throw std::domain_error("isqrt of negative value");
  BigInt r = boost::multiprecision::sqrt(n);
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

ResourceCaps ResourceCaps::from_env() {
  ResourceCaps caps;
  const auto read = [](const char* name, std::uint64_t& slot) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (*end != '\0' || value == 0) throw std::invalid_argument(std::string(name) + " must be a positive integer");
    slot = value;
  };
  read("NTV_SIEVE_CAP", caps.sieve);
  read("NTV_BITMAP_CAP", caps.bitmap);
  read("NTV_SEQ_CAP", caps.seq_terms);
  return caps;
}

BigInt pow2(std::uint64_t e) {
  BigInt one = 1;
  return one << e;
}

}  // namespace ntv
