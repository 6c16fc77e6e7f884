#include "ntv/classify.hpp"

#include <algorithm>
#include <limits>
#include <type_traits>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ntv {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kWitnessBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
                                 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
constexpr std::size_t kDeterministicBaseCount = 12;  // 2..37

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = u64{i} * i; j <= kTrialDivisionBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool strong_probable_prime(u64 n, u64 a, u64 d, unsigned s) {
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const BigInt& n, const BigInt& a, const BigInt& d, unsigned s) {
  const BigInt n_minus_1 = n - 1;
  BigInt x = boost::multiprecision::powm(a, d, n);
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = x * x % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

bool fits_u64(const BigInt& n) { return n.sign() >= 0 && n <= std::numeric_limits<u64>::max(); }

// Pollard-Brent over a modular arithmetic backend. Returns a nontrivial
// divisor of the odd composite n.
template <class T, class MulMod, class Gcd>
T brent_split(const T& n, std::mt19937_64& rng, MulMod mul_mod_n, Gcd gcd_n) {
  const auto abs_diff = [](const T& a, const T& b) -> T { return a > b ? T(a - b) : T(b - a); };
  const auto random_below = [&](const T& bound) -> T {
    // Enough randomness for starting points; uniformity is irrelevant.
    if constexpr (std::is_same_v<T, u64>) {
      return rng() % bound;
    } else {
      T acc = 0;
      for (int i = 0; i < 4; ++i) acc = (acc << 64) + T(rng());
      return T(acc % bound);
    }
  };
  constexpr unsigned kBatch = 128;
  for (;;) {
    const T c = random_below(n - 1) + 1;
    T y = random_below(n);
    const T gap = n - c;
    const auto step = [&](const T& v) -> T {
      T sq = mul_mod_n(v, v);
      return sq >= gap ? T(sq - gap) : T(sq + c);
    };
    T x = y;
    T ys = y;
    T g = 1;
    T q = 1;
    u64 r = 1;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = step(y);
      u64 k = 0;
      while (k < r && g == 1) {
        ys = y;
        const u64 limit = std::min<u64>(kBatch, r - k);
        for (u64 i = 0; i < limit; ++i) {
          y = step(y);
          q = mul_mod_n(q, abs_diff(x, y));
        }
        g = gcd_n(q);
        k += kBatch;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd_n(abs_diff(x, ys));
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

u64 split_u64(u64 n, std::mt19937_64& rng) {
  if (n % 2 == 0) return 2;
  return brent_split<u64>(
      n, rng, [n](u64 a, u64 b) { return mul_mod(a, b, n); },
      [n](u64 v) { return std::gcd(v, n); });
}

BigInt split_big(const BigInt& n, std::mt19937_64& rng) {
  if (!bit_test(n, 0)) return 2;
  return brent_split<BigInt>(
      n, rng, [&n](const BigInt& a, const BigInt& b) { return BigInt(a * b % n); },
      [&n](const BigInt& v) { return BigInt(boost::multiprecision::gcd(v, n)); });
}

// floor(n^(1/k)) by Newton iteration from an overestimate.
BigInt integer_root(const BigInt& n, unsigned k) {
  const unsigned bits = static_cast<unsigned>(msb(n)) + 1;
  BigInt x = BigInt(1) << ((bits + k - 1) / k);
  for (;;) {
    const BigInt y = (BigInt(k - 1) * x + n / pow(x, k - 1)) / k;
    if (y >= x) return x;
    x = y;
  }
}

// Rho needs about sqrt(p) steps to separate p from p^e, so perfect powers
// are peeled off directly. Cofactors here have no prime below the trial bound.
void collect_prime_factors(const BigInt& n, std::mt19937_64& rng, std::map<BigInt, unsigned>& out);

bool collect_perfect_power(const BigInt& n, std::mt19937_64& rng, std::map<BigInt, unsigned>& out) {
  const unsigned bits = static_cast<unsigned>(msb(n)) + 1;
  for (unsigned k = 2; k <= bits / 19; ++k) {
    const BigInt root = integer_root(n, k);
    if (pow(root, k) != n) continue;
    std::map<BigInt, unsigned> inner;
    collect_prime_factors(root, rng, inner);
    for (const auto& [p, e] : inner) out[p] += e * k;
    return true;
  }
  return false;
}

void collect_prime_factors(const BigInt& n, std::mt19937_64& rng, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (!is_prime(n) && collect_perfect_power(n, rng, out)) return;
  if (fits_u64(n)) {
    const u64 small = static_cast<u64>(n);
    if (is_prime(small)) {
      ++out[n];
      return;
    }
    const u64 d = split_u64(small, rng);
    collect_prime_factors(BigInt(d), rng, out);
    collect_prime_factors(BigInt(small / d), rng, out);
    return;
  }
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const BigInt d = split_big(n, rng);
  collect_prime_factors(d, rng, out);
  collect_prime_factors(BigInt(n / d), rng, out);
}

}  // namespace

unsigned Factorization::exponent_of(const BigInt& p) const {
  for (const auto& f : factors)
    if (f.prime == p) return f.exponent;
  return 0;
}

std::string Factorization::to_string() const {
  if (factors.empty()) return "1";
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += " * ";
    out += f.prime.str();
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 p : kWitnessBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::size_t i = 0; i < kDeterministicBaseCount; ++i)
    if (!strong_probable_prime(n, kWitnessBases[i], d, s)) return false;
  return true;
}

bool is_prime(const BigInt& n) {
  if (fits_u64(n)) return is_prime(static_cast<u64>(n));
  if (n.sign() < 0) return false;
  for (u64 p : kWitnessBases)
    if (n % p == 0) return false;
  BigInt d = n - 1;
  unsigned s = 0;
  while (!bit_test(d, 0)) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kWitnessBases)
    if (!strong_probable_prime(n, BigInt(a), d, s)) return false;
  return true;
}

namespace {

// Divides out trial primes from `rest` until p^2 > rest. A single
// Miller-Rabin call once the tiny primes are gone usually ends the loop early.
template <class T>
void trial_divide(T& rest, std::vector<PrimePower>& factors, std::size_t& next_prime) {
  const auto& primes = trial_primes();
  bool primality_checked = false;
  for (; next_prime < primes.size(); ++next_prime) {
    const std::uint32_t p = primes[next_prime];
    if (rest == 1 || T(p) * p > rest) return;
    if (!primality_checked && p > 1000) {
      primality_checked = true;
      if (is_prime(rest)) return;
    }
    if (rest % p != 0) continue;
    unsigned e = 0;
    do {
      rest /= p;
      ++e;
    } while (rest % p == 0);
    factors.push_back({BigInt(p), e});
    if constexpr (!std::is_same_v<T, u64>) {
      if (fits_u64(rest)) {
        ++next_prime;
        return;
      }
    }
  }
}

}  // namespace

Factorization factorize(const BigInt& n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("factorize requires n >= 1, got " + n.str());
  Factorization result{n, {}};
  std::size_t next_prime = 0;
  BigInt rest = n;
  if (!fits_u64(rest)) trial_divide(rest, result.factors, next_prime);
  if (fits_u64(rest)) {
    u64 small = static_cast<u64>(rest);
    trial_divide(small, result.factors, next_prime);
    rest = small;
  }
  if (rest > 1) {
    std::map<BigInt, unsigned> large;
    std::mt19937_64 rng(seed);
    collect_prime_factors(rest, rng, large);
    for (auto& [p, e] : large) result.factors.push_back({p, e});
  }
  return result;
}

Factorization factorize(std::uint64_t n, std::uint64_t seed) { return factorize(BigInt(n), seed); }

bool is_r_free(const Factorization& f, unsigned r) {
  return std::all_of(f.factors.begin(), f.factors.end(), [r](const PrimePower& pp) { return pp.exponent < r; });
}

bool is_r_full(const Factorization& f, unsigned r) {
  return std::all_of(f.factors.begin(), f.factors.end(), [r](const PrimePower& pp) { return pp.exponent >= r; });
}

namespace {
void check_r(unsigned r) {
  if (r < 2) throw std::invalid_argument("r must be >= 2");
}
}  // namespace

bool is_r_free(const BigInt& n, unsigned r) {
  check_r(r);
  return is_r_free(factorize(n), r);
}

bool is_r_full(const BigInt& n, unsigned r) {
  check_r(r);
  return is_r_full(factorize(n), r);
}

std::vector<std::uint32_t> smallest_prime_factor_table(std::uint64_t limit, const ResourceCaps& caps) {
  check_cap("sieve", limit, caps.sieve);
  std::vector<std::uint32_t> spf(limit + 1, 0);
  for (u64 i = 2; i <= limit; ++i) {
    if (spf[i] != 0) continue;
    spf[i] = static_cast<std::uint32_t>(i);
    for (u64 j = i * i; j <= limit; j += i)
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
  }
  return spf;
}

namespace {

template <class Keep>
std::vector<std::uint64_t> sieve_filter(std::uint64_t limit, const ResourceCaps& caps, Keep keep) {
  if (limit < 1) throw std::invalid_argument("limit must be >= 1");
  const auto spf = smallest_prime_factor_table(limit, caps);
  std::vector<std::uint64_t> out;
  out.push_back(1);
  for (u64 n = 2; n <= limit; ++n) {
    u64 rest = n;
    unsigned min_e = ~0U;
    unsigned max_e = 0;
    while (rest > 1) {
      const u64 p = spf[rest];
      unsigned e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      min_e = std::min(min_e, e);
      max_e = std::max(max_e, e);
    }
    if (keep(min_e, max_e)) out.push_back(n);
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> r_full_up_to(std::uint64_t limit, unsigned r, const ResourceCaps& caps) {
  check_r(r);
  return sieve_filter(limit, caps, [r](unsigned min_e, unsigned) { return min_e >= r; });
}

std::vector<std::uint64_t> r_free_up_to(std::uint64_t limit, unsigned r, const ResourceCaps& caps) {
  check_r(r);
  return sieve_filter(limit, caps, [r](unsigned, unsigned max_e) { return max_e < r; });
}

std::vector<std::uint64_t> squarefull_via_a2b3(std::uint64_t limit, const ResourceCaps& caps) {
  if (limit < 1) throw std::invalid_argument("limit must be >= 1");
  check_cap("sieve", limit, caps.sieve);
  const auto squarefree = [](u64 b) {
    for (u64 p = 2; p * p <= b; ++p)
      if (b % (p * p) == 0) return false;
    return true;
  };
  std::vector<std::uint64_t> out;
  for (u64 b = 1; b * b * b <= limit; ++b) {
    if (!squarefree(b)) continue;
    const u64 cube = b * b * b;
    for (u64 a = 1; a * a <= limit / cube; ++a) out.push_back(a * a * cube);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> first_filtered_terms(TermFilter filter, unsigned r, std::size_t count) {
  check_r(r);
  std::vector<std::uint64_t> out;
  out.reserve(count);
  for (u64 n = 1; out.size() < count; ++n) {
    const Factorization f = factorize(n);
    const bool keep = filter == TermFilter::RFree ? is_r_free(f, r) : is_r_full(f, r);
    if (keep) out.push_back(n);
  }
  return out;
}

SeriesDigits series_digits(std::span<const std::uint64_t> terms, unsigned base, std::size_t digit_count) {
  if (base < 2 || base > 36) throw std::invalid_argument("base must be in [2, 36]");
  if (terms.empty()) throw std::invalid_argument("series needs at least one term");
  if (terms.front() == 0) throw std::invalid_argument("series terms must be positive");
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i] <= terms[i - 1])
      throw std::invalid_argument("series terms must be strictly increasing (index " + std::to_string(i) + ")");

  // Common denominator base^max_term.
  const u64 top = terms.back();
  const BigInt b = base;
  BigInt numerator = 0;
  for (u64 a : terms) numerator += BigInt(a) * pow(b, static_cast<unsigned>(top - a));
  SeriesDigits out;
  out.base = base;
  out.partial_sum = BigRational(numerator, pow(b, static_cast<unsigned>(top)));

  out.integer_part = rat_floor(out.partial_sum);
  const BigInt& den = out.partial_sum.den();
  BigInt rem = out.partial_sum.num() - out.integer_part * den;
  out.digits.reserve(digit_count);
  static constexpr char kDigitChars[] = "0123456789abcdefghijklmnopqrstuvwxyz";
  for (std::size_t i = 0; i < digit_count; ++i) {
    rem *= base;
    const BigInt d = rem / den;
    rem -= d * den;
    out.digits += kDigitChars[static_cast<unsigned>(d)];
  }
  return out;
}

}  // namespace ntv
