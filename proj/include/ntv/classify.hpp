#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ntv/core.hpp"
#include "ntv/errors.hpp"

namespace ntv {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-exponent decomposition of n >= 1, primes strictly ascending.
struct Factorization {
  BigInt n;
  std::vector<PrimePower> factors;

  /// Exponent of p in n, 0 when p does not divide n.
  unsigned exponent_of(const BigInt& p) const;

  /// "2^3 * 3^2"; "1" for the empty product.
  std::string to_string() const;
};

/// Seed for the rho splitter; fixed so factorizations are reproducible.
inline constexpr std::uint64_t kDefaultFactorSeed = 0x5eed'cafe'f00d'1234ULL;

/// Trial-division bound for factorize.
inline constexpr std::uint32_t kTrialDivisionBound = 1'000'000;

/// Deterministic Miller-Rabin for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Exact below 2^64 and deterministic below 3.3e24 (bases 2..37). Above that
/// it is a strong probable-prime test over the first 24 prime bases.
bool is_prime(const BigInt& n);

/// Trial division by primes below 10^6, then Miller-Rabin, then a seeded
/// Pollard-Brent rho for the remaining composites. Throws
/// std::invalid_argument for n < 1.
Factorization factorize(const BigInt& n, std::uint64_t seed = kDefaultFactorSeed);
Factorization factorize(std::uint64_t n, std::uint64_t seed = kDefaultFactorSeed);

bool is_r_free(const Factorization& f, unsigned r);
bool is_r_full(const Factorization& f, unsigned r);

/// n >= 1, r >= 2; 1 counts as both r-free and r-full.
bool is_r_free(const BigInt& n, unsigned r);
bool is_r_full(const BigInt& n, unsigned r);

/// Smallest-prime-factor table for [0, limit]; spf[0] = spf[1] = 0.
std::vector<std::uint32_t> smallest_prime_factor_table(std::uint64_t limit, const ResourceCaps& caps = {});

/// r-full integers in [1, N], ascending, via a smallest-prime-factor sieve.
std::vector<std::uint64_t> r_full_up_to(std::uint64_t limit, unsigned r, const ResourceCaps& caps = {});

/// r-free integers in [1, N], ascending, via the same sieve.
std::vector<std::uint64_t> r_free_up_to(std::uint64_t limit, unsigned r, const ResourceCaps& caps = {});

/// Square-full integers in [1, N] generated as a^2 b^3 with b square-free.
/// Independent of the sieve route; used to cross-check r_full_up_to(N, 2).
std::vector<std::uint64_t> squarefull_via_a2b3(std::uint64_t limit, const ResourceCaps& caps = {});

enum class TermFilter { RFree, RFull };

/// The first `count` positive integers passing the filter, ascending.
std::vector<std::uint64_t> first_filtered_terms(TermFilter filter, unsigned r, std::size_t count);

struct SeriesDigits {
  unsigned base = 2;
  BigInt integer_part;
  std::string digits;
  BigRational partial_sum;
};

/// Base-`base` digits after the radix point of sum(a * base^-a) over `terms`,
/// extracted exactly from the rational partial sum. Digits above 9 are
/// written 'a'..'z', so base is limited to [2, 36]. Throws
/// std::invalid_argument when terms are not strictly increasing positive
/// integers.
SeriesDigits series_digits(std::span<const std::uint64_t> terms, unsigned base, std::size_t digit_count);

}  // namespace ntv
