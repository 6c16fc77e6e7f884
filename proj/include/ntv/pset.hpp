#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ntv/core.hpp"
#include "ntv/errors.hpp"

namespace ntv {

/// Membership bitmap of P(A) ∩ [0, bound]: sums of distinct term occurrences,
/// with 0 always present.
class PSetBitmap {
 public:
  /// Only {0}. Throws CapExceeded when bound + 1 exceeds caps.bitmap.
  explicit PSetBitmap(std::uint64_t bound, const ResourceCaps& caps = {});

  std::uint64_t bound() const { return bound_; }
  bool contains(std::uint64_t n) const { return n <= bound_ && ((words_[n >> 6] >> (n & 63)) & 1U) != 0; }
  std::size_t count() const;
  std::span<const std::uint64_t> words() const { return words_; }

  /// Adds one term occurrence: bits |= bits << term, truncated at bound.
  void add_term(std::uint64_t term);

  /// True when every element of *this is in other (bounds must match).
  bool subset_of(const PSetBitmap& other) const;

  /// Maximal runs of set bits as (start, length) pairs, ascending.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> runs() const;

  std::vector<std::uint64_t> members() const;

  /// 8-byte little-endian bit count (bound + 1), then bits packed LSB-first.
  void write_raw(std::ostream& out) const;
  /// Inverse of write_raw. Throws std::runtime_error on truncated or malformed
  /// input and CapExceeded above caps.bitmap.
  static PSetBitmap read_raw(std::istream& in, const ResourceCaps& caps = {});

  friend bool operator==(const PSetBitmap&, const PSetBitmap&) = default;

 private:
  void clear_tail();

  std::uint64_t bound_;
  std::vector<std::uint64_t> words_;
};

/// Occurrence-level 0/1 subset-sum DP over the multiset `terms`.
PSetBitmap compute_pset(std::span<const std::uint64_t> terms, std::uint64_t bound, const ResourceCaps& caps = {});

/// Smallest T with [T, bound] ⊆ P(A), or nullopt when bound ∉ P(A). A bounded
/// heuristic for completeness, not a proof.
std::optional<std::uint64_t> complete_up_to(std::span<const std::uint64_t> terms, std::uint64_t bound,
                                            const ResourceCaps& caps = {});

/// a_1 = 1 and a_{n+1} <= 1 + a_1 + ... + a_n for every prefix. Throws
/// std::invalid_argument when terms are not sorted ascending. Empty input
/// is false.
bool brown_criterion(std::span<const std::uint64_t> terms);

/// 1 / (4 (2^m + 1)).
BigRational squares_witness_alpha(std::uint64_t m);

struct SquaresWitnessRow {
  std::uint64_t i = 0;
  BigInt target;     // 2^i
  BigInt n;          // floor(alpha n^2) = 2^i
  BigInt n_squared;
  BigInt floor_value;
  BigInt window_lo;  // isqrt(alpha^-1 2^i)
  BigInt window_hi;  // isqrt(alpha^-1 (2^i + 1)) + 1
  // Gap condition sqrt(alpha^-1)(sqrt(2^i+1) - sqrt(2^i)) > 1, squared out:
  // (alpha^-1 - 2^(i+1) - 1)^2 > 4 * 2^i (2^i + 1) with the left base positive.
  BigInt gap_lhs;
  BigInt gap_rhs;
  bool gap_ok = false;
};

struct SquaresWitnessReport {
  std::uint64_t m = 0;
  BigRational alpha;
  BigInt alpha_inverse;
  std::vector<SquaresWitnessRow> rows;
};

class WitnessFailure : public CheckFailure {
 public:
  WitnessFailure(const std::string& what, std::uint64_t i) : CheckFailure(what), i_(i) {}
  std::uint64_t i() const { return i_; }

 private:
  std::uint64_t i_;
};

/// For alpha = squares_witness_alpha(m), finds n_i with floor(alpha n_i^2) = 2^i
/// for each i in [0, m] using integer comparisons only, and checks the gap
/// condition. Throws WitnessFailure with the first failing i.
SquaresWitnessReport verify_squares_witness(std::uint64_t m);

}  // namespace ntv
