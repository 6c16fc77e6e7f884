#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ntv/core.hpp"
#include "ntv/errors.hpp"
#include "ntv/floorseq.hpp"

namespace ntv {

// Skip argument for s_n = floor(gamma^n).
//
// If floor(alpha*s_k) = 2^j then alpha lies in I_k = [2^j/s_k, (2^j+1)/s_k).
// When every alpha in I_k ∩ (0,1) has floor(alpha*s_{k+1}) <= 2^(j+1) - 1 and
// floor(alpha*s_{k+2}) >= 2^(j+1) + 1, monotonicity of floor(alpha*s_n) in n
// means 2^(j+1) is skipped: 2^j and 2^(j+1) are never both in S_alpha.

inline constexpr std::uint64_t kDefaultSkipK = 300;
inline constexpr std::uint64_t kDefaultJMax = 20;

struct FloorExtrema {
  BigInt min;
  BigInt max;
};

/// Exact min and max of floor(alpha*s) over the half-open I. Both are
/// attained. Throws std::invalid_argument when I is empty or s < 1.
FloorExtrema interval_extrema_of_floor(const RatInterval& interval, const BigInt& s);

/// Rationals in I attaining the min and max of floor(alpha*s).
std::pair<BigRational, BigRational> extrema_attainers(const RatInterval& interval, const BigInt& s);

struct SkipRow {
  std::uint64_t k = 0;
  RatInterval interval;  // I_k ∩ [0, 1)
  BigInt max_floor_next;
  BigInt min_floor_next2;
  bool pass = false;
};

struct SkipReport {
  BigRational gamma;
  std::uint64_t j = 0;
  std::uint64_t max_k = 0;
  std::vector<SkipRow> rows;
  std::vector<std::uint64_t> skipped;  // k with I_k ∩ (0,1) empty
  bool overall = false;

  BigInt upper_target() const { return pow2(j + 1) - 1; }  // max at k+1 must be <= this
  BigInt lower_target() const { return pow2(j + 1) + 1; }  // min at k+2 must be >= this
  std::vector<std::uint64_t> failing_k() const;
  /// Largest max_floor_next and smallest min_floor_next2 over all rows.
  std::optional<std::pair<BigInt, BigInt>> global_bounds() const;
};

class SkipViolation : public CheckFailure {
 public:
  explicit SkipViolation(SkipReport report);
  const SkipReport& report() const { return report_; }

 private:
  SkipReport report_;
};

/// Builds the per-k rows for k in [1, max_k] without throwing on failures.
/// Throws std::invalid_argument when gamma <= 1, j < 1, max_k < 3, or when
/// floor(gamma^n) is not strictly increasing over n <= max_k + 2.
SkipReport skip_rows(const BigRational& gamma, std::uint64_t j, std::uint64_t max_k, unsigned jobs = 1,
                     const ResourceCaps& caps = {});

/// skip_rows, then throws SkipViolation unless every row passes.
SkipReport verify_skip_all_alpha(const BigRational& gamma, std::uint64_t j, std::uint64_t max_k = kDefaultSkipK,
                                 unsigned jobs = 1, const ResourceCaps& caps = {});

/// k-free sufficient conditions for the skip at 2^j:
///   A: (2^j + 2) gamma <= 2^(j+1)     so  alpha*s_{k+1} < 2^(j+1)
///   B: 2^j (gamma^2 - 2) >= 2          so  alpha*s_{k+2} > 2^(j+1) + 1
/// They come from floor(x) > x - 1 and alpha < 1.
struct SymbolicCheck {
  BigRational gamma;
  std::uint64_t j = 0;
  BigRational upper_lhs;  // (2^j + 2) gamma
  BigInt upper_rhs;       // 2^(j+1)
  BigRational lower_lhs;  // 2^j (gamma^2 - 2)
  BigInt lower_rhs;       // 2
  bool upper_ok = false;
  bool lower_ok = false;
  bool holds = false;
  /// floor(alpha*s_{k+1}) never exceeds this: the largest integer below (2^j+2) gamma.
  BigInt upper_floor_bound;
  /// floor(alpha*s_{k+2}) is never below this: floor(2^j gamma^2 - 1).
  BigInt lower_floor_bound;
};

/// Throws std::invalid_argument unless 3/2 <= gamma < 2 and j >= 1.
SymbolicCheck symbolic_condition_check(const BigRational& gamma, std::uint64_t j);

/// Smallest j with both conditions, ignoring any cap. Exists for every
/// gamma in [3/2, 2).
std::uint64_t gamma_exception_threshold(const BigRational& gamma);

/// Smallest j <= j_max passing symbolic_condition_check. Throws
/// NotFoundWithinBound (naming the true threshold) when j_max is too small.
std::uint64_t gamma_exception_search(const BigRational& gamma, std::uint64_t j_max = kDefaultJMax);

struct ScanHit {
  std::uint64_t index1 = 0;
  std::uint64_t index2 = 0;
  RatInterval alpha;
};

/// Every alpha in (0, 1) with both t1 and t2 in S_alpha witnessed within the
/// first n_max terms, as pairwise intersections of the two member sets.
/// Throws std::invalid_argument when t1 == t2.
std::vector<ScanHit> counterexample_scan(const SeqSpec& spec, const BigInt& t1, const BigInt& t2,
                                         std::uint64_t n_max, const ResourceCaps& caps = {});

}  // namespace ntv
