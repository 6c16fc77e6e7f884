#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ntv/core.hpp"
#include "ntv/errors.hpp"

namespace ntv {

/// Describes a sequence s_1, s_2, ... of positive integers.
class SeqSpec {
 public:
  enum class Kind { FloorPower, Squares, Explicit };

  /// s_n = floor(gamma^n). Throws std::invalid_argument unless gamma > 1.
  static SeqSpec floor_power(BigRational gamma);
  static SeqSpec squares();
  /// Throws std::invalid_argument unless terms are positive and strictly increasing.
  static SeqSpec explicit_terms(std::vector<BigInt> terms);

  Kind kind() const { return kind_; }
  const BigRational& gamma() const { return gamma_; }
  const std::vector<BigInt>& terms() const { return terms_; }

  /// "pow(3/2)", "squares", "explicit[5]".
  std::string describe() const;

 private:
  SeqSpec() = default;

  Kind kind_ = Kind::Squares;
  BigRational gamma_;
  std::vector<BigInt> terms_;
};

/// [s_1, ..., s_n_max]. Throws CapExceeded above caps.seq_terms and
/// std::invalid_argument when an explicit list is shorter than n_max.
std::vector<BigInt> generate_terms(const SeqSpec& spec, std::uint64_t n_max, const ResourceCaps& caps = {});

/// [floor(alpha*s_1), ..., floor(alpha*s_n_max)]. Throws std::invalid_argument for alpha <= 0.
std::vector<BigInt> s_alpha(const SeqSpec& spec, const BigRational& alpha, std::uint64_t n_max,
                            const ResourceCaps& caps = {});

/// The alpha-set {alpha : floor(alpha*s) = t} = [t/s, (t+1)/s).
RatInterval preimage_interval(const BigInt& t, const BigInt& s);

struct IndexedInterval {
  std::uint64_t index = 0;  // 1-based n of the witnessing term
  RatInterval alpha;
};

/// Nonempty preimage_interval(t, s_n) ∩ window for n <= n_max, in index order.
/// Exactly the alpha in window with t in S_alpha witnessed by an index <= n_max.
std::vector<IndexedInterval> member_alpha_set(const SeqSpec& spec, const BigInt& t, std::uint64_t n_max,
                                              const RatInterval& window, const ResourceCaps& caps = {});

/// Same, over precomputed terms.
std::vector<IndexedInterval> member_alpha_set(const std::vector<BigInt>& terms, const BigInt& t,
                                              const RatInterval& window);

/// The (0, 1) window as a half-open interval. Every target t >= 1 has
/// preimages bounded away from 0, so [0, 1) loses nothing.
RatInterval unit_window();

struct RatioReport {
  std::uint64_t n_max = 0;
  std::vector<std::uint64_t> violations;  // n with s_n < s_{n+1} <= 2 s_n false
  std::uint64_t holds_from = 1;           // every checked n >= holds_from passes
};

/// Checks s_n < s_{n+1} <= 2 s_n for n in [1, n_max - 1]. Throws std::invalid_argument for n_max < 2.
RatioReport ratio_condition_check(const SeqSpec& spec, std::uint64_t n_max, const ResourceCaps& caps = {});

/// First index n (1-based) with terms[n] <= terms[n-1], or 0 when strictly increasing.
std::uint64_t first_non_increase(const std::vector<BigInt>& terms);

}  // namespace ntv
