#include "ntv/pset.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace ntv {

PSetBitmap::PSetBitmap(std::uint64_t bound, const ResourceCaps& caps) : bound_(bound) {
  if (bound == std::numeric_limits<std::uint64_t>::max()) throw CapExceeded("bitmap", bound, caps.bitmap);
  check_cap("bitmap", bound + 1, caps.bitmap);
  words_.assign(bound / 64 + 1, 0);
  words_[0] = 1;
}

void PSetBitmap::clear_tail() {
  const unsigned used = static_cast<unsigned>(bound_ % 64) + 1;
  if (used < 64) words_.back() &= (std::uint64_t{1} << used) - 1;
}

std::size_t PSetBitmap::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void PSetBitmap::add_term(std::uint64_t term) {
  if (term == 0 || term > bound_) return;
  const std::size_t word_shift = term / 64;
  const unsigned bit_shift = static_cast<unsigned>(term % 64);
  // High to low, so every source word is read before it is updated.
  for (std::size_t i = words_.size(); i-- > word_shift;) {
    const std::size_t src = i - word_shift;
    std::uint64_t shifted = words_[src] << bit_shift;
    if (bit_shift != 0 && src > 0) shifted |= words_[src - 1] >> (64 - bit_shift);
    words_[i] |= shifted;
  }
  clear_tail();
}

bool PSetBitmap::subset_of(const PSetBitmap& other) const {
  if (bound_ != other.bound_) throw std::invalid_argument("bitmap bounds differ");
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> PSetBitmap::runs() const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  std::uint64_t n = 0;
  while (n <= bound_) {
    if (!contains(n)) {
      ++n;
      continue;
    }
    const std::uint64_t start = n;
    while (n <= bound_ && contains(n)) ++n;
    out.emplace_back(start, n - start);
  }
  return out;
}

std::vector<std::uint64_t> PSetBitmap::members() const {
  std::vector<std::uint64_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

void PSetBitmap::write_raw(std::ostream& out) const {
  const std::uint64_t bits = bound_ + 1;
  for (int b = 0; b < 8; ++b) out.put(static_cast<char>((bits >> (8 * b)) & 0xFF));
  const std::uint64_t bytes = (bits + 7) / 8;
  for (std::uint64_t i = 0; i < bytes; ++i) out.put(static_cast<char>((words_[i / 8] >> (8 * (i % 8))) & 0xFF));
}

PSetBitmap PSetBitmap::read_raw(std::istream& in, const ResourceCaps& caps) {
  std::uint64_t bits = 0;
  for (int b = 0; b < 8; ++b) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw std::runtime_error("truncated bitmap header");
    bits |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * b);
  }
  if (bits == 0) throw std::runtime_error("bitmap length must be positive");
  PSetBitmap out(bits - 1, caps);
  out.words_[0] = 0;
  const std::uint64_t bytes = (bits + 7) / 8;
  for (std::uint64_t i = 0; i < bytes; ++i) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw std::runtime_error("truncated bitmap body");
    out.words_[i / 8] |= static_cast<std::uint64_t>(static_cast<unsigned char>(c)) << (8 * (i % 8));
  }
  out.clear_tail();
  if (!out.contains(0)) throw std::runtime_error("bitmap is missing 0");
  return out;
}

PSetBitmap compute_pset(std::span<const std::uint64_t> terms, std::uint64_t bound, const ResourceCaps& caps) {
  PSetBitmap bitmap(bound, caps);
  for (std::uint64_t t : terms) bitmap.add_term(t);
  return bitmap;
}

std::optional<std::uint64_t> complete_up_to(std::span<const std::uint64_t> terms, std::uint64_t bound,
                                            const ResourceCaps& caps) {
  const PSetBitmap bitmap = compute_pset(terms, bound, caps);
  if (!bitmap.contains(bound)) return std::nullopt;
  std::uint64_t t = bound;
  while (t > 0 && bitmap.contains(t - 1)) --t;
  return t;
}

bool brown_criterion(std::span<const std::uint64_t> terms) {
  if (!std::is_sorted(terms.begin(), terms.end())) throw std::invalid_argument("brown_criterion needs sorted terms");
  if (terms.empty() || terms.front() != 1) return false;
  BigInt prefix = 0;
  for (std::uint64_t a : terms) {
    if (a > prefix + 1) return false;
    prefix += a;
  }
  return true;
}

BigRational squares_witness_alpha(std::uint64_t m) { return BigRational(BigInt(1), 4 * (pow2(m) + 1)); }

SquaresWitnessReport verify_squares_witness(std::uint64_t m) {
  SquaresWitnessReport report;
  report.m = m;
  report.alpha = squares_witness_alpha(m);
  report.alpha_inverse = report.alpha.den();
  const BigInt& inv = report.alpha_inverse;

  for (std::uint64_t i = 0; i <= m; ++i) {
    SquaresWitnessRow row;
    row.i = i;
    row.target = pow2(i);
    const BigInt lo_bound = inv * row.target;        // n^2 >= alpha^-1 2^i
    const BigInt hi_bound = inv * (row.target + 1);  // n^2 <  alpha^-1 (2^i + 1)
    row.window_lo = isqrt(lo_bound);
    row.window_hi = isqrt(hi_bound) + 1;

    const BigInt base = inv - 2 * row.target - 1;
    row.gap_lhs = base * base;
    row.gap_rhs = 4 * row.target * (row.target + 1);
    row.gap_ok = base > 0 && row.gap_lhs > row.gap_rhs;
    if (!row.gap_ok) throw WitnessFailure("gap condition fails at i = " + std::to_string(i), i);

    bool found = false;
    for (BigInt n = row.window_lo; n <= row.window_hi; ++n) {
      const BigInt sq = n * n;
      if (sq >= lo_bound && sq < hi_bound) {
        row.n = n;
        row.n_squared = sq;
        found = true;
        break;
      }
    }
    if (!found) throw WitnessFailure("no n with floor(alpha n^2) = 2^" + std::to_string(i), i);
    row.floor_value = row.n_squared / inv;
    if (row.floor_value != row.target)
      throw WitnessFailure("floor(alpha n^2) = " + row.floor_value.str() + " != 2^" + std::to_string(i), i);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace ntv
