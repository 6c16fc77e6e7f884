#include "ntv/floorseq.hpp"

#include <stdexcept>

namespace ntv {

SeqSpec SeqSpec::floor_power(BigRational gamma) {
  if (gamma <= BigRational(1)) throw std::invalid_argument("floor-power base must exceed 1, got " + gamma.to_string());
  SeqSpec spec;
  spec.kind_ = Kind::FloorPower;
  spec.gamma_ = std::move(gamma);
  return spec;
}

SeqSpec SeqSpec::squares() {
  SeqSpec spec;
  spec.kind_ = Kind::Squares;
  return spec;
}

SeqSpec SeqSpec::explicit_terms(std::vector<BigInt> terms) {
  if (terms.empty()) throw std::invalid_argument("explicit sequence is empty");
  if (terms.front() < 1) throw std::invalid_argument("explicit sequence terms must be positive");
  if (const auto bad = first_non_increase(terms); bad != 0)
    throw std::invalid_argument("explicit sequence is not strictly increasing at index " + std::to_string(bad));
  SeqSpec spec;
  spec.kind_ = Kind::Explicit;
  spec.terms_ = std::move(terms);
  return spec;
}

std::string SeqSpec::describe() const {
  switch (kind_) {
    case Kind::FloorPower: return "pow(" + gamma_.to_string() + ")";
    case Kind::Squares: return "squares";
    case Kind::Explicit: return "explicit[" + std::to_string(terms_.size()) + "]";
  }
  return "?";
}

std::uint64_t first_non_increase(const std::vector<BigInt>& terms) {
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i] <= terms[i - 1]) return i + 1;
  return 0;
}

std::vector<BigInt> generate_terms(const SeqSpec& spec, std::uint64_t n_max, const ResourceCaps& caps) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  check_cap("sequence terms", n_max, caps.seq_terms);
  std::vector<BigInt> out;
  out.reserve(n_max);
  switch (spec.kind()) {
    case SeqSpec::Kind::FloorPower: {
      BigRational power(1);
      for (std::uint64_t n = 1; n <= n_max; ++n) {
        power = power * spec.gamma();
        out.push_back(rat_floor(power));
      }
      break;
    }
    case SeqSpec::Kind::Squares:
      for (std::uint64_t n = 1; n <= n_max; ++n) out.push_back(BigInt(n) * n);
      break;
    case SeqSpec::Kind::Explicit:
      if (spec.terms().size() < n_max)
        throw std::invalid_argument("explicit sequence has " + std::to_string(spec.terms().size()) +
                                    " terms, " + std::to_string(n_max) + " requested");
      out.assign(spec.terms().begin(), spec.terms().begin() + static_cast<std::ptrdiff_t>(n_max));
      break;
  }
  return out;
}

std::vector<BigInt> s_alpha(const SeqSpec& spec, const BigRational& alpha, std::uint64_t n_max,
                            const ResourceCaps& caps) {
  if (alpha.sign() <= 0) throw std::invalid_argument("alpha must be positive, got " + alpha.to_string());
  std::vector<BigInt> out;
  for (const BigInt& s : generate_terms(spec, n_max, caps)) out.push_back(rat_floor(alpha * BigRational(s)));
  return out;
}

RatInterval preimage_interval(const BigInt& t, const BigInt& s) {
  if (s < 1) throw std::invalid_argument("preimage_interval requires s >= 1");
  if (t.sign() < 0) throw std::invalid_argument("preimage_interval requires t >= 0");
  return RatInterval(BigRational(t, s), BigRational(t + 1, s));
}

RatInterval unit_window() { return RatInterval(BigRational(0), BigRational(1)); }

std::vector<IndexedInterval> member_alpha_set(const std::vector<BigInt>& terms, const BigInt& t,
                                              const RatInterval& window) {
  if (t < 1) throw std::invalid_argument("target t must be positive");
  std::vector<IndexedInterval> out;
  if (window.empty()) return out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    RatInterval hit = interval_intersect(preimage_interval(t, terms[i]), window);
    if (!hit.empty()) out.push_back({i + 1, std::move(hit)});
  }
  return out;
}

std::vector<IndexedInterval> member_alpha_set(const SeqSpec& spec, const BigInt& t, std::uint64_t n_max,
                                              const RatInterval& window, const ResourceCaps& caps) {
  if (window.lo().sign() < 0) throw std::invalid_argument("window must lie in (0, inf)");
  return member_alpha_set(generate_terms(spec, n_max, caps), t, window);
}

RatioReport ratio_condition_check(const SeqSpec& spec, std::uint64_t n_max, const ResourceCaps& caps) {
  if (n_max < 2) throw std::invalid_argument("ratio check needs n_max >= 2");
  const auto terms = generate_terms(spec, n_max, caps);
  RatioReport report;
  report.n_max = n_max;
  for (std::uint64_t n = 1; n < n_max; ++n) {
    const BigInt& cur = terms[n - 1];
    const BigInt& next = terms[n];
    if (!(cur < next && next <= 2 * cur)) report.violations.push_back(n);
  }
  report.holds_from = report.violations.empty() ? 1 : report.violations.back() + 1;
  return report;
}

}  // namespace ntv
