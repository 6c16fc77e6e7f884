#include "ntv/theorem2.hpp"

#include <algorithm>
#include <stdexcept>

#include "ntv/parallel.hpp"

namespace ntv {

FloorExtrema interval_extrema_of_floor(const RatInterval& interval, const BigInt& s) {
  if (interval.empty()) throw std::invalid_argument("floor extrema over an empty interval");
  if (s < 1) throw std::invalid_argument("floor extrema need s >= 1");
  const BigRational scale(s);
  FloorExtrema out;
  out.min = rat_floor(interval.lo() * scale);
  const BigRational top = interval.hi() * scale;
  // hi is excluded, so an integral hi*s is never reached.
  out.max = top.is_integer() ? BigInt(top.num() - 1) : rat_floor(top);
  return out;
}

std::pair<BigRational, BigRational> extrema_attainers(const RatInterval& interval, const BigInt& s) {
  const FloorExtrema ext = interval_extrema_of_floor(interval, s);
  BigRational at_max(ext.max, s);
  if (at_max < interval.lo()) at_max = interval.lo();
  return {interval.lo(), at_max};
}

std::vector<std::uint64_t> SkipReport::failing_k() const {
  std::vector<std::uint64_t> out;
  for (const auto& row : rows)
    if (!row.pass) out.push_back(row.k);
  return out;
}

std::optional<std::pair<BigInt, BigInt>> SkipReport::global_bounds() const {
  if (rows.empty()) return std::nullopt;
  BigInt hi = rows.front().max_floor_next;
  BigInt lo = rows.front().min_floor_next2;
  for (const auto& row : rows) {
    hi = std::max(hi, row.max_floor_next);
    lo = std::min(lo, row.min_floor_next2);
  }
  return std::make_pair(hi, lo);
}

namespace {

std::string violation_message(const SkipReport& report) {
  std::string msg = "skip argument fails for gamma = " + report.gamma.to_string() + ", j = " +
                    std::to_string(report.j) + " at k =";
  for (const auto& row : report.rows) {
    if (row.pass) continue;
    msg += " " + std::to_string(row.k) + " (max " + row.max_floor_next.str() + ", min " + row.min_floor_next2.str() + ")";
    if (msg.size() > 400) {
      msg += " ...";
      break;
    }
  }
  return msg;
}

}  // namespace

SkipViolation::SkipViolation(SkipReport report) : CheckFailure(violation_message(report)), report_(std::move(report)) {}

SkipReport skip_rows(const BigRational& gamma, std::uint64_t j, std::uint64_t max_k, unsigned jobs,
                     const ResourceCaps& caps) {
  if (j < 1) throw std::invalid_argument("j must be >= 1");
  if (max_k < 3) throw std::invalid_argument("K must be >= 3");
  const auto terms = generate_terms(SeqSpec::floor_power(gamma), max_k + 2, caps);
  if (const auto bad = first_non_increase(terms); bad != 0)
    throw std::invalid_argument("floor(gamma^n) is not strictly increasing at n = " + std::to_string(bad));

  SkipReport report;
  report.gamma = gamma;
  report.j = j;
  report.max_k = max_k;
  const BigInt target = pow2(j);
  const BigInt upper = report.upper_target();
  const BigInt lower = report.lower_target();
  const RatInterval window = unit_window();

  auto rows = parallel_map<std::optional<SkipRow>>(max_k, jobs, [&](std::size_t i) -> std::optional<SkipRow> {
    const std::uint64_t k = i + 1;
    RatInterval alphas = interval_intersect(preimage_interval(target, terms[k - 1]), window);
    if (alphas.empty()) return std::nullopt;
    SkipRow row;
    row.k = k;
    row.max_floor_next = interval_extrema_of_floor(alphas, terms[k]).max;
    row.min_floor_next2 = interval_extrema_of_floor(alphas, terms[k + 1]).min;
    row.pass = row.max_floor_next <= upper && row.min_floor_next2 >= lower;
    row.interval = std::move(alphas);
    return row;
  });

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i])
      report.rows.push_back(std::move(*rows[i]));
    else
      report.skipped.push_back(i + 1);
  }
  report.overall = std::all_of(report.rows.begin(), report.rows.end(), [](const SkipRow& r) { return r.pass; });
  return report;
}

SkipReport verify_skip_all_alpha(const BigRational& gamma, std::uint64_t j, std::uint64_t max_k, unsigned jobs,
                                 const ResourceCaps& caps) {
  SkipReport report = skip_rows(gamma, j, max_k, jobs, caps);
  if (!report.overall) throw SkipViolation(std::move(report));
  return report;
}

SymbolicCheck symbolic_condition_check(const BigRational& gamma, std::uint64_t j) {
  if (gamma < BigRational(BigInt(3), BigInt(2)) || gamma >= BigRational(2))
    throw std::invalid_argument("gamma must lie in [3/2, 2), got " + gamma.to_string());
  if (j < 1) throw std::invalid_argument("j must be >= 1");
  SymbolicCheck out;
  out.gamma = gamma;
  out.j = j;
  const BigInt two_j = pow2(j);
  out.upper_lhs = BigRational(two_j + 2) * gamma;
  out.upper_rhs = 2 * two_j;
  out.lower_lhs = BigRational(two_j) * (gamma * gamma - BigRational(2));
  out.lower_rhs = 2;
  out.upper_ok = out.upper_lhs <= BigRational(out.upper_rhs);
  out.lower_ok = out.lower_lhs >= BigRational(out.lower_rhs);
  out.holds = out.upper_ok && out.lower_ok;
  out.upper_floor_bound = rat_ceil(out.upper_lhs) - 1;
  out.lower_floor_bound = rat_floor(BigRational(two_j) * gamma * gamma - BigRational(1));
  return out;
}

std::uint64_t gamma_exception_threshold(const BigRational& gamma) {
  for (std::uint64_t j = 1;; ++j)
    if (symbolic_condition_check(gamma, j).holds) return j;
}

std::uint64_t gamma_exception_search(const BigRational& gamma, std::uint64_t j_max) {
  for (std::uint64_t j = 1; j <= j_max; ++j)
    if (symbolic_condition_check(gamma, j).holds) return j;
  const std::uint64_t threshold = gamma_exception_threshold(gamma);
  throw NotFoundWithinBound("no j <= " + std::to_string(j_max) + " satisfies the skip conditions for gamma = " +
                                gamma.to_string() + "; the smallest such j is " + std::to_string(threshold),
                            j_max);
}

std::vector<ScanHit> counterexample_scan(const SeqSpec& spec, const BigInt& t1, const BigInt& t2,
                                         std::uint64_t n_max, const ResourceCaps& caps) {
  if (t1 == t2) throw std::invalid_argument("scan targets must differ");
  const auto terms = generate_terms(spec, n_max, caps);
  const RatInterval window = unit_window();
  const auto first = member_alpha_set(terms, t1, window);
  const auto second = member_alpha_set(terms, t2, window);
  std::vector<ScanHit> hits;
  for (const auto& a : first) {
    for (const auto& b : second) {
      RatInterval both = interval_intersect(a.alpha, b.alpha);
      if (!both.empty()) hits.push_back({a.index, b.index, std::move(both)});
    }
  }
  return hits;
}

}  // namespace ntv
