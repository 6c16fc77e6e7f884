#include "ntv/json_io.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace ntv {

namespace {

std::uint64_t u64_field(const Json& j, const char* key) {
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  const BigInt v = big_from_json(j.at(key));
  if (v.sign() < 0 || v > std::numeric_limits<std::uint64_t>::max())
    throw std::invalid_argument(std::string("field '") + key + "' out of range");
  return static_cast<std::uint64_t>(v);
}

}  // namespace

Json to_json(const BigInt& v) {
  if (v.sign() >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return Json(static_cast<std::uint64_t>(v));
  if (v.sign() < 0 && v >= std::numeric_limits<std::int64_t>::min()) return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

BigInt big_from_json(const Json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const BigRational q = BigRational::parse(j.get<std::string>());
    if (!q.is_integer()) throw std::invalid_argument("expected an integer, got " + j.get<std::string>());
    return q.num();
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

Json to_json(const BigRational& q) { return q.to_string(); }

BigRational rational_from_json(const Json& j) {
  if (j.is_string()) return BigRational::parse(j.get<std::string>());
  if (j.is_number_integer()) return BigRational(big_from_json(j));
  throw std::invalid_argument("expected a rational \"num/den\", got " + j.dump());
}

Json to_json(const RatInterval& interval) {
  return Json{{"lo", to_json(interval.lo())}, {"hi", to_json(interval.hi())}, {"closed_open", true}};
}

RatInterval interval_from_json(const Json& j) {
  if (j.contains("closed_open") && !j.at("closed_open").get<bool>())
    throw std::invalid_argument("only half-open intervals are supported");
  return RatInterval(rational_from_json(j.at("lo")), rational_from_json(j.at("hi")));
}

Json to_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& pp : f.factors) factors.push_back(Json::array({to_json(pp.prime), pp.exponent}));
  return Json{{"n", to_json(f.n)}, {"factors", std::move(factors)}};
}

Json to_json(const RFullCertificate& cert) {
  Json witness = Json::object();
  if (const auto* w2 = std::get_if<CaseIIWitness>(&cert.witness)) {
    witness["p"] = w2->p;
  } else if (const auto* w3 = std::get_if<CaseIIIWitness>(&cert.witness)) {
    witness["q"] = w3->q;
    witness["s"] = w3->s;
    witness["q_star"] = w3->q_star;
  }
  return Json{{"r", cert.r},
              {"ell", cert.ell},
              {"case", to_string(cert.proof_case)},
              {"k", to_json(cert.k)},
              {"witness", std::move(witness)}};
}

RFullCertificate certificate_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("certificate must be a JSON object");
  RFullCertificate cert;
  const std::uint64_t r = u64_field(j, "r");
  if (r > std::numeric_limits<unsigned>::max()) throw std::invalid_argument("field 'r' out of range");
  cert.r = static_cast<unsigned>(r);
  cert.ell = u64_field(j, "ell");
  if (!j.contains("case") || !j.at("case").is_string()) throw std::invalid_argument("missing string field 'case'");
  cert.proof_case = parse_proof_case(j.at("case").get<std::string>());
  if (!j.contains("k")) throw std::invalid_argument("missing field 'k'");
  cert.k = big_from_json(j.at("k"));
  const Json witness = j.value("witness", Json::object());
  switch (cert.proof_case) {
    case ProofCase::I: cert.witness = CaseIWitness{}; break;
    case ProofCase::II: cert.witness = CaseIIWitness{u64_field(witness, "p")}; break;
    case ProofCase::III:
      cert.witness = CaseIIIWitness{u64_field(witness, "q"), u64_field(witness, "s"), u64_field(witness, "q_star")};
      break;
  }
  return cert;
}

Json to_json(const CertificateCheck& check) {
  Json out{{"valid", check.ok}};
  if (!check.ok) {
    out["reason"] = check.code;
    out["message"] = check.message;
  }
  return out;
}

Json to_json(const NonRFullReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    Json line{{"m", row.m},
              {"value", row.value.str()},
              {"witness", to_json(row.witness)},
              {"value_mod_w", to_json(row.residue_w)},
              {"value_mod_w2", to_json(row.residue_w2)}};
    if (row.factorization) line["factorization"] = row.factorization->to_string();
    rows.push_back(std::move(line));
  }
  return Json{{"certificate", to_json(report.cert)},
              {"max_m", report.max_m},
              {"passed", true},
              {"factorization_checked", report.factor_checked},
              {"rows", std::move(rows)}};
}

Json to_json(const GridCell& cell) {
  Json out{{"r", cell.r}, {"ell", cell.ell}};
  if (cell.valid) out["certificate"] = to_json(cell.cert);
  out["valid"] = cell.valid;
  out["verified"] = cell.verified;
  out["factorization_checked"] = cell.factor_checked;
  if (!cell.error.empty()) out["error"] = cell.error;
  return out;
}

Json to_json(const SkipReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back(Json{{"k", row.k},
                        {"interval", to_json(row.interval)},
                        {"max_floor_next", to_json(row.max_floor_next)},
                        {"min_floor_next2", to_json(row.min_floor_next2)},
                        {"pass", row.pass}});
  }
  Json out{{"gamma", to_json(report.gamma)},
           {"j", report.j},
           {"K", report.max_k},
           {"target", to_json(pow2(report.j))},
           {"skipped_target", to_json(pow2(report.j + 1))},
           {"max_allowed_next", to_json(report.upper_target())},
           {"min_required_next2", to_json(report.lower_target())}};
  if (const auto bounds = report.global_bounds()) {
    out["largest_max_floor_next"] = to_json(bounds->first);
    out["smallest_min_floor_next2"] = to_json(bounds->second);
  }
  out["skipped_k"] = report.skipped;
  out["failing_k"] = report.failing_k();
  out["overall"] = report.overall;
  out["rows"] = std::move(rows);
  return out;
}

Json to_json(const SymbolicCheck& check) {
  return Json{{"gamma", to_json(check.gamma)},
              {"j", check.j},
              {"upper", Json{{"lhs", to_json(check.upper_lhs)},
                             {"rhs", to_json(check.upper_rhs)},
                             {"relation", "lhs <= rhs"},
                             {"holds", check.upper_ok}}},
              {"lower", Json{{"lhs", to_json(check.lower_lhs)},
                             {"rhs", to_json(check.lower_rhs)},
                             {"relation", "lhs >= rhs"},
                             {"holds", check.lower_ok}}},
              {"upper_floor_bound", to_json(check.upper_floor_bound)},
              {"lower_floor_bound", to_json(check.lower_floor_bound)},
              {"holds", check.holds}};
}

Json to_json(const ScanHit& hit) {
  return Json{{"index_t1", hit.index1}, {"index_t2", hit.index2}, {"alpha", to_json(hit.alpha)}};
}

Json to_json(const IndexedInterval& hit) { return Json{{"index", hit.index}, {"alpha", to_json(hit.alpha)}}; }

Json to_json(const RatioReport& report) {
  return Json{{"n_max", report.n_max}, {"violations", report.violations}, {"holds_from", report.holds_from}};
}

Json to_json(const SeriesDigits& series) {
  return Json{{"base", series.base},
              {"integer_part", to_json(series.integer_part)},
              {"digits", series.digits},
              {"partial_sum", to_json(series.partial_sum)}};
}

Json to_json(const SquaresWitnessReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back(Json{{"i", row.i},
                        {"target", to_json(row.target)},
                        {"n", to_json(row.n)},
                        {"n_squared", to_json(row.n_squared)},
                        {"floor_alpha_n2", to_json(row.floor_value)},
                        {"window", Json::array({to_json(row.window_lo), to_json(row.window_hi)})},
                        {"gap_check", Json{{"lhs", to_json(row.gap_lhs)},
                                           {"rhs", to_json(row.gap_rhs)},
                                           {"relation", "(inv - 2^(i+1) - 1)^2 > 4*2^i*(2^i+1)"},
                                           {"holds", row.gap_ok}}}});
  }
  return Json{{"m", report.m},
              {"alpha", to_json(report.alpha)},
              {"alpha_inverse", to_json(report.alpha_inverse)},
              {"passed", true},
              {"rows", std::move(rows)}};
}

Json pset_rle_json(const PSetBitmap& bitmap) {
  Json runs = Json::array();
  for (const auto& [start, length] : bitmap.runs()) runs.push_back(Json::array({start, length}));
  return Json{{"bound", bitmap.bound()}, {"count", bitmap.count()}, {"runs", std::move(runs)}};
}

PSetBitmap pset_from_rle_json(const Json& j, const ResourceCaps& caps) {
  const std::uint64_t bound = u64_field(j, "bound");
  check_cap("bitmap", bound + 1, caps.bitmap);
  // Decoded through the raw codec so both formats share one validation path.
  std::vector<std::uint8_t> bytes((bound + 1 + 7) / 8, 0);
  for (const auto& run : j.at("runs")) {
    const std::uint64_t start = run.at(0).get<std::uint64_t>();
    const std::uint64_t length = run.at(1).get<std::uint64_t>();
    if (length == 0 || start > bound || length > bound - start + 1)
      throw std::invalid_argument("run out of range");
    for (std::uint64_t n = start; n < start + length; ++n) bytes[n / 8] |= static_cast<std::uint8_t>(1U << (n % 8));
  }
  std::string raw;
  const std::uint64_t bits = bound + 1;
  for (int b = 0; b < 8; ++b) raw.push_back(static_cast<char>((bits >> (8 * b)) & 0xFF));
  raw.append(bytes.begin(), bytes.end());
  std::istringstream in(raw);
  return PSetBitmap::read_raw(in, caps);
}

}  // namespace ntv
