#include "ntv/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ntv/classify.hpp"
#include "ntv/floorseq.hpp"
#include "ntv/json_io.hpp"
#include "ntv/pset.hpp"
#include "ntv/theorem1.hpp"
#include "ntv/theorem2.hpp"

namespace ntv {

namespace {

enum class Format { Table, Json, Csv };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Format format = Format::Json;
  unsigned jobs = 1;
  std::uint64_t seed = kDefaultFactorSeed;
  ResourceCaps caps;

  std::string command;

  // classify / sieve / series
  std::string n_text;
  unsigned r = 2;
  std::uint64_t limit = 0;
  std::string method = "sieve";
  std::string source = "rfree";
  unsigned ell = 2;
  std::uint64_t terms = 10;
  std::uint64_t digits = 32;

  // theorem1
  std::uint64_t ell_u64 = 2;
  std::uint64_t s_max = kDefaultSMax;
  std::uint64_t max_m = kDefaultMaxM;
  std::string cert_path;
  unsigned r_min = 2, r_max = 5;
  std::uint64_t ell_min = 2, ell_max = 50;

  // seq
  std::string kind = "pow32";
  std::string gamma_text = "3/2";
  std::string file;
  std::uint64_t n = 10;
  std::string alpha_text;
  std::string t_text;
  std::string s_text;

  // thm2
  std::uint64_t j = 3;
  std::uint64_t big_k = kDefaultSkipK;
  std::uint64_t j_max = kDefaultJMax;
  std::string t1_text, t2_text;

  // pset
  std::string terms_path;
  std::string values;
  std::uint64_t bound = 0;
  std::string export_kind = "rle";
  std::string out_path;
  std::uint64_t m = 0;
};

Json defaults_json() {
  return Json{{"K", kDefaultSkipK}, {"M", kDefaultMaxM}, {"s_max", kDefaultSMax}, {"j_max", kDefaultJMax}};
}

Json caps_json(const ResourceCaps& caps) {
  return Json{{"sieve", caps.sieve}, {"bitmap", caps.bitmap}, {"seq_terms", caps.seq_terms}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Integers separated by whitespace or commas; '#' starts a comment.
std::vector<BigInt> parse_integer_list(const std::string& text) {
  std::vector<BigInt> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      const BigRational q = BigRational::parse(token);
      if (!q.is_integer()) throw UsageError("expected an integer, got '" + token + "'");
      out.push_back(q.num());
    }
  }
  return out;
}

std::vector<std::uint64_t> to_u64_list(const std::vector<BigInt>& values) {
  std::vector<std::uint64_t> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    if (v.sign() < 0 || v > std::numeric_limits<std::uint64_t>::max())
      throw UsageError("term out of range: " + v.str());
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

BigRational parse_rational_flag(const std::string& name, const std::string& text) {
  if (text.empty()) throw UsageError("--" + name + " is required");
  try {
    return BigRational::parse(text);
  } catch (const std::exception& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

BigInt parse_integer_flag(const std::string& name, const std::string& text) {
  const BigRational q = parse_rational_flag(name, text);
  if (!q.is_integer()) throw UsageError("--" + name + " must be an integer");
  return q.num();
}

SeqSpec seq_from_config(const RunConfig& cfg) {
  if (cfg.kind == "pow32") return SeqSpec::floor_power(BigRational(BigInt(3), BigInt(2)));
  if (cfg.kind == "pow") return SeqSpec::floor_power(parse_rational_flag("gamma", cfg.gamma_text));
  if (cfg.kind == "squares") return SeqSpec::squares();
  if (cfg.kind == "file") {
    if (cfg.file.empty()) throw UsageError("--kind file needs --file");
    return SeqSpec::explicit_terms(parse_integer_list(read_file(cfg.file)));
  }
  throw UsageError("unknown --kind '" + cfg.kind + "'");
}

std::vector<std::uint64_t> pset_terms(const RunConfig& cfg) {
  if (!cfg.terms_path.empty() && !cfg.values.empty()) throw UsageError("give either --terms or --values, not both");
  if (!cfg.terms_path.empty()) return to_u64_list(parse_integer_list(read_file(cfg.terms_path)));
  if (!cfg.values.empty()) return to_u64_list(parse_integer_list(cfg.values));
  throw UsageError("--terms FILE or --values LIST is required");
}

// Output plumbing: JSON is canonical, tables are rendered from the same data.
class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  void json(const Json& result) const {
    Json doc{{"command", cfg_.command},
             {"defaults", defaults_json()},
             {"caps", caps_json(cfg_.caps)},
             {"seed", cfg_.seed},
             {"result", result}};
    out_ << doc.dump(2) << '\n';
  }

  void table_header() const {
    out_ << "# ntv " << cfg_.command << '\n';
    out_ << "# defaults: K=" << kDefaultSkipK << " M=" << kDefaultMaxM << " s_max=" << kDefaultSMax
         << " j_max=" << kDefaultJMax << " seed=" << cfg_.seed << '\n';
  }

  void integers(const std::vector<BigInt>& values) const {
    if (cfg_.format == Format::Csv) {
      for (const auto& v : values) out_ << v.str() << '\n';
      return;
    }
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(to_json(v));
    if (cfg_.format == Format::Json) {
      json(arr);
      return;
    }
    table_header();
    for (std::size_t i = 0; i < values.size(); ++i) out_ << std::setw(6) << i + 1 << "  " << values[i].str() << '\n';
  }

  // Non-list results: JSON or a table; CSV is reserved for integer lists.
  void report(const Json& result, const std::function<void(std::ostream&)>& table) const {
    if (cfg_.format == Format::Csv) throw UsageError("--format csv is only available for integer lists");
    if (cfg_.format == Format::Json) {
      json(result);
      return;
    }
    table_header();
    table(out_);
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
};

template <class T>
std::vector<BigInt> widen(const std::vector<T>& values) {
  return std::vector<BigInt>(values.begin(), values.end());
}

std::string approx(const BigRational& q) { return q.to_decimal(6) + "..."; }

// ---------------------------------------------------------------------------

int cmd_classify(const RunConfig& cfg, const Emitter& emit) {
  const BigInt n = parse_integer_flag("n", cfg.n_text);
  if (n < 1) throw UsageError("--n must be >= 1");
  if (cfg.r < 2) throw UsageError("--r must be >= 2");
  const Factorization f = factorize(n, cfg.seed);
  const bool prime = is_prime(n);
  Json result{{"n", to_json(n)},
              {"factorization", to_json(f)},
              {"is_prime", prime},
              {"r", cfg.r},
              {"r_free", is_r_free(f, cfg.r)},
              {"r_full", is_r_full(f, cfg.r)}};
  emit.report(result, [&](std::ostream& os) {
    os << "n = " << n.str() << " = " << f.to_string() << '\n'
       << "prime: " << (prime ? "yes" : "no") << '\n'
       << cfg.r << "-free: " << (is_r_free(f, cfg.r) ? "yes" : "no") << '\n'
       << cfg.r << "-full: " << (is_r_full(f, cfg.r) ? "yes" : "no") << '\n';
  });
  return kExitOk;
}

int cmd_sieve(const RunConfig& cfg, const Emitter& emit) {
  if (cfg.limit < 1) throw UsageError("--limit must be >= 1");
  if (cfg.method == "sieve") {
    emit.integers(widen(r_full_up_to(cfg.limit, cfg.r, cfg.caps)));
  } else if (cfg.method == "a2b3") {
    if (cfg.r != 2) throw UsageError("--method a2b3 only enumerates square-full (r = 2) integers");
    emit.integers(widen(squarefull_via_a2b3(cfg.limit, cfg.caps)));
  } else if (cfg.method == "rfree") {
    emit.integers(widen(r_free_up_to(cfg.limit, cfg.r, cfg.caps)));
  } else {
    throw UsageError("unknown --method '" + cfg.method + "'");
  }
  return kExitOk;
}

int cmd_series(const RunConfig& cfg, const Emitter& emit) {
  if (cfg.terms < 1) throw UsageError("--terms must be >= 1");
  check_cap("sequence terms", cfg.terms, cfg.caps.seq_terms);
  std::vector<std::uint64_t> terms;
  if (cfg.source == "rfree") {
    terms = first_filtered_terms(TermFilter::RFree, cfg.r, cfg.terms);
  } else if (cfg.source == "rfull") {
    terms = first_filtered_terms(TermFilter::RFull, cfg.r, cfg.terms);
  } else {
    RunConfig seq_cfg = cfg;
    seq_cfg.kind = cfg.source;
    terms = to_u64_list(generate_terms(seq_from_config(seq_cfg), cfg.terms, cfg.caps));
  }
  const SeriesDigits series = series_digits(terms, cfg.ell, cfg.digits);
  emit.report(to_json(series), [&](std::ostream& os) {
    os << "base " << series.base << ", " << terms.size() << " terms\n"
       << "partial sum = " << series.partial_sum.to_string() << '\n'
       << "expansion   = " << series.integer_part.str() << "." << series.digits << " (base " << series.base << ")\n";
  });
  return kExitOk;
}

RFullCertificate load_certificate(const std::string& path) {
  if (path.empty()) throw UsageError("--cert FILE is required");
  Json doc;
  try {
    doc = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw UsageError("certificate file is not JSON: " + std::string(e.what()));
  }
  // Accept either a bare certificate or a full `theorem1 construct` report.
  if (doc.is_object() && doc.contains("result")) doc = doc.at("result");
  return certificate_from_json(doc);
}

void print_certificate(std::ostream& os, const RFullCertificate& cert) {
  os << "r = " << cert.r << ", ell = " << cert.ell << ", case " << to_string(cert.proof_case) << ", k = " << cert.k.str();
  if (const auto* w = std::get_if<CaseIIWitness>(&cert.witness)) os << ", p = " << w->p;
  if (const auto* w = std::get_if<CaseIIIWitness>(&cert.witness))
    os << ", q = " << w->q << ", s = " << w->s << ", q* = " << w->q_star;
  os << '\n';
}

int cmd_theorem1_construct(const RunConfig& cfg, const Emitter& emit) {
  const RFullCertificate cert = construct_k(cfg.r, cfg.ell_u64, cfg.s_max);
  emit.report(to_json(cert), [&](std::ostream& os) { print_certificate(os, cert); });
  return kExitOk;
}

int cmd_theorem1_validate(const RunConfig& cfg, const Emitter& emit) {
  const RFullCertificate cert = load_certificate(cfg.cert_path);
  const CertificateCheck check = validate_certificate(cert);
  emit.report(to_json(check), [&](std::ostream& os) {
    print_certificate(os, cert);
    os << (check.ok ? "valid" : "invalid: " + check.code + " (" + check.message + ")") << '\n';
  });
  return check.ok ? kExitOk : kExitCheckFailed;
}

int cmd_theorem1_verify(const RunConfig& cfg, const Emitter& emit, std::ostream& err) {
  const RFullCertificate cert = load_certificate(cfg.cert_path);
  if (const CertificateCheck check = validate_certificate(cert); !check) {
    err << "invalid certificate: " << check.code << " (" << check.message << ")\n";
    return kExitCheckFailed;
  }
  const NonRFullReport report = verify_non_rfull(cert, cfg.max_m);
  emit.report(to_json(report), [&](std::ostream& os) {
    print_certificate(os, cert);
    os << std::setw(4) << "m" << std::setw(8) << "w" << "  v mod w^2        factorization\n";
    for (const auto& row : report.rows) {
      os << std::setw(4) << row.m << std::setw(8) << row.witness.str() << "  " << std::setw(16) << std::left
         << row.residue_w2.str() << std::right << ' ' << (row.factorization ? row.factorization->to_string() : "-")
         << '\n';
    }
    os << "not r-full for m = 1.." << report.max_m << " (" << report.factor_checked << " factorization cross-checks)\n";
  });
  return kExitOk;
}

int cmd_theorem1_grid(const RunConfig& cfg, const Emitter& emit) {
  GridSpec spec;
  spec.r_min = cfg.r_min;
  spec.r_max = cfg.r_max;
  spec.ell_min = cfg.ell_min;
  spec.ell_max = cfg.ell_max;
  spec.max_m = cfg.max_m;
  spec.s_max = cfg.s_max;
  const auto cells = verify_grid(spec, cfg.jobs);
  const bool all_ok = std::all_of(cells.begin(), cells.end(), [](const GridCell& c) { return c.verified; });
  Json rows = Json::array();
  for (const auto& cell : cells) rows.push_back(to_json(cell));
  Json result{{"r_min", spec.r_min}, {"r_max", spec.r_max}, {"ell_min", spec.ell_min}, {"ell_max", spec.ell_max},
              {"max_m", spec.max_m},  {"all_verified", all_ok}, {"cells", std::move(rows)}};
  emit.report(result, [&](std::ostream& os) {
    os << std::setw(3) << "r" << std::setw(6) << "ell" << std::setw(6) << "case" << std::setw(12) << "k"
       << "  status\n";
    for (const auto& c : cells) {
      os << std::setw(3) << c.r << std::setw(6) << c.ell << std::setw(6) << (c.valid ? to_string(c.cert.proof_case) : "-")
         << std::setw(12) << (c.valid ? c.cert.k.str() : "-") << "  " << (c.verified ? "ok" : "FAIL " + c.error) << '\n';
    }
    os << (all_ok ? "all cells verified" : "some cells FAILED") << '\n';
  });
  return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_seq_gen(const RunConfig& cfg, const Emitter& emit) {
  emit.integers(generate_terms(seq_from_config(cfg), cfg.n, cfg.caps));
  return kExitOk;
}

int cmd_seq_salpha(const RunConfig& cfg, const Emitter& emit) {
  const BigRational alpha = parse_rational_flag("alpha", cfg.alpha_text);
  emit.integers(s_alpha(seq_from_config(cfg), alpha, cfg.n, cfg.caps));
  return kExitOk;
}

int cmd_seq_preimage(const RunConfig& cfg, const Emitter& emit) {
  const RatInterval interval = preimage_interval(parse_integer_flag("t", cfg.t_text), parse_integer_flag("s", cfg.s_text));
  emit.report(to_json(interval), [&](std::ostream& os) {
    os << "[" << interval.lo().to_string() << ", " << interval.hi().to_string() << ")  ~ [" << approx(interval.lo())
       << ", " << approx(interval.hi()) << ")\n";
  });
  return kExitOk;
}

int cmd_seq_ratio(const RunConfig& cfg, const Emitter& emit) {
  const RatioReport report = ratio_condition_check(seq_from_config(cfg), cfg.n, cfg.caps);
  emit.report(to_json(report), [&](std::ostream& os) {
    os << "s_n < s_(n+1) <= 2 s_n checked for n = 1.." << report.n_max - 1 << '\n';
    os << "violations:";
    if (report.violations.empty()) os << " none";
    for (auto v : report.violations) os << ' ' << v;
    os << "\nholds from n = " << report.holds_from << '\n';
  });
  return kExitOk;
}

void print_skip_table(std::ostream& os, const SkipReport& report) {
  os << "gamma = " << report.gamma.to_string() << ", target 2^" << report.j << " = " << pow2(report.j).str()
     << ", skipped value 2^" << report.j + 1 << " = " << pow2(report.j + 1).str() << ", K = " << report.max_k << '\n';
  for (auto k : report.skipped) os << "k = " << k << " skipped: I_k ∩ (0,1) is empty\n";
  os << std::setw(5) << "k" << "  " << std::setw(28) << std::left << "I_k" << std::right << std::setw(10) << "max(k+1)"
     << std::setw(10) << "min(k+2)" << "  pass\n";
  for (const auto& row : report.rows) {
    std::string interval = "[" + row.interval.lo().to_string() + ", " + row.interval.hi().to_string() + ")";
    if (interval.size() > 28) interval = "[~" + row.interval.lo().to_decimal(8) + ", ...)";
    os << std::setw(5) << row.k << "  " << std::setw(28) << std::left << interval << std::right << std::setw(10)
       << row.max_floor_next.str() << std::setw(10) << row.min_floor_next2.str() << "  " << (row.pass ? "yes" : "NO")
       << '\n';
  }
  if (const auto bounds = report.global_bounds())
    os << "over all rows: max at k+1 <= " << bounds->first.str() << " (need <= " << report.upper_target().str()
       << "), min at k+2 >= " << bounds->second.str() << " (need >= " << report.lower_target().str() << ")\n";
  os << (report.overall ? "PASS" : "FAIL") << '\n';
}

int cmd_thm2_verify(const RunConfig& cfg, const Emitter& emit, std::ostream& err) {
  const BigRational gamma = parse_rational_flag("gamma", cfg.gamma_text);
  SkipReport report = skip_rows(gamma, cfg.j, cfg.big_k, cfg.jobs, cfg.caps);
  emit.report(to_json(report), [&](std::ostream& os) { print_skip_table(os, report); });
  if (!report.overall) {
    err << SkipViolation(std::move(report)).what() << '\n';
    return kExitCheckFailed;
  }
  return kExitOk;
}

int cmd_thm2_symbolic(const RunConfig& cfg, const Emitter& emit) {
  const SymbolicCheck check = symbolic_condition_check(parse_rational_flag("gamma", cfg.gamma_text), cfg.j);
  Json result = to_json(check);
  result["note"] = "k-free sufficient conditions; true covers every witness index k";
  emit.report(result, [&](std::ostream& os) {
    os << "upper: (2^j + 2) gamma = " << check.upper_lhs.to_string() << " <= " << check.upper_rhs.str() << " : "
       << (check.upper_ok ? "yes" : "no") << '\n'
       << "lower: 2^j (gamma^2 - 2) = " << check.lower_lhs.to_string() << " >= " << check.lower_rhs.str() << " : "
       << (check.lower_ok ? "yes" : "no") << '\n'
       << "floor bounds: next <= " << check.upper_floor_bound.str() << ", next-but-one >= "
       << check.lower_floor_bound.str() << '\n'
       << (check.holds ? "holds for every k" : "does not hold") << '\n';
  });
  return kExitOk;
}

int cmd_thm2_gamma_search(const RunConfig& cfg, const Emitter& emit) {
  const BigRational gamma = parse_rational_flag("gamma", cfg.gamma_text);
  const std::uint64_t j = gamma_exception_search(gamma, cfg.j_max);
  const SymbolicCheck check = symbolic_condition_check(gamma, j);
  Json result{{"gamma", to_json(gamma)},
              {"j", j},
              {"exceptions", Json::array({to_json(pow2(j)), to_json(pow2(j + 1))})},
              {"rule", "smallest j passing the k-free skip conditions"},
              {"symbolic", to_json(check)}};
  emit.report(result, [&](std::ostream& os) {
    os << "gamma = " << gamma.to_string() << ": j = " << j << ", exceptions 2^" << j << " = " << pow2(j).str()
       << " and 2^" << j + 1 << " = " << pow2(j + 1).str() << '\n'
       << "(smallest j passing the k-free skip conditions)\n";
  });
  return kExitOk;
}

int cmd_thm2_scan(const RunConfig& cfg, const Emitter& emit) {
  const BigInt t1 = parse_integer_flag("t1", cfg.t1_text);
  const BigInt t2 = parse_integer_flag("t2", cfg.t2_text);
  const auto hits = counterexample_scan(seq_from_config(cfg), t1, t2, cfg.n, cfg.caps);
  Json rows = Json::array();
  for (const auto& h : hits) rows.push_back(to_json(h));
  Json result{{"sequence", seq_from_config(cfg).describe()},
              {"t1", to_json(t1)},
              {"t2", to_json(t2)},
              {"n", cfg.n},
              {"count", hits.size()},
              {"intervals", std::move(rows)}};
  emit.report(result, [&](std::ostream& os) {
    os << hits.size() << " alpha-interval(s) in (0,1) with both " << cfg.t1_text << " and " << cfg.t2_text
       << " in S_alpha (witness indices <= " << cfg.n << ")\n";
    for (const auto& h : hits)
      os << "  n1 = " << h.index1 << ", n2 = " << h.index2 << ": [" << h.alpha.lo().to_string() << ", "
         << h.alpha.hi().to_string() << ")\n";
  });
  return kExitOk;
}

int cmd_pset_compute(const RunConfig& cfg, const Emitter& emit) {
  if (cfg.bound < 1) throw UsageError("--bound must be >= 1");
  if (cfg.export_kind != "rle" && cfg.export_kind != "raw") throw UsageError("unknown --export '" + cfg.export_kind + "'");
  const PSetBitmap bitmap = compute_pset(pset_terms(cfg), cfg.bound, cfg.caps);
  if (!cfg.out_path.empty()) {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw UsageError("cannot write '" + cfg.out_path + "'");
    if (cfg.export_kind == "raw")
      bitmap.write_raw(file);
    else
      file << pset_rle_json(bitmap).dump() << '\n';
  } else if (cfg.export_kind == "raw") {
    throw UsageError("--export raw needs --out FILE");
  }
  if (cfg.format == Format::Csv) {
    emit.integers(widen(bitmap.members()));
    return kExitOk;
  }
  emit.report(pset_rle_json(bitmap), [&](std::ostream& os) {
    os << "|P(A) ∩ [0, " << bitmap.bound() << "]| = " << bitmap.count() << '\n';
    for (const auto& [start, length] : bitmap.runs()) {
      if (length == 1)
        os << "  " << start << '\n';
      else
        os << "  " << start << ".." << start + length - 1 << '\n';
    }
  });
  return kExitOk;
}

int cmd_pset_complete(const RunConfig& cfg, const Emitter& emit) {
  if (cfg.bound < 1) throw UsageError("--bound must be >= 1");
  const auto threshold = complete_up_to(pset_terms(cfg), cfg.bound, cfg.caps);
  Json result{{"bound", cfg.bound},
              {"threshold", threshold ? Json(*threshold) : Json(nullptr)},
              {"note", "bounded heuristic: every integer in [threshold, bound] is in P(A); not a completeness proof"}};
  emit.report(result, [&](std::ostream& os) {
    if (threshold)
      os << "[" << *threshold << ", " << cfg.bound << "] ⊆ P(A)\n";
    else
      os << cfg.bound << " ∉ P(A): no threshold\n";
    os << "(bounded heuristic, not a completeness proof)\n";
  });
  return kExitOk;
}

int cmd_pset_brown(const RunConfig& cfg, const Emitter& emit) {
  auto terms = pset_terms(cfg);
  const bool holds = brown_criterion(terms);
  Json result{{"terms", terms.size()}, {"criterion", holds}};
  emit.report(result, [&](std::ostream& os) {
    os << "a_1 = 1 and a_(n+1) <= 1 + a_1 + ... + a_n: " << (holds ? "holds" : "fails") << '\n';
  });
  return kExitOk;
}

int cmd_pset_witness(const RunConfig& cfg, const Emitter& emit) {
  const SquaresWitnessReport report = verify_squares_witness(cfg.m);
  emit.report(to_json(report), [&](std::ostream& os) {
    os << "alpha = " << report.alpha.to_string() << " (alpha^-1 = " << report.alpha_inverse.str() << ")\n";
    os << std::setw(4) << "i" << std::setw(12) << "2^i" << std::setw(12) << "n_i" << std::setw(14) << "floor(a n^2)"
       << "  gap\n";
    for (const auto& row : report.rows)
      os << std::setw(4) << row.i << std::setw(12) << row.target.str() << std::setw(12) << row.n.str() << std::setw(14)
         << row.floor_value.str() << "  " << (row.gap_ok ? "ok" : "FAIL") << '\n';
    os << "{2^i : 0 <= i <= " << report.m << "} ⊆ S_alpha for the squares\n";
  });
  return kExitOk;
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "table") return Format::Table;
  if (text == "csv") return Format::Csv;
  throw UsageError("unknown --format '" + text + "'");
}

void add_seq_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--kind", cfg.kind, "pow32 | pow | squares | file")->capture_default_str();
  sub->add_option("--gamma", cfg.gamma_text, "base for --kind pow, e.g. 8/5")->capture_default_str();
  sub->add_option("--file", cfg.file, "integer list for --kind file");
}

void add_terms_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--terms", cfg.terms_path, "file of nonnegative integers (multiset)");
  sub->add_option("--values", cfg.values, "inline list, e.g. \"1,2,2,5\"");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  std::string format_text = "json";

  CLI::App app{"ntv: exact verification tools for r-full shifts, floor-scaled sequences and subset sums", "ntv"};
  app.require_subcommand(1);
  app.add_option("--format", format_text, "table | json | csv")->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "worker threads for grid and per-k scans")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for the rho factorization splitter")->capture_default_str();

  using Handler = std::function<int()>;
  std::vector<std::pair<CLI::App*, Handler>> handlers;
  Emitter emit(cfg, out);
  const auto leaf = [&](CLI::App* sub, std::string name, Handler h) {
    sub->callback([&cfg, name] { cfg.command = name; });
    handlers.emplace_back(sub, std::move(h));
  };

  auto* classify = app.add_subcommand("classify", "factorization and r-free / r-full classification of n");
  classify->add_option("--n", cfg.n_text, "positive integer")->required();
  classify->add_option("--r", cfg.r)->capture_default_str();
  leaf(classify, "classify", [&] { return cmd_classify(cfg, emit); });

  auto* sieve = app.add_subcommand("sieve", "r-full (or r-free) integers up to a limit");
  sieve->add_option("--limit,-N", cfg.limit)->required();
  sieve->add_option("--r", cfg.r)->capture_default_str();
  sieve->add_option("--method", cfg.method, "sieve | a2b3 | rfree")->capture_default_str();
  leaf(sieve, "sieve", [&] { return cmd_sieve(cfg, emit); });

  auto* series = app.add_subcommand("series", "base-ell digits of sum a_n ell^-a_n");
  series->add_option("--source", cfg.source, "rfree | rfull | squares | pow32 | pow | file")->capture_default_str();
  series->add_option("--r", cfg.r)->capture_default_str();
  series->add_option("--ell", cfg.ell)->capture_default_str();
  series->add_option("--terms", cfg.terms, "number of terms")->capture_default_str();
  series->add_option("--digits", cfg.digits)->capture_default_str();
  series->add_option("--gamma", cfg.gamma_text);
  series->add_option("--file", cfg.file);
  leaf(series, "series", [&] { return cmd_series(cfg, emit); });

  auto* t1 = app.add_subcommand("theorem1", "shift certificates for ell^m + k");
  t1->require_subcommand(1);
  auto* t1c = t1->add_subcommand("construct", "build a certificate for (r, ell)");
  t1c->add_option("--r", cfg.r)->required();
  t1c->add_option("--ell", cfg.ell_u64)->required();
  t1c->add_option("--s-max", cfg.s_max)->capture_default_str();
  leaf(t1c, "theorem1 construct", [&] { return cmd_theorem1_construct(cfg, emit); });
  auto* t1v = t1->add_subcommand("validate", "structural checks on a certificate file");
  t1v->add_option("--cert", cfg.cert_path)->required();
  leaf(t1v, "theorem1 validate", [&] { return cmd_theorem1_validate(cfg, emit); });
  auto* t1r = t1->add_subcommand("verify", "witness-prime checks for m = 1..M");
  t1r->add_option("--cert", cfg.cert_path)->required();
  t1r->add_option("--max-m", cfg.max_m)->capture_default_str();
  leaf(t1r, "theorem1 verify", [&] { return cmd_theorem1_verify(cfg, emit, err); });
  auto* t1g = t1->add_subcommand("grid", "construct + verify over an (r, ell) grid");
  t1g->add_option("--r-min", cfg.r_min)->capture_default_str();
  t1g->add_option("--r-max", cfg.r_max)->capture_default_str();
  t1g->add_option("--ell-min", cfg.ell_min)->capture_default_str();
  t1g->add_option("--ell-max", cfg.ell_max)->capture_default_str();
  t1g->add_option("--max-m", cfg.max_m)->capture_default_str();
  t1g->add_option("--s-max", cfg.s_max)->capture_default_str();
  leaf(t1g, "theorem1 grid", [&] { return cmd_theorem1_grid(cfg, emit); });

  auto* seq = app.add_subcommand("seq", "sequence generators and the floor-scaled transform");
  seq->require_subcommand(1);
  auto* sg = seq->add_subcommand("gen", "first n terms");
  add_seq_options(sg, cfg);
  sg->add_option("--n", cfg.n)->capture_default_str();
  leaf(sg, "seq gen", [&] { return cmd_seq_gen(cfg, emit); });
  auto* sa = seq->add_subcommand("salpha", "floor(alpha * s_n) for the first n terms");
  add_seq_options(sa, cfg);
  sa->add_option("--alpha", cfg.alpha_text, "exact rational, e.g. 1/2 or 0.3")->required();
  sa->add_option("--n", cfg.n)->capture_default_str();
  leaf(sa, "seq salpha", [&] { return cmd_seq_salpha(cfg, emit); });
  auto* sp = seq->add_subcommand("preimage", "alpha-interval with floor(alpha * s) = t");
  sp->add_option("--t", cfg.t_text)->required();
  sp->add_option("--s", cfg.s_text)->required();
  leaf(sp, "seq preimage", [&] { return cmd_seq_preimage(cfg, emit); });
  auto* sr = seq->add_subcommand("ratio", "check s_n < s_(n+1) <= 2 s_n");
  add_seq_options(sr, cfg);
  sr->add_option("--n", cfg.n)->capture_default_str();
  leaf(sr, "seq ratio", [&] { return cmd_seq_ratio(cfg, emit); });

  auto* thm2 = app.add_subcommand("thm2", "skip-argument verification for floor(gamma^n)");
  thm2->require_subcommand(1);
  auto* tv = thm2->add_subcommand("verify", "per-k exact scan over all alpha in (0,1)");
  tv->add_option("--gamma", cfg.gamma_text)->capture_default_str();
  tv->add_option("--j", cfg.j)->capture_default_str();
  tv->add_option("--K", cfg.big_k)->capture_default_str();
  leaf(tv, "thm2 verify", [&] { return cmd_thm2_verify(cfg, emit, err); });
  auto* ts = thm2->add_subcommand("symbolic", "k-free sufficient conditions");
  ts->add_option("--gamma", cfg.gamma_text)->capture_default_str();
  ts->add_option("--j", cfg.j)->capture_default_str();
  leaf(ts, "thm2 symbolic", [&] { return cmd_thm2_symbolic(cfg, emit); });
  auto* tg = thm2->add_subcommand("gamma-search", "smallest j passing the conditions");
  tg->add_option("--gamma", cfg.gamma_text)->capture_default_str();
  tg->add_option("--j-max", cfg.j_max)->capture_default_str();
  leaf(tg, "thm2 gamma-search", [&] { return cmd_thm2_gamma_search(cfg, emit); });
  auto* tc = thm2->add_subcommand("scan", "brute-force alpha intervals with both targets present");
  add_seq_options(tc, cfg);
  tc->add_option("--t1", cfg.t1_text)->required();
  tc->add_option("--t2", cfg.t2_text)->required();
  tc->add_option("--n", cfg.n)->capture_default_str();
  leaf(tc, "thm2 scan", [&] { return cmd_thm2_scan(cfg, emit); });

  auto* pset = app.add_subcommand("pset", "subset-sum representation sets P(A)");
  pset->require_subcommand(1);
  auto* pc = pset->add_subcommand("compute", "bitmap of P(A) ∩ [0, bound]");
  add_terms_options(pc, cfg);
  pc->add_option("--bound", cfg.bound)->required();
  pc->add_option("--export", cfg.export_kind, "rle | raw")->capture_default_str();
  pc->add_option("--out", cfg.out_path, "write the exported bitmap here");
  leaf(pc, "pset compute", [&] { return cmd_pset_compute(cfg, emit); });
  auto* pk = pset->add_subcommand("complete", "bounded completeness threshold");
  add_terms_options(pk, cfg);
  pk->add_option("--bound", cfg.bound)->required();
  leaf(pk, "pset complete", [&] { return cmd_pset_complete(cfg, emit); });
  auto* pb = pset->add_subcommand("brown", "prefix-sum completeness criterion");
  add_terms_options(pb, cfg);
  leaf(pb, "pset brown", [&] { return cmd_pset_brown(cfg, emit); });
  auto* pw = pset->add_subcommand("witness", "squares alpha-witness for {2^i : i <= m}");
  pw->add_option("--m", cfg.m)->required();
  leaf(pw, "pset witness", [&] { return cmd_pset_witness(cfg, emit); });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    cfg.format = parse_format(format_text);
    cfg.caps = ResourceCaps::from_env();
    for (auto& [sub, handler] : handlers)
      if (sub->parsed()) return handler();
    err << app.help();
    return kExitUsage;
  } catch (const CheckFailure& e) {
    err << "check failed: " << e.what() << '\n';
    return kExitCheckFailed;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << " (raise it via NTV_" << (e.cap_name() == "bitmap" ? "BITMAP" : e.cap_name() == "sieve" ? "SIEVE" : "SEQ")
        << "_CAP)\n";
    return kExitUsage;
  } catch (const NotFoundWithinBound& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ntv
