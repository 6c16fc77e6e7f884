#include "ntv/theorem1.hpp"

#include <stdexcept>

#include "ntv/parallel.hpp"

namespace ntv {

namespace {

CertificateCheck fail(std::string code, std::string message) { return {false, std::move(code), std::move(message)}; }

bool is_squarefree(std::uint64_t n) {
  const Factorization f = factorize(n);
  return is_r_free(f, 2);
}

}  // namespace

std::string to_string(ProofCase c) {
  switch (c) {
    case ProofCase::I: return "I";
    case ProofCase::II: return "II";
    case ProofCase::III: return "III";
  }
  return "?";
}

ProofCase parse_proof_case(const std::string& text) {
  if (text == "I") return ProofCase::I;
  if (text == "II") return ProofCase::II;
  if (text == "III") return ProofCase::III;
  throw std::invalid_argument("unknown case '" + text + "', expected I, II or III");
}

DirichletHit dirichlet_search(std::uint64_t ell, std::uint64_t s_max) {
  if (ell < 2) throw std::invalid_argument("ell must be >= 2");
  for (std::uint64_t s = 2; s <= s_max; ++s) {
    const BigInt candidate = BigInt(ell) * s - 1;
    if (candidate > std::numeric_limits<std::uint64_t>::max())
      throw NotFoundWithinBound("ell*s - 1 left the 64-bit range before a prime was found", s);
    if (is_prime(candidate)) return {s, static_cast<std::uint64_t>(candidate)};
  }
  throw NotFoundWithinBound("no prime ell*s - 1 with 2 <= s <= " + std::to_string(s_max) + " for ell = " +
                                std::to_string(ell) + "; raise s_max",
                            s_max);
}

RFullCertificate construct_k(unsigned r, std::uint64_t ell, std::uint64_t s_max) {
  if (r < 2) throw std::invalid_argument("r must be >= 2");
  if (ell < 2) throw std::invalid_argument("ell must be >= 2");

  RFullCertificate cert;
  cert.r = r;
  cert.ell = ell;
  if (ell == 2) {
    cert.proof_case = ProofCase::I;
    cert.k = 10;
    cert.witness = CaseIWitness{};
    return cert;
  }

  const Factorization f = factorize(ell);
  for (const auto& pp : f.factors) {
    if (pp.exponent >= 2) {
      const auto p = static_cast<std::uint64_t>(pp.prime);
      cert.proof_case = ProofCase::II;
      cert.k = p;
      cert.witness = CaseIIWitness{p};
      return cert;
    }
  }

  // Square-free and >= 3, so some prime factor is odd.
  std::uint64_t q = 0;
  for (const auto& pp : f.factors) {
    if (pp.prime != 2) {
      q = static_cast<std::uint64_t>(pp.prime);
      break;
    }
  }
  const DirichletHit hit = dirichlet_search(ell, s_max);
  cert.proof_case = ProofCase::III;
  cert.k = BigInt(ell) * (hit.q_star - 1);
  cert.witness = CaseIIIWitness{q, hit.s, hit.q_star};
  return cert;
}

CertificateCheck validate_certificate(const RFullCertificate& cert) {
  if (cert.r < 2) return fail("r_below_2", "r must be >= 2");
  if (cert.ell < 2) return fail("ell_below_2", "ell must be >= 2");
  const BigInt ell = cert.ell;

  switch (cert.proof_case) {
    case ProofCase::I: {
      if (!std::holds_alternative<CaseIWitness>(cert.witness))
        return fail("witness_case_mismatch", "case I takes no witness");
      if (cert.ell != 2) return fail("case_I_requires_ell_2", "case I requires ell = 2");
      if (cert.k != 10) return fail("case_I_requires_k_10", "case I requires k = 10");
      return {};
    }
    case ProofCase::II: {
      const auto* w = std::get_if<CaseIIWitness>(&cert.witness);
      if (w == nullptr) return fail("witness_case_mismatch", "case II needs a witness prime p");
      if (!is_prime(w->p)) return fail("p_not_prime", "p must be prime");
      const BigInt p = w->p;
      if (ell % (p * p) != 0) return fail("p_squared_not_dividing_ell", "p² ∤ ℓ");
      if (cert.k != p) return fail("k_not_p", "case II requires k = p");
      return {};
    }
    case ProofCase::III: {
      const auto* w = std::get_if<CaseIIIWitness>(&cert.witness);
      if (w == nullptr) return fail("witness_case_mismatch", "case III needs witnesses q, s, q*");
      if (!is_prime(w->q)) return fail("q_not_prime", "q must be prime");
      if (w->q == 2) return fail("q_not_odd", "q must be odd");
      if (cert.ell % w->q != 0) return fail("q_not_dividing_ell", "q ∤ ℓ");
      if (!is_squarefree(cert.ell)) return fail("ell_not_squarefree", "case III requires ℓ square-free");
      if (w->s < 2) return fail("s_below_2", "s must be >= 2");
      if (BigInt(w->q_star) != ell * w->s - 1) return fail("q_star_mismatch", "q* ≠ ℓs − 1");
      if (!is_prime(w->q_star)) return fail("q_star_not_prime", "q* must be prime");
      if (cert.k != ell * (BigInt(w->q_star) - 1)) return fail("k_formula_mismatch", "case III requires k = ℓ(q* − 1)");
      return {};
    }
  }
  return fail("unknown_case", "unknown case tag");
}

BigInt case_witness_prime(const RFullCertificate& cert, std::uint64_t m) {
  switch (cert.proof_case) {
    case ProofCase::I:
      // 2 + 10 = 12 = 2^2 * 3: the exactly-once prime at m = 1 is 3.
      return m == 1 ? BigInt(3) : BigInt(2);
    case ProofCase::II: return BigInt(std::get<CaseIIWitness>(cert.witness).p);
    case ProofCase::III: {
      const auto& w = std::get<CaseIIIWitness>(cert.witness);
      return m == 1 ? BigInt(w.q_star) : BigInt(w.q);
    }
  }
  throw std::logic_error("unknown case");
}

NonRFullReport verify_non_rfull(const RFullCertificate& cert, std::uint64_t max_m) {
  if (const auto check = validate_certificate(cert); !check)
    throw std::invalid_argument("invalid certificate: " + check.code + " (" + check.message + ")");
  if (max_m < 1) throw std::invalid_argument("max_m must be >= 1");

  NonRFullReport report;
  report.cert = cert;
  report.max_m = max_m;
  report.rows.reserve(max_m);

  BigInt power = 1;
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    power *= cert.ell;
    WitnessRow row;
    row.m = m;
    row.value = power + cert.k;
    row.witness = case_witness_prime(cert, m);
    row.residue_w = row.value % row.witness;
    row.residue_w2 = row.value % (row.witness * row.witness);
    const auto where = " at m = " + std::to_string(m) + " (ell = " + std::to_string(cert.ell) +
                       ", k = " + cert.k.str() + ", w = " + row.witness.str() + ")";
    if (row.residue_w != 0) throw VerificationFailure("witness does not divide ell^m + k" + where, m);
    if (row.residue_w2 == 0) throw VerificationFailure("witness squared divides ell^m + k" + where, m);

    if (row.value <= kFactorCrossCheckLimit) {
      Factorization f = factorize(row.value);
      if (f.exponent_of(row.witness) != 1)
        throw VerificationFailure("factorization disagrees with the witness exponent" + where, m);
      if (is_r_full(f, 2) || is_r_full(f, cert.r))
        throw VerificationFailure("factorization shows ell^m + k is r-full" + where, m);
      row.factorization = std::move(f);
      ++report.factor_checked;
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::vector<GridCell> verify_grid(const GridSpec& spec, unsigned jobs) {
  if (spec.r_min < 2 || spec.r_max < spec.r_min) throw std::invalid_argument("need 2 <= r_min <= r_max");
  if (spec.ell_min < 2 || spec.ell_max < spec.ell_min) throw std::invalid_argument("need 2 <= ell_min <= ell_max");
  const std::size_t ells = spec.ell_max - spec.ell_min + 1;
  const std::size_t count = (spec.r_max - spec.r_min + 1) * ells;
  return parallel_map<GridCell>(count, jobs, [&](std::size_t i) {
    GridCell cell;
    cell.r = spec.r_min + static_cast<unsigned>(i / ells);
    cell.ell = spec.ell_min + i % ells;
    try {
      cell.cert = construct_k(cell.r, cell.ell, spec.s_max);
      const auto check = validate_certificate(cell.cert);
      cell.valid = check.ok;
      if (!check.ok) {
        cell.error = check.code;
        return cell;
      }
      cell.factor_checked = verify_non_rfull(cell.cert, spec.max_m).factor_checked;
      cell.verified = true;
    } catch (const std::exception& e) {
      cell.error = e.what();
    }
    return cell;
  });
}

}  // namespace ntv
