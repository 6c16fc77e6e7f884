#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ntv/classify.hpp"
#include "ntv/core.hpp"
#include "ntv/errors.hpp"

namespace ntv {

/// Shift certificates: for r, ell >= 2, a k such that ell^m + k is never r-full.
///
/// The construction splits on ell:
///   Case I   ell = 2:                    k = 10.
///   Case II  p^2 | ell for a prime p:    k = p.
///   Case III ell square-free with an odd prime factor q:
///            pick s >= 2 with q* = ell*s - 1 prime, k = ell*(q* - 1),
///            so ell^m + k = ell*(ell^(m-1) + q* - 1).
/// In every case a prime divides ell^m + k exactly once, so the value is not
/// 2-full and therefore not r-full for any r >= 2.

inline constexpr std::uint64_t kDefaultSMax = 10'000;
inline constexpr std::uint64_t kDefaultMaxM = 60;
inline constexpr std::uint64_t kFactorCrossCheckLimit = 1'000'000'000'000ULL;

enum class ProofCase { I, II, III };

std::string to_string(ProofCase c);
/// Throws std::invalid_argument for anything other than "I", "II", "III".
ProofCase parse_proof_case(const std::string& text);

struct CaseIWitness {
  friend bool operator==(const CaseIWitness&, const CaseIWitness&) = default;
};

struct CaseIIWitness {
  std::uint64_t p = 0;
  friend bool operator==(const CaseIIWitness&, const CaseIIWitness&) = default;
};

struct CaseIIIWitness {
  std::uint64_t q = 0;
  std::uint64_t s = 0;
  std::uint64_t q_star = 0;
  friend bool operator==(const CaseIIIWitness&, const CaseIIIWitness&) = default;
};

using CaseWitness = std::variant<CaseIWitness, CaseIIWitness, CaseIIIWitness>;

struct RFullCertificate {
  unsigned r = 2;
  std::uint64_t ell = 2;
  ProofCase proof_case = ProofCase::I;
  BigInt k;
  CaseWitness witness;

  friend bool operator==(const RFullCertificate&, const RFullCertificate&) = default;
};

struct DirichletHit {
  std::uint64_t s = 0;
  std::uint64_t q_star = 0;
};

/// Smallest s in [2, s_max] with ell*s - 1 prime. Throws NotFoundWithinBound.
DirichletHit dirichlet_search(std::uint64_t ell, std::uint64_t s_max = kDefaultSMax);

/// Deterministic: smallest p in Case II, smallest odd q in Case III.
/// Throws std::invalid_argument for r < 2 or ell < 2, and propagates
/// NotFoundWithinBound from the Case III search.
RFullCertificate construct_k(unsigned r, std::uint64_t ell, std::uint64_t s_max = kDefaultSMax);

struct CertificateCheck {
  bool ok = true;
  std::string code;     // machine-readable, e.g. "q_not_odd"
  std::string message;  // human-readable, e.g. "q must be odd"

  explicit operator bool() const { return ok; }
};

/// First failed structural check, or ok.
CertificateCheck validate_certificate(const RFullCertificate& cert);

struct WitnessRow {
  std::uint64_t m = 0;
  BigInt value;       // ell^m + k
  BigInt witness;     // prime dividing value exactly once
  BigInt residue_w;   // value mod w, always 0
  BigInt residue_w2;  // value mod w^2, never 0
  std::optional<Factorization> factorization;  // present when value <= 10^12
};

struct NonRFullReport {
  RFullCertificate cert;
  std::uint64_t max_m = 0;
  std::vector<WitnessRow> rows;
  std::size_t factor_checked = 0;
};

/// A certificate failed its own witness argument at some m.
class VerificationFailure : public CheckFailure {
 public:
  VerificationFailure(const std::string& what, std::uint64_t m) : CheckFailure(what), m_(m) {}
  std::uint64_t m() const { return m_; }

 private:
  std::uint64_t m_;
};

/// The prime the case argument names for exponent m.
BigInt case_witness_prime(const RFullCertificate& cert, std::uint64_t m);

/// Checks ell^m + k for m in [1, max_m] with the case witness prime via
/// modular arithmetic, and cross-checks by full factorization while the
/// value is at most 10^12. Throws std::invalid_argument for an invalid
/// certificate and VerificationFailure on the first failing m.
NonRFullReport verify_non_rfull(const RFullCertificate& cert, std::uint64_t max_m = kDefaultMaxM);

struct GridCell {
  unsigned r = 0;
  std::uint64_t ell = 0;
  RFullCertificate cert;
  bool valid = false;
  bool verified = false;
  std::size_t factor_checked = 0;
  std::string error;
};

struct GridSpec {
  unsigned r_min = 2;
  unsigned r_max = 5;
  std::uint64_t ell_min = 2;
  std::uint64_t ell_max = 50;
  std::uint64_t max_m = kDefaultMaxM;
  std::uint64_t s_max = kDefaultSMax;
};

/// Construct, validate and verify every (r, ell) cell; never throws for a
/// failing cell, the failure is recorded in the cell. Cells are returned in
/// (r, ell) order regardless of `jobs`.
std::vector<GridCell> verify_grid(const GridSpec& spec, unsigned jobs = 1);

}  // namespace ntv
