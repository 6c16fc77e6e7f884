#include "ntv/theorem1.hpp"

#include <gtest/gtest.h>

#include <random>

namespace ntv {
namespace {

bool brute_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Exponent of the prime w in v, by repeated division.
unsigned valuation(BigInt v, const BigInt& w) {
  unsigned e = 0;
  while (v % w == 0) {
    v /= w;
    ++e;
  }
  return e;
}

// Some prime divides v exactly once, found by plain trial division.
bool brute_not_squarefull(std::uint64_t v) {
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    unsigned e = 0;
    while (v % d == 0) {
      v /= d;
      ++e;
    }
    if (e == 1) return true;
  }
  return v > 1;
}

// Witness prime recomputed from the case rules alone.
BigInt oracle_witness(const RFullCertificate& cert, std::uint64_t m) {
  if (cert.proof_case == ProofCase::I) return m == 1 ? 3 : 2;
  if (const auto* w = std::get_if<CaseIIWitness>(&cert.witness)) return w->p;
  const auto& w3 = std::get<CaseIIIWitness>(cert.witness);
  return m == 1 ? w3.q_star : w3.q;
}

RFullCertificate case_iii(std::uint64_t ell, std::uint64_t q, std::uint64_t s) {
  const std::uint64_t q_star = ell * s - 1;
  return RFullCertificate{2, ell, ProofCase::III, BigInt(ell) * (q_star - 1), CaseIIIWitness{q, s, q_star}};
}

TEST(DirichletSearchTest, Examples) {
  EXPECT_EQ(dirichlet_search(3).s, 2U);
  EXPECT_EQ(dirichlet_search(3).q_star, 5U);
  EXPECT_EQ(dirichlet_search(6).q_star, 11U);
  EXPECT_EQ(dirichlet_search(15).q_star, 29U);
  EXPECT_EQ(dirichlet_search(2).q_star, 3U);
}

TEST(DirichletSearchTest, ExhaustedBoundThrows) {
  // 5*2 - 1 = 9 is composite.
  EXPECT_THROW(dirichlet_search(5, 2), NotFoundWithinBound);
  EXPECT_THROW(dirichlet_search(5, 3), NotFoundWithinBound);  // 14
  EXPECT_EQ(dirichlet_search(5, 4).q_star, 19U);
}

TEST(DirichletSearchTest, MatchesLinearScanOracle) {
  for (std::uint64_t ell = 2; ell <= 3000; ++ell) {
    std::uint64_t s = 2;
    while (!brute_prime(ell * s - 1)) ++s;
    const DirichletHit hit = dirichlet_search(ell);
    ASSERT_EQ(hit.s, s) << ell;
    ASSERT_EQ(hit.q_star, ell * s - 1);
  }
}

TEST(ConstructTest, Examples) {
  const RFullCertificate c2 = construct_k(2, 2);
  EXPECT_EQ(c2.proof_case, ProofCase::I);
  EXPECT_EQ(c2.k, 10);

  const RFullCertificate c4 = construct_k(3, 4);
  EXPECT_EQ(c4.proof_case, ProofCase::II);
  EXPECT_EQ(c4.k, 2);
  EXPECT_EQ(std::get<CaseIIWitness>(c4.witness).p, 2U);

  EXPECT_EQ(std::get<CaseIIWitness>(construct_k(2, 18).witness).p, 3U);
  EXPECT_EQ(std::get<CaseIIWitness>(construct_k(2, 12).witness).p, 2U);

  const RFullCertificate c3 = construct_k(2, 3);
  EXPECT_EQ(c3.proof_case, ProofCase::III);
  EXPECT_EQ(c3.witness, (CaseWitness{CaseIIIWitness{3, 2, 5}}));
  EXPECT_EQ(c3.k, 12);

  const RFullCertificate c6 = construct_k(2, 6);
  EXPECT_EQ(c6.witness, (CaseWitness{CaseIIIWitness{3, 2, 11}}));
  EXPECT_EQ(c6.k, 60);

  // Smallest odd prime factor of 10 is 5, 10*2 - 1 = 19.
  const RFullCertificate c10 = construct_k(4, 10);
  EXPECT_EQ(c10.witness, (CaseWitness{CaseIIIWitness{5, 2, 19}}));
  EXPECT_EQ(c10.k, 180);
}

TEST(ConstructTest, RejectsDegenerateParameters) {
  EXPECT_THROW(construct_k(1, 5), std::invalid_argument);
  EXPECT_THROW(construct_k(2, 1), std::invalid_argument);
  EXPECT_THROW(construct_k(2, 5, 2), NotFoundWithinBound);
}

TEST(ConstructTest, Deterministic) {
  for (std::uint64_t ell = 2; ell <= 200; ++ell) EXPECT_EQ(construct_k(3, ell), construct_k(3, ell));
}

TEST(ValidateTest, ConstructedCertificatesAreValid) {
  for (unsigned r = 2; r <= 6; ++r)
    for (std::uint64_t ell = 2; ell <= 500; ++ell) {
      const CertificateCheck check = validate_certificate(construct_k(r, ell));
      ASSERT_TRUE(check) << r << "," << ell << ": " << check.code;
    }
}

TEST(ValidateTest, EvenPrimeRejectedInCaseIII) {
  const CertificateCheck check = validate_certificate(case_iii(6, 2, 2));
  EXPECT_FALSE(check);
  EXPECT_EQ(check.code, "q_not_odd");
  EXPECT_EQ(check.message, "q must be odd");
}

TEST(ValidateTest, PrimeSquareMustDivideEll) {
  const CertificateCheck check = validate_certificate(RFullCertificate{2, 6, ProofCase::II, 3, CaseIIWitness{3}});
  EXPECT_FALSE(check);
  EXPECT_EQ(check.code, "p_squared_not_dividing_ell");
}

TEST(ValidateTest, ReasonCodes) {
  const auto code = [](const RFullCertificate& c) { return validate_certificate(c).code; };
  EXPECT_EQ(code(RFullCertificate{1, 2, ProofCase::I, 10, CaseIWitness{}}), "r_below_2");
  EXPECT_EQ(code(RFullCertificate{2, 1, ProofCase::I, 10, CaseIWitness{}}), "ell_below_2");
  EXPECT_EQ(code(RFullCertificate{2, 4, ProofCase::II, 2, CaseIWitness{}}), "witness_case_mismatch");
  EXPECT_EQ(code(RFullCertificate{2, 3, ProofCase::I, 10, CaseIWitness{}}), "case_I_requires_ell_2");
  EXPECT_EQ(code(RFullCertificate{2, 2, ProofCase::I, 11, CaseIWitness{}}), "case_I_requires_k_10");
  EXPECT_EQ(code(RFullCertificate{2, 16, ProofCase::II, 4, CaseIIWitness{4}}), "p_not_prime");
  EXPECT_EQ(code(RFullCertificate{2, 4, ProofCase::II, 3, CaseIIWitness{2}}), "k_not_p");
  EXPECT_EQ(code(case_iii(9, 9, 2)), "q_not_prime");
  EXPECT_EQ(code(case_iii(15, 7, 2)), "q_not_dividing_ell");
  EXPECT_EQ(code(case_iii(12, 3, 2)), "ell_not_squarefree");
  EXPECT_EQ(code(case_iii(3, 3, 1)), "s_below_2");
  EXPECT_EQ(code(case_iii(3, 3, 3)), "q_star_not_prime");  // 3*3 - 1 = 8

  RFullCertificate wrong_star = case_iii(3, 3, 2);
  std::get<CaseIIIWitness>(wrong_star.witness).q_star = 7;
  EXPECT_EQ(code(wrong_star), "q_star_mismatch");

  RFullCertificate wrong_k = case_iii(3, 3, 2);
  wrong_k.k += 1;
  EXPECT_EQ(code(wrong_k), "k_formula_mismatch");
}

TEST(VerifyTest, Examples) {
  const NonRFullReport one = verify_non_rfull(construct_k(2, 2), 5);
  ASSERT_EQ(one.rows.size(), 5U);
  EXPECT_EQ(one.rows[0].value, 12);
  EXPECT_EQ(one.rows[0].witness, 3);
  EXPECT_EQ(one.rows[2].value, 18);
  EXPECT_EQ(one.rows[2].witness, 2);

  const NonRFullReport three = verify_non_rfull(construct_k(2, 3), 3);
  EXPECT_EQ(three.rows[0].value, 15);
  EXPECT_EQ(three.rows[0].witness, 5);
  EXPECT_EQ(three.rows[1].witness, 3);

  const NonRFullReport four = verify_non_rfull(construct_k(2, 4), 3);
  EXPECT_EQ(four.rows[1].value, 18);
  EXPECT_EQ(four.rows[1].witness, 2);
}

TEST(VerifyTest, InvalidCertificateThrows) {
  EXPECT_THROW(verify_non_rfull(case_iii(6, 2, 2), 5), std::invalid_argument);
}

TEST(VerifyTest, FactorizationOnlyBelowLimit) {
  const NonRFullReport report = verify_non_rfull(construct_k(2, 10), 20);
  for (const auto& row : report.rows) EXPECT_EQ(row.factorization.has_value(), row.value <= kFactorCrossCheckLimit);
  EXPECT_EQ(report.factor_checked, 11U);  // 10^12 + 180 is already above the limit
}

TEST(VerifyTest, RowsMatchIndependentRecomputation) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::uint64_t> ell_dist(2, 5000);
  for (int it = 0; it < 60; ++it) {
    const std::uint64_t ell = ell_dist(rng);
    const RFullCertificate cert = construct_k(2, ell);
    const NonRFullReport report = verify_non_rfull(cert, 30);
    for (const auto& row : report.rows) {
      const BigInt value = pow(BigInt(ell), static_cast<unsigned>(row.m)) + cert.k;
      ASSERT_EQ(row.value, value);
      const BigInt w = oracle_witness(cert, row.m);
      ASSERT_EQ(row.witness, w) << ell << " m=" << row.m;
      ASSERT_EQ(valuation(value, w), 1U) << ell << " m=" << row.m;
    }
  }
}

TEST(VerifyTest, SmallValuesAreNotSquarefullByTrialDivision) {
  for (std::uint64_t ell = 2; ell <= 50; ++ell) {
    const RFullCertificate cert = construct_k(2, ell);
    BigInt value = BigInt(ell) + cert.k;
    for (std::uint64_t m = 1; value <= 10'000'000'000ULL; ++m) {
      ASSERT_TRUE(brute_not_squarefull(static_cast<std::uint64_t>(value))) << ell << " m=" << m;
      value = (value - cert.k) * ell + cert.k;
    }
  }
}

TEST(CaseIIIProperties, StarMinusOneNotDivisibleByQ) {
  for (std::uint64_t ell = 3; ell <= 5000; ++ell) {
    const RFullCertificate cert = construct_k(2, ell);
    if (cert.proof_case != ProofCase::III) continue;
    const auto& w = std::get<CaseIIIWitness>(cert.witness);
    ASSERT_NE((w.q_star - 1) % w.q, 0U) << ell;
    ASSERT_EQ(ell % w.q, 0U);
    ASSERT_NE(ell % (w.q * w.q), 0U);
  }
}

TEST(GridTest, SmallGridAllVerifiedAndOrderIndependentOfJobs) {
  GridSpec spec;
  spec.r_max = 3;
  spec.ell_max = 30;
  spec.max_m = 25;
  const auto serial = verify_grid(spec, 1);
  const auto parallel = verify_grid(spec, 3);
  ASSERT_EQ(serial.size(), 2U * 29U);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_TRUE(serial[i].valid && serial[i].verified) << serial[i].r << "," << serial[i].ell << serial[i].error;
    EXPECT_EQ(serial[i].r, parallel[i].r);
    EXPECT_EQ(serial[i].ell, parallel[i].ell);
    EXPECT_EQ(serial[i].cert, parallel[i].cert);
  }
}

}  // namespace
}  // namespace ntv
