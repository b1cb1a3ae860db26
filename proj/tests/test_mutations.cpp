// Checker soundness: every verifier must reject input with a single
// perturbed coefficient (or value) that it accepts unperturbed.

#include <gtest/gtest.h>

#include "iterlog/suite.hpp"

using namespace iterlog;

namespace {

const Rat kEps(1, 1009);

QPoly bump(const QPoly& p, std::size_t k) { return p + QPoly::monomial(kEps, k); }

std::vector<QPoly> b_seq(unsigned nmax) {
  std::vector<QPoly> B;
  for (unsigned n = 0; n <= nmax; ++n) B.push_back(b_n2(n));
  return B;
}
std::vector<QPoly> c_seq(unsigned nmax) {
  std::vector<QPoly> C;
  for (unsigned n = 0; n <= nmax; ++n) C.push_back(c_n2(n));
  return C;
}

}  // namespace

TEST(Mutation, RootBasisChecks) {
  auto f = iterate_all(roots_case2(), 8);
  ASSERT_TRUE(root_basis_checks(roots_case2(), f, 8, "x").pass);
  auto g = f;
  g[5] = LogExpr<GaussRat>(g[5].poly() + GPoly::monomial(GaussRat(kEps), 2), g[5].terms());
  const Verdict v = root_basis_checks(roots_case2(), g, 8, "x");
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.first_failure_n, 5);

  // a log-coefficient mutation leaves the class; the guard reports it
  auto terms = f[5].terms();
  terms.begin()->second += GPoly::monomial(GaussRat(kEps), 2);
  f[5] = LogExpr<GaussRat>(f[5].poly(), terms);
  EXPECT_FALSE(guarded("x", [&] { return root_basis_checks(roots_case2(), f, 8, "x"); }).pass);
}

TEST(Mutation, ClosedFormChecks) {
  auto f1 = iterate_all(roots_case1(), 6);
  f1[4] = LogExpr<Rat>(bump(f1[4].poly(), 2), f1[4].terms());
  EXPECT_FALSE(closed_form_checks_case1(f1).pass);

  auto f2 = iterate_all(roots_case2(), 6);
  f2[3] = LogExpr<GaussRat>(f2[3].poly() + GPoly::monomial(GaussRat(kEps), 3), f2[3].terms());
  EXPECT_FALSE(closed_form_checks_case2(f2).pass);

  auto f3 = iterate_all(roots_case3(), 6);
  f3[6] = LogExpr<EisenRat>(f3[6].poly() + EPoly::monomial(EisenRat(kEps), 1), f3[6].terms());
  EXPECT_FALSE(closed_form_checks_case3(f3).pass);
}

TEST(Mutation, Recurrences) {
  auto B = b_seq(20);
  ASSERT_TRUE(verify_rec2(B, 20).pass);
  B[7] = bump(B[7], 0);
  EXPECT_EQ(verify_rec2(B, 20).first_failure_n, 7);

  std::vector<QPoly> D;
  for (unsigned n = 0; n <= 20; ++n) D.push_back(family_n3(n).D);
  ASSERT_TRUE(verify_rec3(D, 20).pass);
  D[13] = bump(D[13], 5);
  EXPECT_EQ(verify_rec3(D, 20).first_failure_n, 13);
}

TEST(Mutation, AlphaN1) {
  std::vector<BigInt> alphas{1};
  for (unsigned n = 1; n <= 30; ++n) alphas.push_back(denom_lcm(family_n1(n).A));
  ASSERT_TRUE(alpha_beta_n1_from(alphas).alpha_formula.pass);
  alphas[17] *= 7;
  const Report1 r = alpha_beta_n1_from(alphas);
  EXPECT_FALSE(r.alpha_formula.pass);
  EXPECT_FALSE(r.beta_von_mangoldt.pass);
  EXPECT_EQ(r.alpha_formula.first_failure_n, 17);
}

TEST(Mutation, Case2Theorems) {
  const unsigned n = 5;
  const BigInt alpha_prev = denom_lcm(a_n2(n - 1));
  const BigInt gamma = gamma_by_h(n);
  const DenomRow2 good = make_row2(n, denom_lcm(a_n2(n)), alpha_prev, gamma);
  ASSERT_TRUE(alpha_equals_nfact_gamma({good}).pass);

  // one coefficient of A_{5,2}: 1/60 -> 1/60 + 1/1009
  const DenomRow2 bad_alpha = make_row2(n, denom_lcm(bump(a_n2(n), 1)), alpha_prev, gamma);
  EXPECT_FALSE(alpha_equals_nfact_gamma({bad_alpha}).pass);
  EXPECT_FALSE(alpha2_divides_bound({bad_alpha}).pass);
  EXPECT_FALSE(bad_alpha.conj2_ok);
  EXPECT_FALSE(bad_alpha.conj1_ok);

  EXPECT_FALSE(theorem_nu3_gamma({make_row2(n, good.alpha, alpha_prev, gamma * 3)}).pass);
  EXPECT_FALSE(nu2_gamma_check({make_row2(n, good.alpha, alpha_prev, gamma * 2)}).pass);
  EXPECT_FALSE(make_row2(n, good.alpha, alpha_prev, gamma * 5).conj3_ok);
}

TEST(Mutation, Case3Report) {
  std::vector<BigInt> alphas;
  for (unsigned n = 0; n <= 20; ++n) alphas.push_back(denom_lcm(a_tilde_n3(n)));
  ASSERT_EQ(beta_n3_from(alphas).counterexamples, 0u);
  alphas[10] = denom_lcm(bump(a_tilde_n3(10), 4));
  EXPECT_GT(beta_n3_from(alphas).counterexamples, 0u);
}

TEST(Mutation, HarmonicChecks) {
  auto H = harmonic_table(54);
  ASSERT_TRUE(figure1_from(H).divisibility.pass);
  ASSERT_TRUE(harmonic_denominator_theorem(3, H).pass);
  auto H1 = H;
  H1[30] += kEps;
  EXPECT_EQ(figure1_from(H1).divisibility.first_failure_n, 30);
  auto H2 = H;
  H2[17] += kEps;
  EXPECT_FALSE(harmonic_denominator_theorem(3, H2).pass);
  auto H3 = H;
  H3[12] += kEps;
  EXPECT_EQ(binom_harmonic_identity(20, [&](unsigned long n) { return H3[n]; }).first_failure_n, 12);
}

TEST(Mutation, WZ) {
  WZPair p = standard_wz_pair();
  const auto F = p.F;
  p.F = [F](long m, long r, long a) { return (m == 3 && r == 2 && a == 4) ? F(m, r, a) + kEps : F(m, r, a); };
  EXPECT_FALSE(wz_certificate_check(5, 5, 5, p).pass);
}

TEST(Mutation, PhiForms) {
  const PhiFn bad = [](const Rat& a, unsigned n) {
    QPoly p = phi_n(a, n);
    return n == 4 ? bump(p, 3) : p;
  };
  const Verdict vi = phi_integral_check(6, sample_points(8), bad);
  EXPECT_FALSE(vi.pass);
  EXPECT_EQ(vi.first_failure_n, 4);
  EXPECT_EQ(phi_2f1_check(6, sample_points(2), 12, bad).first_failure_n, 4);
}

TEST(Mutation, TrigonometricForms) {
  auto pairs = cot_pairs(10);
  ASSERT_TRUE(cot_multiple_angle_check(pairs).pass);
  pairs[6].Q = bump(pairs[6].Q, 2);
  EXPECT_EQ(cot_multiple_angle_check(pairs).first_failure_n, 6);

  auto B = b_seq(12);
  const auto C = c_seq(12);
  ASSERT_TRUE(pochhammer_taylor_check(B, C).pass);
  B[9] = bump(B[9], 0);
  EXPECT_EQ(pochhammer_taylor_check(B, C).first_failure_n, 9);
  auto C2 = C;
  C2[4] = bump(C2[4], 4);
  EXPECT_EQ(pochhammer_taylor_check(b_seq(12), C2).first_failure_n, 4);
}

TEST(Mutation, H1H2) {
  auto f = iterate_all(roots_case3(), 3);
  auto terms = f[2].terms();
  terms.begin()->second += EPoly::monomial(EisenRat(kEps), 1);
  f[2] = LogExpr<EisenRat>(f[2].poly(), terms);
  EXPECT_EQ(h1h2_log_form_check(15, f).first_failure_n, 2);
}

TEST(Mutation, BArithmetic) {
  auto B = b_seq(24);
  ASSERT_TRUE(divisibility_check(B).pass);
  ASSERT_TRUE(palindrome_check(B, 11).pass);
  auto Bd = B;
  Bd[9] = bump(Bd[9], 0);
  EXPECT_FALSE(divisibility_check(Bd).pass);
  auto Bp = B;
  Bp[14] = bump(Bp[14], 2);
  const Verdict v = palindrome_check(Bp, 11);
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.first_failure_n, 7);
}
