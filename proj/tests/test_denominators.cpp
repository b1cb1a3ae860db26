#include <gtest/gtest.h>

#include "iterlog/denominators.hpp"

using namespace iterlog;

TEST(Denominators, Case1Rows) {
  const Report1 r = alpha_beta_n1(40);
  EXPECT_TRUE(r.alpha_formula.pass);
  EXPECT_TRUE(r.beta_von_mangoldt.pass);
  EXPECT_EQ(r.rows[2].alpha, 36);  // alpha_{3,1} = 3! lcm(1,2,3)
  EXPECT_EQ(r.rows[3].beta, Rat(2));
  EXPECT_EQ(r.rows[5].beta, Rat(1));
  EXPECT_THROW(alpha_beta_n1(0), std::invalid_argument);
}

TEST(Denominators, Case2SmallRows) {
  const auto rows = alpha_beta_gamma_n2(12);
  ASSERT_EQ(rows.size(), 11u);
  EXPECT_EQ(rows[0].n, 2u);
  EXPECT_EQ(rows[0].alpha, 2);
  EXPECT_EQ(rows[0].beta, Rat(1));  // boundary: the case formula would say 2
  EXPECT_EQ(rows[0].gamma, 1);
  EXPECT_EQ(rows[1].alpha, 18);
  EXPECT_EQ(rows[1].beta, Rat(3));
  EXPECT_EQ(rows[1].gamma, 3);
  EXPECT_EQ(rows[4].alpha, 7200);  // n = 6 = 2*3
  EXPECT_EQ(rows[4].nu3_gamma, 0);
  EXPECT_EQ(rows[3].nu3_gamma, 1);  // n = 5
  EXPECT_EQ(rows[7].nu3_gamma, 2);  // n = 9
  EXPECT_EQ(rows[2].nu2_gamma, 1);  // n = 4
  EXPECT_EQ(rows[1].nu2_gamma, 0);  // n = 3
  for (const auto& r : rows) EXPECT_TRUE(r.conj1_ok && r.conj2_ok && r.conj3_ok) << r.n;
  EXPECT_TRUE(alpha_equals_nfact_gamma(rows).pass);
  EXPECT_TRUE(alpha2_divides_bound(rows).pass);
  EXPECT_TRUE(theorem_nu3_gamma(rows).pass);
  EXPECT_TRUE(nu2_gamma_check(rows).pass);
  EXPECT_THROW(alpha_beta_gamma_n2(1), std::invalid_argument);
}

TEST(Denominators, ConjecturePredictions) {
  EXPECT_EQ(beta2_conjecture(6), Rat(1, 3));
  EXPECT_EQ(beta2_conjecture(7), Rat(21));
  EXPECT_EQ(beta2_conjecture(19), Rat(57));
  EXPECT_EQ(beta2_conjecture(8), Rat(2));
  EXPECT_EQ(beta2_conjecture(10), Rat(1));
  EXPECT_EQ(beta2_conjecture(3, 1), Rat(3));
  EXPECT_EQ(beta2_conjecture(3, 0), Rat(9));
  EXPECT_EQ(alpha2_conjecture(3), 18);
  EXPECT_EQ(alpha2_conjecture(6), 7200);
  EXPECT_EQ(gamma_conjecture(3), 3);
  EXPECT_EQ(beta3_conjecture(33), Rat(1, 11));
  EXPECT_EQ(beta3_conjecture(34), Rat(11));
  EXPECT_EQ(beta3_conjecture(3), Rat(1));
  EXPECT_EQ(beta3_conjecture(9), Rat(3));
  EXPECT_EQ(beta3_conjecture(2), Rat(2));
}

TEST(Denominators, BoundaryAnnotations) {
  const auto rows = alpha_beta_gamma_n2(30);
  const ConjectureSummary s = conjecture_checks_n2(rows);
  EXPECT_EQ(s.conj1_counterexamples, 0u);
  EXPECT_EQ(s.conj2_counterexamples, 0u);
  EXPECT_EQ(s.conj3_counterexamples, 0u);
  EXPECT_EQ(s.annotated, (std::vector<unsigned>{2, 3, 7}));
}

TEST(Denominators, Case3Report) {
  const Report3 r = beta_n3_check(40);
  EXPECT_EQ(r.rows[0].alpha, 4);
  EXPECT_EQ(r.rows[0].beta, Rat(2));
  EXPECT_EQ(r.rows[1].alpha, 12);
  EXPECT_EQ(r.rows[1].beta, Rat(1));
  EXPECT_EQ(r.counterexamples, 0u);
  EXPECT_TRUE(r.lemma.pass);
  EXPECT_FALSE(is_prime_power(34));
  EXPECT_THROW(beta_n3_check(1), std::invalid_argument);
}

TEST(Denominators, HarmonicFigureData) {
  const Figure1Data d = figure1_data(100);
  ASSERT_EQ(d.rows.size(), 100u);
  EXPECT_EQ(d.rows[0].ratio, 1);
  EXPECT_EQ(d.rows[5].L, 60);
  EXPECT_EQ(d.rows[5].D, 20);
  EXPECT_EQ(d.rows[5].ratio, 3);
  EXPECT_TRUE(d.divisibility.pass);
  for (std::size_t k = 1; k < d.rows.size(); ++k) EXPECT_EQ(d.rows[k].n, d.rows[k - 1].n + 1);
  EXPECT_THROW(figure1_data(0), std::invalid_argument);
}

TEST(Denominators, HarmonicDenominatorTheorem) {
  EXPECT_TRUE(harmonic_denominator_theorem(4).pass);
  EXPECT_EQ(harmonic(5).den(), 60);
  EXPECT_EQ(harmonic(6).den(), 20);
  EXPECT_EQ(harmonic(17).den(), 3 * harmonic(18).den());
  EXPECT_THROW(harmonic_denominator_theorem(0), std::invalid_argument);
}

TEST(Denominators, ScaledPowerMatching) {
  EXPECT_EQ(match_scaled_power(54, 2, 3), 3u);
  EXPECT_FALSE(match_scaled_power(2, 2, 3));
  EXPECT_EQ(match_scaled_power(2, 2, 3, 0), 0u);
  EXPECT_FALSE(match_scaled_power(12, 2, 3));
  EXPECT_TRUE(is_two_three_pow(18));
}

TEST(Denominators, SweepIsIndependentOfWorkerCount) {
  setenv("ITERLOG_THREADS", "1", 1);
  const auto a = alpha_beta_gamma_n2(25);
  setenv("ITERLOG_THREADS", "3", 1);
  const auto b = alpha_beta_gamma_n2(25);
  unsetenv("ITERLOG_THREADS");
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].n, b[k].n);
    EXPECT_EQ(a[k].alpha, b[k].alpha);
    EXPECT_EQ(a[k].gamma, b[k].gamma);
    EXPECT_EQ(a[k].annotation, b[k].annotation);
  }
}
