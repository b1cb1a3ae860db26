#include <gtest/gtest.h>

#include <cmath>

#include "iterlog/closed_forms.hpp"

using namespace iterlog;

namespace {

QPoly q(std::initializer_list<Rat> c) { return QPoly(c); }

long double to_ld(const Rat& r) { return static_cast<long double>(mpq_class(r.num(), r.den()).get_d()); }

long double eval_ld(const QPoly& p, long double x) {
  long double acc = 0;
  for (std::size_t k = p.size(); k-- > 0;) acc = acc * x + to_ld(p.coeff(k));
  return acc;
}

/// f_n(x) = sum_k (-1)^(k+1)/k (Nk)!/(Nk+n)! x^(Nk+n), |x| < 1.
long double taylor_iterate(unsigned N, unsigned n, long double x) {
  long double sum = 0;
  for (unsigned k = 1; k < 4000; ++k) {
    long double c = 1.0L / k;
    for (unsigned j = 1; j <= n; ++j) c /= static_cast<long double>(N * k + j);
    const long double term = c * std::pow(x, static_cast<long double>(N * k + n));
    sum += (k % 2 == 1) ? term : -term;
    if (std::fabs(term) < 1e-30L) break;
  }
  return sum;
}

}  // namespace

// Values below were frozen from an independent computer-algebra run
// (repeated symbolic integration of ln(1+x^2) and ln(1+x)).
TEST(ClosedForms, Case2DisplayedValues) {
  const HumanForm2 f1 = to_human2(iterate(roots_case2(), 1));
  EXPECT_EQ(f1.A, q({Rat(0), Rat(-2)}));
  EXPECT_EQ(f1.B, q({Rat(2)}));
  EXPECT_EQ(f1.C, q({Rat(0), Rat(1)}));
  const HumanForm2 f2 = to_human2(iterate(roots_case2(), 2));
  EXPECT_EQ(f2.A, q({Rat(0), Rat(0), Rat(-3, 2)}));
  EXPECT_EQ(f2.B, q({Rat(0), Rat(2)}));
  EXPECT_EQ(f2.C, q({Rat(-1, 2), Rat(0), Rat(1, 2)}));
  const HumanForm2 f3 = to_human2(iterate(roots_case2(), 3));
  EXPECT_EQ(f3.A, q({Rat(0), Rat(1, 3), Rat(0), Rat(-11, 18)}));
  EXPECT_EQ(f3.B, q({Rat(-1, 3), Rat(0), Rat(1)}));
  EXPECT_EQ(f3.C, q({Rat(0), Rat(-1, 2), Rat(0), Rat(1, 6)}));
  EXPECT_EQ(a_n2(4), q({Rat(0), Rat(0), Rat(7, 24), Rat(0), Rat(-25, 144)}));
  EXPECT_EQ(a_n2(5), q({Rat(0), Rat(-1, 60), Rat(0), Rat(47, 360), Rat(0), Rat(-137, 3600)}));
  EXPECT_EQ(b_n2(5), q({Rat(1, 60), Rat(0), Rat(-1, 6), Rat(0), Rat(1, 12)}));
  EXPECT_EQ(c_n2(5), q({Rat(0), Rat(1, 24), Rat(0), Rat(-1, 12), Rat(0), Rat(1, 120)}));
  EXPECT_EQ(to_human2(seed_log(roots_case2())), (HumanForm2{QPoly{}, QPoly{}, q({Rat(1)})}));
}

TEST(ClosedForms, Case1Family) {
  EXPECT_EQ(family_n1(0).B, q({Rat(1)}));
  EXPECT_TRUE(family_n1(0).A.is_zero());
  EXPECT_EQ(family_n1(1).A, q({Rat(0), Rat(-1)}));
  EXPECT_EQ(family_n1(1).B, q({Rat(1), Rat(1)}));
  EXPECT_EQ(family_n1(3).A, q({Rat(0), Rat(-1, 6), Rat(-5, 12), Rat(-11, 36)}));
  EXPECT_EQ(family_n1(4).A, q({Rat(0), Rat(-1, 24), Rat(-7, 48), Rat(-13, 72), Rat(-25, 288)}));
  EXPECT_EQ(family_n1(2).B, q({Rat(1, 2), Rat(1), Rat(1, 2)}));
  for (unsigned n = 0; n <= 20; ++n) {
    const Family1 h = to_human1(iterate(roots_case1(), n));
    EXPECT_EQ(h.A, family_n1(n).A) << n;
    EXPECT_EQ(h.B, family_n1(n).B) << n;
  }
}

TEST(ClosedForms, Case3DisplayedValues) {
  const HumanForm3 f1 = to_human3(iterate(roots_case3(), 1));
  EXPECT_EQ(f1.A0, q({Rat(0), Rat(-3)}));
  EXPECT_EQ(f1.Api, q({Rat(1, 6)}));
  EXPECT_EQ(f1.B, q({Rat(-1)}));
  EXPECT_EQ(f1.C, q({Rat(1), Rat(1)}));
  EXPECT_EQ(f1.D, q({Rat(-1, 2), Rat(1)}));
  const Family3 f0 = family_n3(0);
  EXPECT_TRUE(f0.B.is_zero());
  EXPECT_EQ(f0.C, q({Rat(1)}));
  EXPECT_EQ(f0.D, q({Rat(1)}));
  EXPECT_EQ(a_tilde_n3(1), q({Rat(0), Rat(-3)}));
  EXPECT_EQ(a_tilde_n3(2), q({Rat(0), Rat(0), Rat(-9, 4)}));
  EXPECT_EQ(a_tilde_n3(3), q({Rat(0), Rat(0), Rat(0), Rat(-11, 12)}));
  EXPECT_EQ(denom_lcm(a_tilde_n3(2)), 4);
  EXPECT_EQ(denom_lcm(a_tilde_n3(3)), 12);
}

TEST(ClosedForms, HumanFormsAgreeNumericallyWithTaylorSeries) {
  const long double tol = 1e-15L;
  for (long double x : {0.25L, 0.5L, 0.8L}) {
    for (unsigned n = 1; n <= 8; ++n) {
      const Family1 h1 = family_n1(n);
      EXPECT_NEAR(eval_ld(h1.A, x) + eval_ld(h1.B, x) * std::log1p(x), taylor_iterate(1, n, x), tol);

      const HumanForm2 h2{a_n2(n), b_n2(n), c_n2(n)};
      const long double v2 =
          eval_ld(h2.A, x) + eval_ld(h2.B, x) * std::atan(x) + eval_ld(h2.C, x) * std::log1p(x * x);
      EXPECT_NEAR(v2, taylor_iterate(2, n, x), tol) << "N=2 n=" << n;

      const HumanForm3 h3 = to_human3(iterate(roots_case3(), n));
      const long double s3 = std::sqrt(3.0L);
      const long double pi = std::acos(-1.0L);
      const long double u = s3 * std::atan((1 - 2 * x) / s3);
      const long double v3 = eval_ld(h3.A0, x) + s3 * pi * eval_ld(h3.Api, x) + eval_ld(h3.B, x) * u +
                             eval_ld(h3.C, x) * std::log1p(x) + eval_ld(h3.D, x) * std::log(x * x - x + 1);
      EXPECT_NEAR(v3, taylor_iterate(3, n, x), tol) << "N=3 n=" << n;
    }
  }
}

TEST(ClosedForms, GeneralLinearLog) {
  EXPECT_EQ(phi_n(Rat(5), 1), q({Rat(0), Rat(1)}));
  EXPECT_EQ(phi_n(Rat(3), 2), q({Rat(0), Rat(3), Rat(3, 2)}));  // x(x+a) + x^2/2
  const auto g = iter_log_linear(Rat(7), 1);
  EXPECT_EQ(g.pure, q({Rat(0), Rat(-1)}));
  EXPECT_EQ(g.log_coeff, q({Rat(7), Rat(1)}));
  EXPECT_EQ(g.ln_a_coeff, q({Rat(-7)}));
  for (unsigned n = 1; n <= 10; ++n) {
    const auto e = iter_log_linear(Rat(1), n).normalized();
    EXPECT_EQ(e.poly(), family_n1(n).A);
    EXPECT_EQ(e.coeff(Rat(1)), family_n1(n).B);
  }
  EXPECT_THROW(iter_log_linear(Rat(0), 2), std::invalid_argument);
}

TEST(ClosedForms, ConjugatePairGivesArctanLogSplit) {
  // the i and -i contributions combine into real B arctan + C ln(1+x^2)
  for (unsigned n = 1; n <= 12; ++n) {
    const auto e = iter_log_linear(unit_i(), n).normalized() + iter_log_linear(-unit_i(), n).normalized();
    const HumanForm2 h = to_human2(e);
    EXPECT_EQ(h.A, a_n2(n));
    EXPECT_EQ(h.B, b_n2(n));
    EXPECT_EQ(h.C, c_n2(n));
  }
}

TEST(ClosedForms, HCoefficients) {
  EXPECT_EQ(h_nk(3, 0), Rat(7, 6));
  for (unsigned n = 2; n <= 20; ++n) EXPECT_EQ(h_nk(n, 0), Rat(static_cast<long>(n)) - harmonic(n)) << n;
  EXPECT_THROW(h_nk(5, 2), std::out_of_range);
  EXPECT_THROW(h_nk(1, 0), std::out_of_range);
  for (unsigned n = 2; n <= 12; ++n)
    for (unsigned k = 0; k + 1 <= n / 2; ++k) {
      Rat s;
      for (unsigned j = 2 * k + 1; j <= n - 1; ++j) s += g_nk(n, k, j);
      EXPECT_EQ(s, h_nk(n, k)) << n << " " << k;
    }
}

TEST(ClosedForms, InitialValues) {
  EXPECT_EQ(b_n2(3).eval(Rat(0)), Rat(-1, 3));
  EXPECT_EQ(init_b2(1), Rat(2));
  EXPECT_EQ(init_b2(2), Rat(0));
  EXPECT_EQ(init_c2(2), Rat(-1, 2));
  EXPECT_EQ(c_n2(0), q({Rat(1)}));
  EXPECT_THROW(a_n2(0), std::invalid_argument);
}

TEST(ClosedForms, BasisRoundTrips) {
  for (unsigned n = 0; n <= 15; ++n) {
    const auto e2 = iterate(roots_case2(), n);
    EXPECT_EQ(from_human2(to_human2(e2)), e2);
    const auto e3 = iterate(roots_case3(), n);
    EXPECT_EQ(from_human3(to_human3(e3)), e3);
  }
  HumanForm3 bad = to_human3(iterate(roots_case3(), 2));
  bad.Api += q({Rat(1)});
  EXPECT_THROW(from_human3(bad), std::invalid_argument);
  EXPECT_THROW(to_human2(seed_log(std::vector<GaussRat>{GaussRat(2)})), std::invalid_argument);
  EXPECT_THROW(to_human3(seed_log(std::vector<EisenRat>{EisenRat(2)})), std::invalid_argument);
  EXPECT_THROW(to_human1(seed_log(std::vector<Rat>{Rat(2)})), std::invalid_argument);
}

TEST(ClosedForms, CotangentPairs) {
  EXPECT_EQ(cot_pair(1).P, q({Rat(0), Rat(2)}));
  EXPECT_EQ(cot_pair(1).Q, q({Rat(2)}));
  // P/Q = (x^2-1)/(2x) and (x^3-3x)/(3x^2-1)
  EXPECT_EQ(cot_pair(2).P * q({Rat(0), Rat(2)}), cot_pair(2).Q * q({Rat(-1), Rat(0), Rat(1)}));
  EXPECT_EQ(cot_pair(3).P * q({Rat(-1), Rat(0), Rat(3)}), cot_pair(3).Q * q({Rat(0), Rat(-3), Rat(0), Rat(1)}));
}

TEST(ClosedForms, EisensteinCharacters) {
  EXPECT_EQ(chi3(0), 0);
  EXPECT_EQ(chi3(1), 1);
  EXPECT_EQ(chi3(2), -1);
  EXPECT_EQ(chi3(-1), -1);
  EXPECT_EQ(lambda3(3), 1);
  EXPECT_EQ(lambda3(4), 0);
  for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(family_n3(n).C, binom_power(Rat(1), n).scaled(detail::inv_factorial(n)));
}
