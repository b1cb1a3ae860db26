#include <gtest/gtest.h>

#include "iterlog/recurrences.hpp"

using namespace iterlog;

TEST(Recurrences, GenerateFamily2MatchesDisplayedValues) {
  const auto fam = generate_family2(5);
  EXPECT_EQ(fam[1], (HumanForm2{QPoly{Rat(0), Rat(-2)}, QPoly{Rat(2)}, QPoly{Rat(0), Rat(1)}}));
  EXPECT_EQ(fam[2], (HumanForm2{QPoly{Rat(0), Rat(0), Rat(-3, 2)}, QPoly{Rat(0), Rat(2)},
                                QPoly{Rat(-1, 2), Rat(0), Rat(1, 2)}}));
  for (unsigned n = 1; n <= 5; ++n) {
    EXPECT_EQ(fam[n].A, a_n2(n));
    EXPECT_EQ(fam[n].B, b_n2(n));
    EXPECT_EQ(fam[n].C, c_n2(n));
    EXPECT_EQ(fam[n].C.derivative(), fam[n - 1].C);
  }
  EXPECT_THROW(generate_family2(0), std::invalid_argument);
}

TEST(Recurrences, Rec2OnCase2Sequences) {
  std::vector<QPoly> A{QPoly{}}, B, C;
  for (unsigned n = 0; n <= 30; ++n) {
    B.push_back(b_n2(n));
    C.push_back(c_n2(n));
    if (n >= 1) A.push_back(a_n2(n));
  }
  EXPECT_TRUE(verify_rec2(A, 30).pass);
  EXPECT_TRUE(verify_rec2(B, 30).pass);
  EXPECT_TRUE(verify_rec2(C, 30).pass);
  std::vector<GPoly> plus;
  for (unsigned n = 0; n <= 30; ++n)
    plus.push_back(binom_power(unit_i(), n).scaled(GaussRat(detail::inv_factorial(n))));
  EXPECT_TRUE(verify_rec2(plus, 30).pass);
}

TEST(Recurrences, Rec3OnCase3Sequences) {
  std::vector<QPoly> At, B, C, D;
  for (unsigned n = 0; n <= 30; ++n) {
    At.push_back(a_tilde_n3(n));
    const Family3 f = family_n3(n);
    B.push_back(f.B);
    C.push_back(f.C);
    D.push_back(f.D);
  }
  EXPECT_TRUE(verify_rec3(At, 30).pass);
  EXPECT_TRUE(verify_rec3(B, 30).pass);
  EXPECT_TRUE(verify_rec3(C, 30).pass);
  EXPECT_TRUE(verify_rec3(D, 30).pass);
}

TEST(Recurrences, PerturbationFailsAtThatIndex) {
  std::vector<QPoly> B;
  for (unsigned n = 0; n <= 20; ++n) B.push_back(b_n2(n));
  B[11] += QPoly::monomial(Rat(1, 1000), 4);
  const Verdict v = verify_rec2(B, 20);
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.first_failure_n, 11);
  EXPECT_FALSE(v.residual.is_null());

  std::vector<QPoly> C;
  for (unsigned n = 0; n <= 20; ++n) C.push_back(family_n3(n).C);
  C[9] += QPoly::constant(Rat(1));
  EXPECT_EQ(verify_rec3(C, 20).first_failure_n, 9);
}

TEST(Recurrences, WrongSequencesFail) {
  // the case-3 family does not satisfy the case-2 recurrence and vice versa
  std::vector<QPoly> C3, C2;
  for (unsigned n = 0; n <= 10; ++n) {
    C3.push_back(family_n3(n).C);
    C2.push_back(c_n2(n));
  }
  EXPECT_FALSE(verify_rec2(C3, 10).pass);
  EXPECT_FALSE(verify_rec3(C2, 10).pass);
}

TEST(Recurrences, ShortSequenceRejected) {
  std::vector<QPoly> B{b_n2(0), b_n2(1)};
  EXPECT_THROW(verify_rec2(B, 5), std::invalid_argument);
}
