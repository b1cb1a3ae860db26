#include <gtest/gtest.h>

#include "iterlog/scalars.hpp"

using namespace iterlog;

TEST(Rat, CanonicalForm) {
  EXPECT_EQ(Rat(BigInt(6), BigInt(-4)).str(), "-3/2");
  EXPECT_EQ(Rat(0).str(), "0/1");
  EXPECT_EQ(Rat(5).pretty(), "5");
  EXPECT_EQ(Rat::parse("10/4"), Rat(5, 2));
  EXPECT_EQ(Rat::parse("-7"), Rat(-7));
}

TEST(Rat, Arithmetic) {
  const Rat a(1, 3), b(-1, 6);
  EXPECT_EQ(a + b, Rat(1, 6));
  EXPECT_EQ(a - b, Rat(1, 2));
  EXPECT_EQ(a * b, Rat(-1, 18));
  EXPECT_EQ(a / b, Rat(-2));
  EXPECT_EQ(b.inverse(), Rat(-6));
  EXPECT_LT(b, a);
  EXPECT_TRUE(Rat(4, 2).is_integer());
  EXPECT_FALSE(a.is_integer());
  EXPECT_EQ(b.sign(), -1);
}

TEST(Rat, Errors) {
  EXPECT_THROW(Rat(BigInt(1), BigInt(0)), std::domain_error);
  EXPECT_THROW(Rat(1) / Rat(0), std::domain_error);
  EXPECT_THROW(Rat(0).inverse(), std::domain_error);
}

TEST(GaussRat, FieldAxioms) {
  const GaussRat i = GaussRat::i();
  EXPECT_EQ(i * i, GaussRat(-1));
  const GaussRat z(Rat(3), Rat(-4));
  EXPECT_EQ(z.norm(), Rat(25));
  EXPECT_EQ(z * z.conj(), GaussRat(Rat(25)));
  EXPECT_EQ(z / z, GaussRat(1));
  EXPECT_EQ((GaussRat(1) / z) * z, GaussRat(1));
  EXPECT_THROW(GaussRat(1) / GaussRat(), std::domain_error);
}

TEST(EisenRat, OmegaRelations) {
  const EisenRat w = EisenRat::omega();
  const EisenRat wb = EisenRat::omega_bar();
  EXPECT_EQ(w * w, wb);
  EXPECT_EQ(w * w * w, EisenRat(1));
  EXPECT_EQ(w + wb, EisenRat(-1));
  EXPECT_EQ(w.conj(), wb);
  EXPECT_EQ((w - wb) * (w - wb), EisenRat(-3));
  EXPECT_EQ(w.norm(), Rat(1));
  EXPECT_EQ(w.real_part(), Rat(-1, 2));
  const EisenRat z(Rat(2), Rat(5, 3));
  EXPECT_EQ(z * z.conj(), EisenRat(z.norm()));
  EXPECT_EQ((EisenRat(1) / z) * z, EisenRat(1));
  EXPECT_THROW(EisenRat(1) / EisenRat(), std::domain_error);
}

TEST(Scalars, RationalDowncast) {
  EXPECT_EQ(to_rational(GaussRat(Rat(2, 3))), Rat(2, 3));
  EXPECT_THROW(to_rational(GaussRat::i()), std::logic_error);
  EXPECT_EQ(to_rational(EisenRat(Rat(-1))), Rat(-1));
  EXPECT_THROW(to_rational(EisenRat::omega()), std::logic_error);
}

TEST(Scalars, Rendering) {
  EXPECT_EQ(to_string(GaussRat::i()), "i");
  EXPECT_EQ(to_string(-GaussRat::i()), "-i");
  EXPECT_EQ(to_string(GaussRat(Rat(1, 2), Rat(-3))), "(1/2 - 3*i)");
  EXPECT_EQ(to_string(EisenRat::omega_bar()), "(-1 - w)");
  EXPECT_EQ(to_string(EisenRat(Rat(0))), "0");
}

TEST(Scalars, CanonicalOrderIsStrict) {
  const canonical_less<GaussRat> less;
  const GaussRat i = GaussRat::i();
  EXPECT_TRUE(less(-i, i) != less(i, -i));
  EXPECT_FALSE(less(i, i));
}
