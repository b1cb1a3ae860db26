#include <gtest/gtest.h>

#include "iterlog/closed_forms.hpp"
#include "iterlog/io.hpp"

using namespace iterlog;

TEST(Io, PolyRoundTrip) {
  const QPoly p{Rat(1, 3), Rat(0), Rat(-11, 18)};
  const json j = to_json(p);
  EXPECT_EQ(j.at("field"), "Q");
  EXPECT_EQ(j.at("coeffs")[2], "-11/18");
  EXPECT_EQ(poly_from_json<Rat>(j), p);
  const GPoly g{GaussRat(Rat(1), Rat(-2))};
  EXPECT_EQ(poly_from_json<GaussRat>(to_json(g)), g);
  const EPoly e{EisenRat::omega(), EisenRat(3)};
  EXPECT_EQ(poly_from_json<EisenRat>(to_json(e)), e);
}

TEST(Io, FieldTagMismatchRejected) {
  EXPECT_THROW(poly_from_json<GaussRat>(to_json(QPoly{Rat(1)})), std::invalid_argument);
  EXPECT_THROW(logexpr_from_json<Rat>(to_json(iterate(roots_case3(), 1))), std::invalid_argument);
}

TEST(Io, LogExprRoundTrip) {
  for (unsigned n = 0; n <= 5; ++n) {
    const auto e2 = iterate(roots_case2(), n);
    EXPECT_EQ(logexpr_from_json<GaussRat>(json::parse(to_json(e2).dump())), e2);
    const auto e3 = iterate(roots_case3(), n);
    EXPECT_EQ(logexpr_from_json<EisenRat>(json::parse(to_json(e3).dump())), e3);
  }
}

TEST(Io, DuplicateRootRejected) {
  json j = to_json(iterate(roots_case1(), 2));
  j["terms"].push_back(j["terms"][0]);
  EXPECT_THROW(logexpr_from_json<Rat>(j), std::invalid_argument);
}

TEST(Io, HumanFormFieldNames) {
  const json j2 = to_json(to_human2(iterate(roots_case2(), 1)));
  EXPECT_TRUE(j2.contains("A") && j2.contains("B") && j2.contains("C"));
  const json j3 = to_json(to_human3(iterate(roots_case3(), 1)));
  for (const char* k : {"A", "Api", "B", "C", "D"}) EXPECT_TRUE(j3.contains(k)) << k;
  EXPECT_EQ(j3.at("Api").at("coeffs")[0], "1/6");
}

TEST(Io, SerializationIsDeterministic) {
  EXPECT_EQ(to_json(iterate(roots_case3(), 4)).dump(), to_json(iterate(roots_case3(), 4)).dump());
}
