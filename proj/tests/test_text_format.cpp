#include <gtest/gtest.h>

#include <random>

#include "cliffkit/text_format.hpp"
#include "support.hpp"

using namespace cliffkit;
using MV = Multivector<double>;

TEST(TextFormat, ParsesTerms) {
  const Signature sig(3, 0);
  const MV a = parse_multivector(sig, "3.5*e13 - 2*e2 + 1");
  EXPECT_EQ(a[BladeMask(0b101)], 3.5);
  EXPECT_EQ(a[BladeMask(0b010)], -2.0);
  EXPECT_EQ(a[BladeMask(0)], 1.0);
  EXPECT_EQ(a[BladeMask(0b111)], 0.0);
}

TEST(TextFormat, ScalarSpellings) {
  const Signature sig(1, 0);
  EXPECT_EQ(parse_multivector(sig, "4"), MV::scalar(sig, 4));
  EXPECT_EQ(parse_multivector(sig, "4*e0"), MV::scalar(sig, 4));
  EXPECT_EQ(parse_multivector(sig, "e0"), MV::scalar(sig, 1));
  EXPECT_EQ(parse_multivector(sig, "-e1 + e1"), MV(sig));
}

TEST(TextFormat, ReducesUnorderedIndices) {
  const Signature h(0, 2);
  EXPECT_EQ(parse_multivector(h, "e21"), parse_multivector(h, "-e12"));
  EXPECT_EQ(parse_multivector(h, "e11"), MV::scalar(h, -1));
  EXPECT_EQ(parse_multivector(Signature(2, 0), "e11"), MV::scalar(Signature(2, 0), 1));
}

TEST(TextFormat, HighIndices) {
  const Signature sig(12, 0);
  const MV a = parse_multivector(sig, "2*e1abc");
  EXPECT_EQ(a[BladeMask(0b1110'0000'0001)], 2.0);
  EXPECT_EQ(format_multivector(a), "2*e1abc");
}

TEST(TextFormat, Errors) {
  const Signature sig(0, 2);
  EXPECT_THROW(parse_multivector(sig, ""), std::invalid_argument);
  EXPECT_THROW(parse_multivector(sig, "e3"), std::invalid_argument);
  EXPECT_THROW(parse_multivector(sig, "2*"), std::invalid_argument);
  EXPECT_THROW(parse_multivector(sig, "1 2"), std::invalid_argument);
  EXPECT_THROW(parse_multivector(sig, "x"), std::invalid_argument);
  EXPECT_THROW(parse_multivector(sig, "e"), std::invalid_argument);
}

TEST(TextFormat, Formatting) {
  const Signature sig(3, 0);
  EXPECT_EQ(format_multivector(MV(sig)), "0");
  EXPECT_EQ(format_multivector(parse_multivector(sig, "3.5*e13 - 2*e2 + 1")),
            "1 - 2*e2 + 3.5*e13");
  EXPECT_EQ(format_multivector(parse_multivector(sig, "-e12 + e3")), "-e12 + e3");
  EXPECT_EQ(format_multivector(Multivector<long long>::scalar(sig, -4)), "-4");
}

TEST(TextFormat, RoundTripProperty) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(-1e3, 1e3);
  for (const Signature &sig : fixtures::all_signatures(6)) {
    MV a(sig);
    for (auto &c : a.coeffs())
      c = (rng() & 1) ? dist(rng) : 0.0;
    ASSERT_EQ(parse_multivector(sig, format_multivector(a)), a);
  }
}
