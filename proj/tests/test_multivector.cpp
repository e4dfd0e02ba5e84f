#include <gtest/gtest.h>

#include <cstdint>
#include <random>

#include "cliffkit/multivector.hpp"
#include "cliffkit/text_format.hpp"
#include "support.hpp"

using namespace cliffkit;
using MV = Multivector<double>;
using IMV = Multivector<std::int64_t>;

TEST(Multivector, ConstructionChecksLength) {
  EXPECT_THROW(MV(Signature(0, 2), std::vector<double>(3)), std::invalid_argument);
  EXPECT_NO_THROW(MV(Signature(0, 2), std::vector<double>(4)));
}

TEST(Multivector, SignatureMismatchThrows) {
  const MV a(Signature(0, 2));
  const MV b(Signature(2, 0));
  EXPECT_THROW(gp(a, b), std::invalid_argument);
  EXPECT_THROW(a + b, std::invalid_argument);
  EXPECT_THROW(scalar_product(a, b), std::invalid_argument);
}

TEST(GeometricProduct, OnePlusMinusVector) {
  const Signature sig(1, 0);
  const MV a = parse_multivector(sig, "1 + e1");
  const MV b = parse_multivector(sig, "1 - e1");
  EXPECT_EQ(a * b, MV(sig));
}

TEST(GeometricProduct, Quaternions) {
  const Signature h(0, 2);
  const MV i = MV::blade(h, BladeMask(1));
  const MV j = MV::blade(h, BladeMask(2));
  const MV k = MV::blade(h, BladeMask(3));
  const MV minus_one = MV::scalar(h, -1);
  EXPECT_EQ(i * j, k);
  EXPECT_EQ(j * k, i);
  EXPECT_EQ(k * i, j);
  EXPECT_EQ(j * i, -k);
  EXPECT_EQ(i * i, minus_one);
  EXPECT_EQ(j * j, minus_one);
  EXPECT_EQ(k * k, minus_one);
  EXPECT_EQ(i * j * k, minus_one);
}

TEST(GeometricProduct, MatchesOracleOnRandomIntegers) {
  std::mt19937_64 rng(11);
  for (const Signature &sig : fixtures::all_signatures(6)) {
    for (int t = 0; t < 5; ++t) {
      const MV a = fixtures::random_mv(sig, rng);
      const MV b = fixtures::random_mv(sig, rng);
      ASSERT_EQ(gp(a, b), fixtures::oracle_gp(a, b)) << to_string(sig);
    }
  }
}

TEST(GeometricProduct, Associative) {
  std::mt19937_64 rng(12);
  for (const Signature &sig : fixtures::all_signatures(5)) {
    for (int t = 0; t < 20; ++t) {
      const IMV a = fixtures::random_mv<std::int64_t>(sig, rng);
      const IMV b = fixtures::random_mv<std::int64_t>(sig, rng);
      const IMV c = fixtures::random_mv<std::int64_t>(sig, rng);
      ASSERT_EQ((a * b) * c, a * (b * c)) << to_string(sig);
    }
  }
}

TEST(GeometricProduct, Distributive) {
  std::mt19937_64 rng(13);
  for (const Signature &sig : fixtures::all_signatures(4)) {
    const IMV a = fixtures::random_mv<std::int64_t>(sig, rng);
    const IMV b = fixtures::random_mv<std::int64_t>(sig, rng);
    const IMV c = fixtures::random_mv<std::int64_t>(sig, rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * std::int64_t{3}) * b, std::int64_t{3} * (a * b));
  }
}

TEST(GradeProject, Definition) {
  const Signature sig(2, 0);
  const MV a = parse_multivector(sig, "1 + 2*e1 + 3*e12");
  EXPECT_EQ(grade_project(a, 1), parse_multivector(sig, "2*e1"));
  EXPECT_EQ(grade_project(a, 0), MV::scalar(sig, 1));
  EXPECT_EQ(grade_project(a, 2), parse_multivector(sig, "3*e12"));
  EXPECT_THROW(grade_project(a, 3), std::out_of_range);
  EXPECT_THROW(grade_project(a, -1), std::out_of_range);
}

TEST(GradeProject, PartitionOfUnity) {
  std::mt19937_64 rng(14);
  for (const Signature &sig : fixtures::all_signatures(7)) {
    const MV a = fixtures::random_mv(sig, rng);
    MV sum(sig);
    for (int k = 0; k <= sig.n(); ++k) {
      const MV part = grade_project(a, k);
      for (std::uint32_t m = 0; m < sig.blade_count(); ++m) {
        if (BladeMask(m).grade() != k) {
          ASSERT_EQ(part[BladeMask(m)], 0.0);
        }
      }
      sum += part;
    }
    EXPECT_EQ(sum, a);
  }
}

TEST(Involutions, BladeSigns) {
  const Signature sig(0, 3);
  const MV e1 = MV::blade(sig, BladeMask(1));
  const MV e12 = MV::blade(sig, BladeMask(3));
  const MV e123 = MV::blade(sig, BladeMask(7));
  const MV s = MV::scalar(sig, 2.5);

  EXPECT_EQ(principal_involution(e1), -e1);
  EXPECT_EQ(principal_involution(e12), e12);
  EXPECT_EQ(principal_involution(e123), -e123);

  EXPECT_EQ(conjugation(e1), -e1);
  EXPECT_EQ(conjugation(e12), -e12);
  EXPECT_EQ(conjugation(e123), e123);
  EXPECT_EQ(conjugation(s), s);

  EXPECT_EQ(reversion(e1), e1);
  EXPECT_EQ(reversion(e12), -e12);
  EXPECT_EQ(reversion(e123), -e123);
  EXPECT_EQ(reversion(s), s);
}

TEST(Involutions, ConjugationIsComposition) {
  std::mt19937_64 rng(15);
  for (const Signature &sig : fixtures::all_signatures(6)) {
    const MV a = fixtures::random_mv(sig, rng);
    EXPECT_EQ(conjugation(a), reversion(principal_involution(a)));
    EXPECT_EQ(conjugation(a), principal_involution(reversion(a)));
  }
}

TEST(Involutions, ProductLaws) {
  std::mt19937_64 rng(16);
  for (const Signature &sig : fixtures::all_signatures(6)) {
    for (int t = 0; t < 10; ++t) {
      const MV a = fixtures::random_mv(sig, rng);
      const MV b = fixtures::random_mv(sig, rng);
      const MV ab = fixtures::oracle_gp(a, b);
      ASSERT_EQ(principal_involution(ab), principal_involution(a) * principal_involution(b));
      ASSERT_EQ(reversion(ab), reversion(b) * reversion(a));
      ASSERT_EQ(conjugation(ab), conjugation(b) * conjugation(a));
      ASSERT_EQ(principal_involution(principal_involution(a)), a);
      ASSERT_EQ(reversion(reversion(a)), a);
      ASSERT_EQ(conjugation(conjugation(a)), a);
    }
  }
}

TEST(Involutions, LinearAndGradeWise) {
  std::mt19937_64 rng(17);
  const Signature sig(2, 3);
  const MV a = fixtures::random_mv(sig, rng);
  const MV b = fixtures::random_mv(sig, rng);
  EXPECT_EQ(reversion(2.0 * a + b), 2.0 * reversion(a) + reversion(b));
  for (std::uint32_t m = 0; m < sig.blade_count(); ++m) {
    EXPECT_EQ(std::abs(reversion(a)[BladeMask(m)]), std::abs(a[BladeMask(m)]));
    EXPECT_EQ(std::abs(conjugation(a)[BladeMask(m)]), std::abs(a[BladeMask(m)]));
  }
}

TEST(Coeff, Examples) {
  const Signature h(0, 2);
  EXPECT_EQ(coeff(parse_multivector(h, "5*e12"), BladeMask(3)), 5.0);
  const MV a = parse_multivector(h, "-7 + e1 + 2*e12");
  EXPECT_EQ(coeff(a, BladeMask(0)), -7.0);
  EXPECT_THROW(coeff(a, BladeMask(4)), std::out_of_range);
}

TEST(Coeff, ExhaustiveAgainstProductRoute) {
  std::mt19937_64 rng(18);
  for (const Signature &sig : fixtures::all_signatures(6)) {
    const MV a = fixtures::random_mv(sig, rng);
    for (std::uint32_t m = 0; m < sig.blade_count(); ++m) {
      const BladeMask i(m);
      // <a e^I>_0 formed with the full product
      const MV product = gp(a, MV::blade(sig, reciprocal_blade(sig, i)));
      ASSERT_EQ(product.scalar_part(), a[i]);
      ASSERT_EQ(coeff(a, i), a[i]);
    }
  }
}

TEST(ScalarProduct, MatchesFullProduct) {
  std::mt19937_64 rng(19);
  for (const Signature &sig : fixtures::all_signatures(5)) {
    const MV a = fixtures::random_mv(sig, rng);
    const MV b = fixtures::random_mv(sig, rng);
    EXPECT_EQ(scalar_product(a, b), gp(a, b).scalar_part());
  }
}

TEST(Multivector, IntegerScalarType) {
  const Signature sig(1, 1);
  const IMV a = IMV::blade(sig, BladeMask(3), 2);
  EXPECT_EQ((a * a).scalar_part(), 4); // e12^2 = +1 in R_{1,1}
  EXPECT_TRUE((a * a).is_scalar());
}
