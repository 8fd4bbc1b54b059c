#include <gtest/gtest.h>

#include "ptdiag/errors.hpp"
#include "ptdiag/exact_arith.hpp"
#include "test_support.hpp"

using namespace ptdiag;
using ptdiag::test::g;
using ptdiag::test::q;

TEST(IntGcd, Basics) {
  EXPECT_EQ(int_gcd(12, 18), 6);
  EXPECT_EQ(int_gcd(18, 12), 6);
  EXPECT_EQ(int_gcd(-12, 18), 6);
  EXPECT_EQ(int_gcd(0, 7), 7);
  EXPECT_EQ(int_gcd(7, 0), 7);
  EXPECT_EQ(int_gcd(0, 0), 0);
  EXPECT_EQ(int_gcd(17, 5), 1);
}

TEST(IntGcd, AgreesWithBruteForce) {
  for (long a = -30; a <= 30; ++a) {
    for (long b = -30; b <= 30; ++b) {
      long best = 0;
      for (long d = 1; d <= 30 && (a != 0 || b != 0); ++d) {
        if (a % d == 0 && b % d == 0) best = d;
      }
      ASSERT_EQ(int_gcd(a, b), best) << a << ", " << b;
    }
  }
}

TEST(IntGcd, LargeValues) {
  const BigInt a("123456789012345678901234567890");
  const BigInt b("987654321098765432109876543210");
  const BigInt d = int_gcd(a, b);
  EXPECT_EQ(a % d, 0);
  EXPECT_EQ(b % d, 0);
  EXPECT_EQ(int_gcd(a / d, b / d), 1);
}

TEST(BigRational, Canonical) {
  const BigRational x(BigInt(6), BigInt(-4));
  EXPECT_EQ(x.numerator(), -3);
  EXPECT_EQ(x.denominator(), 2);
  EXPECT_EQ(x.to_string(), "-3/2");
  EXPECT_EQ(q(4, 2).to_string(), "2");
  EXPECT_TRUE(q(4, 2).is_integer());
  EXPECT_EQ(q(0, 5).denominator(), 1);
}

TEST(BigRational, ZeroDenominatorThrows) { EXPECT_THROW(BigRational(BigInt(1), BigInt(0)), DomainError); }

TEST(BigRational, Arithmetic) {
  EXPECT_EQ(q(1, 2) + q(1, 3), q(5, 6));
  EXPECT_EQ(q(1, 2) - q(1, 3), q(1, 6));
  EXPECT_EQ(q(2, 3) * q(3, 4), q(1, 2));
  EXPECT_EQ(q(2, 3) / q(4, 9), q(3, 2));
  EXPECT_EQ(-q(2, 3), q(-2, 3));
  EXPECT_THROW(q(1) / q(0), DomainError);
  EXPECT_EQ(q(-2, 3).abs(), q(2, 3));
  EXPECT_EQ(q(2, 3).pow(3), q(8, 27));
  EXPECT_EQ(q(7, 2).floor(), 3);
  EXPECT_EQ(q(-7, 2).floor(), -4);
  EXPECT_EQ(q(7, 2).ceil(), 4);
  EXPECT_EQ(q(-7, 2).ceil(), -3);
}

TEST(BigRational, Ordering) {
  EXPECT_LT(q(1, 3), q(1, 2));
  EXPECT_GT(q(-1, 3), q(-1, 2));
  EXPECT_EQ(q(2, 4), q(1, 2));
  EXPECT_EQ(q(-5, 7).sign(), -1);
  EXPECT_EQ(q(0).sign(), 0);
}

TEST(BigRational, Parse) {
  EXPECT_EQ(BigRational::parse("3"), q(3));
  EXPECT_EQ(BigRational::parse("-3/6"), q(-1, 2));
  EXPECT_EQ(BigRational::parse("10/4"), q(5, 2));
  EXPECT_THROW(BigRational::parse(""), InputError);
  EXPECT_THROW(BigRational::parse("1/0"), InputError);
  EXPECT_THROW(BigRational::parse("1.5"), InputError);
  EXPECT_THROW(BigRational::parse("a"), InputError);
  EXPECT_THROW(BigRational::parse("1/"), InputError);
}

TEST(BigRational, Decimal) {
  EXPECT_EQ(q(1, 3).to_decimal(4), "0.3333");
  EXPECT_EQ(q(-5, 2).to_decimal(2), "-2.50");
  EXPECT_EQ(q(7).to_decimal(0), "7");
}

TEST(BigRational, FieldAxiomsOnSamples) {
  ptdiag::test::Rng rng(11);
  for (int k = 0; k < 500; ++k) {
    const BigRational a = rng.rational(9, 7), b = rng.rational(9, 7), c = rng.rational(9, 7);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    if (!b.is_zero()) ASSERT_EQ((a / b) * b, a);
  }
}

TEST(GaussianRational, Arithmetic) {
  const GaussianRational i = GaussianRational::i();
  EXPECT_EQ(i * i, g(-1));
  EXPECT_EQ(g(1, 2) * g(3, -1), g(5, 5));
  EXPECT_EQ(g(5, 5) / g(3, -1), g(1, 2));
  EXPECT_EQ(g(1, 2).conj(), g(1, -2));
  EXPECT_EQ(g(3, 4).abs2(), q(25));
  EXPECT_TRUE(g(3).is_real());
  EXPECT_FALSE(g(3, 1).is_real());
  EXPECT_THROW(g(1, 1) / g(0), DomainError);
}

TEST(GaussianRational, Printing) {
  EXPECT_EQ(g(1, 2).to_string(), "1 + 2*i");
  EXPECT_EQ(GaussianRational(q(0), q(-3, 2)).to_string(), "-3/2*i");
  EXPECT_EQ(g(1, -1).to_string(), "1 - i");
  EXPECT_EQ(g(0).to_string(), "0");
  EXPECT_EQ(g(-4).to_string(), "-4");
}

TEST(GaussianRational, InverseOnSamples) {
  ptdiag::test::Rng rng(12);
  for (int k = 0; k < 500; ++k) {
    const GaussianRational z = rng.gaussian(5, 5);
    if (z.is_zero()) continue;
    ASSERT_EQ(z * (GaussianRational(1) / z), GaussianRational(1));
    ASSERT_EQ((z * z.conj()).im(), q(0));
  }
}
