#include <gtest/gtest.h>

#include "ptdiag/errors.hpp"
#include "ptdiag/format.hpp"
#include "ptdiag/poly.hpp"
#include "test_support.hpp"

using namespace ptdiag;
using ptdiag::test::g;
using ptdiag::test::gpoly;
using ptdiag::test::q;
using ptdiag::test::qpoly;

TEST(Degree, MinusInfinity) {
  EXPECT_TRUE(QPoly().degree().is_minus_infinity());
  EXPECT_LT(QPoly().degree(), Degree(0));
  EXPECT_THROW(QPoly().degree().value(), InvariantViolation);
  EXPECT_EQ(qpoly({1, 2, 3}).degree(), 2u);
}

TEST(Poly, TrimsAndCompares) {
  EXPECT_EQ(qpoly({1, 2, 0, 0}), qpoly({1, 2}));
  EXPECT_TRUE(qpoly({0, 0}).is_zero());
  EXPECT_THROW(QPoly().leading(), DomainError);
  EXPECT_EQ(qpoly({1, 2}) - qpoly({1, 2}), QPoly());
}

TEST(Poly, Arithmetic) {
  // (x - 1)(x + 1) = x^2 - 1
  EXPECT_EQ(qpoly({-1, 1}) * qpoly({1, 1}), qpoly({-1, 0, 1}));
  EXPECT_EQ(pow(qpoly({1, 1}), 3), qpoly({1, 3, 3, 1}));
  EXPECT_EQ(derivative(qpoly({5, 3, 0, 2})), qpoly({3, 0, 6}));
  EXPECT_EQ(evaluate(qpoly({1, -3, 2}), BigRational(2)), q(3));
}

TEST(PolyDivmod, Basics) {
  const auto [quo, rem] = poly_divmod(qpoly({-1, 0, 0, 1}), qpoly({-1, 1}));
  EXPECT_EQ(quo, qpoly({1, 1, 1}));
  EXPECT_TRUE(rem.is_zero());
  EXPECT_THROW(poly_divmod(qpoly({1}), QPoly()), DomainError);
  const auto [q2, r2] = poly_divmod(qpoly({1, 1}), qpoly({0, 0, 1}));
  EXPECT_TRUE(q2.is_zero());
  EXPECT_EQ(r2, qpoly({1, 1}));
  EXPECT_THROW(exact_quotient(qpoly({1, 0, 1}), qpoly({-1, 1})), InvariantViolation);
}

TEST(PolyDivmod, IdentityOnRandomInputs) {
  ptdiag::test::Rng rng(21);
  for (int k = 0; k < 500; ++k) {
    std::vector<GaussianRational> a(static_cast<std::size_t>(rng.integer(0, 7))), b(static_cast<std::size_t>(rng.integer(1, 5)));
    for (auto& c : a) c = rng.gaussian();
    for (auto& c : b) c = rng.gaussian();
    const GPoly pa(a), pb(b);
    if (pb.is_zero()) continue;
    const auto [quo, rem] = poly_divmod(pa, pb);
    ASSERT_EQ(quo * pb + rem, pa);
    ASSERT_LT(rem.degree(), pb.degree());
  }
}

TEST(PolyGcd, SharedLinearFactor) {
  // gcd((x-1)^2 (x-2), (x-1)(x-3)) = x - 1
  const QPoly a = pow(qpoly({-1, 1}), 2) * qpoly({-2, 1});
  const QPoly b = qpoly({-1, 1}) * qpoly({-3, 1});
  EXPECT_EQ(poly_gcd(a, b), qpoly({-1, 1}));
  EXPECT_EQ(poly_gcd(qpoly({0, 2}), QPoly()), qpoly({0, 1}));
  EXPECT_THROW(poly_gcd(QPoly(), QPoly()), DomainError);
  EXPECT_EQ(poly_gcd(qpoly({1, 1}), qpoly({2, 1})), qpoly({1}));
}

TEST(PolyGcd, ConstructedCommonFactor) {
  ptdiag::test::Rng rng(22);
  for (int k = 0; k < 300; ++k) {
    // gcd of (x - r1)(x - r2)... built from distinct small roots.
    std::vector<long> roots{-3, -2, -1, 0, 1, 2, 3};
    std::shuffle(roots.begin(), roots.end(), rng.engine());
    QPoly common(BigRational(1)), a(BigRational(1)), b(BigRational(1));
    const long nc = rng.integer(0, 2), na = rng.integer(0, 2), nb = rng.integer(0, 2);
    std::size_t at = 0;
    for (long i = 0; i < nc; ++i) common = common * qpoly({-roots[at++], 1});
    for (long i = 0; i < na; ++i) a = a * qpoly({-roots[at++], 1});
    for (long i = 0; i < nb; ++i) b = b * qpoly({-roots[at++], 1});
    const BigRational sa = rng.rational(3, 3), sb = rng.rational(3, 3);
    if (sa.is_zero() || sb.is_zero()) continue;
    ASSERT_EQ(poly_gcd((common * a).scaled(sa), (common * b).scaled(sb)), common);
  }
}

TEST(Squarefree, Check) {
  const QPoly p = pow(qpoly({-1, 1}), 2) * qpoly({-2, 1});
  const auto r = squarefree_check(p);
  EXPECT_FALSE(r.is_squarefree);
  EXPECT_EQ(r.witness, qpoly({-1, 1}));
  EXPECT_TRUE(squarefree_check(qpoly({2, -3, 1})).is_squarefree);
  EXPECT_EQ(squarefree_check(qpoly({2, -3, 1})).witness, qpoly({1}));
  EXPECT_THROW(squarefree_check(qpoly({5})), DomainError);
  EXPECT_EQ(squarefree_part(p.scaled(q(3))), qpoly({2, -3, 1}));
  // lambda^2 from the single-eigenstate example: witness lambda
  EXPECT_EQ(squarefree_check(gpoly({0, 0, 1})).witness, gpoly({0, 1}));
}

TEST(Squarefree, ComplexRoots) {
  // (x - i)^2 (x + i) is not square-free; witness x - i.
  const GPoly xi = ptdiag::test::lambda_minus(g(0, 1));
  const GPoly p = xi * xi * ptdiag::test::lambda_minus(g(0, -1));
  const auto r = squarefree_check(p);
  EXPECT_FALSE(r.is_squarefree);
  EXPECT_EQ(r.witness, xi);
  EXPECT_EQ(squarefree_part(p), gpoly({1, 0, 1}));
}

TEST(Squarefree, ConstructedMultiplicities) {
  ptdiag::test::Rng rng(23);
  for (int k = 0; k < 500; ++k) {
    GPoly p(GaussianRational(1)), radical(GaussianRational(1));
    bool repeated = false;
    std::vector<GaussianRational> used;
    const long factors = rng.integer(1, 4);
    for (long f = 0; f < factors; ++f) {
      const GaussianRational r = rng.gaussian(3, 2);
      if (std::find(used.begin(), used.end(), r) != used.end()) continue;
      used.push_back(r);
      const unsigned mult = static_cast<unsigned>(rng.integer(1, 3));
      repeated = repeated || mult > 1;
      p = p * pow(ptdiag::test::lambda_minus(r), mult);
      radical = radical * ptdiag::test::lambda_minus(r);
    }
    const GaussianRational scale = rng.gaussian(3, 3);
    if (scale.is_zero()) continue;
    p = p.scaled(scale);
    ASSERT_EQ(squarefree_check(p).is_squarefree, !repeated);
    ASSERT_EQ(squarefree_part(p), radical);
  }
}

TEST(Format, DescendingPowers) {
  EXPECT_EQ(format_poly(qpoly({1, 0, -3, 0, 1}), "eps"), "eps^4 - 3*eps^2 + 1");
  EXPECT_EQ(format_poly(gpoly({2, -3, 1}), "λ"), "λ^2 - 3*λ + 2");
  EXPECT_EQ(format_poly(QPoly(), "x"), "0");
  EXPECT_EQ(format_poly(qpoly({0, -1}), "x"), "-x");
  EXPECT_EQ(format_poly(GPoly(std::vector<GaussianRational>{g(0, 0), g(0, -1)}), "eps"), "-i*eps");
  EXPECT_EQ(format_poly(GPoly(std::vector<GaussianRational>{g(1, 1)}), "eps"), "(1 + i)");
}
