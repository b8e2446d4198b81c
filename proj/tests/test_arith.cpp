#include <gtest/gtest.h>

#include <random>

#include "affcat/arith.hpp"
#include "random_poly.hpp"

using namespace affcat;

namespace {

RatQ random_ratq(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), len(1, 3), low(-2, 2);
  auto lp = [&]() {
    std::vector<mpz_class> c;
    int n = len(rng);
    for (int k = 0; k < n; ++k) c.emplace_back(coef(rng));
    return Laurent::from_coeffs(low(rng), c);
  };
  Laurent d = lp();
  while (d.is_zero()) d = lp();
  return RatQ(lp(), d);
}

}  // namespace

TEST(Laurent, ArithmeticAndPrinting) {
  Laurent a = Laurent::q(2) - Laurent(1) + Laurent::q(-2);
  EXPECT_EQ(a.str(), "q^2 - 1 + q^-2");
  EXPECT_EQ((a * Laurent::q(-1)).low(), -3);
  EXPECT_EQ(a.bar(), a);
  EXPECT_EQ((Laurent::q(1) - Laurent::q(1)).str(), "0");
  EXPECT_EQ(Laurent::monomial(-3, 1).str(), "-3*q");
}

TEST(RatQ, CanonicalFormIsStructural) {
  // (q^2 - 1)/(q - 1) reduces to q + 1.
  RatQ a(Laurent::q(2) - Laurent(1), Laurent::q(1) - Laurent(1));
  EXPECT_TRUE(a.is_laurent());
  EXPECT_EQ(a, RatQ(Laurent::q(1) + Laurent(1)));
  // Sign and content normalisation: (-2q)/(-4q^3) = 1/(2q^2) = q^-2/2.
  RatQ b(Laurent::monomial(-2, 1), Laurent::monomial(-4, 3));
  EXPECT_EQ(b.den(), Laurent(2));
  EXPECT_EQ(b.num(), Laurent::q(-2));
  EXPECT_EQ(b * RatQ(2), RatQ::q(-2));
}

TEST(RatQ, FieldAxiomsOnRandomTriples) {
  std::mt19937 rng(7);
  for (int n = 0; n < 200; ++n) {
    RatQ a = random_ratq(rng), b = random_ratq(rng), c = random_ratq(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a - a, RatQ());
    if (!a.is_zero()) {
      EXPECT_TRUE((a * a.inverse()).is_one());
      EXPECT_EQ((b / a) * a, b);
    }
    EXPECT_EQ((a * b).bar(), a.bar() * b.bar());
  }
}

TEST(RatQ, ParseRoundTrip) {
  std::mt19937 rng(11);
  for (int n = 0; n < 100; ++n) {
    RatQ a = random_ratq(rng);
    EXPECT_EQ(RatQ::parse(a.str()), a) << a.str();
  }
  EXPECT_EQ(RatQ::parse("q^-1"), RatQ::q(-1));
  EXPECT_EQ(RatQ::parse("(q^2 - 1)/(q - 1)"), RatQ::parse("q + 1"));
  EXPECT_THROW(RatQ::parse("q + z"), std::runtime_error);
}

TEST(QInt, Values) {
  EXPECT_TRUE(qint(0).is_zero());
  EXPECT_EQ(qint(2), RatQ::q(1) + RatQ::q(-1));
  EXPECT_EQ(qint(3), RatQ::q(2) + RatQ(1) + RatQ::q(-2));
  for (int a = -6; a <= 6; ++a) {
    // Oracle: the defining quotient, computed through the generic gcd path.
    RatQ quotient = (RatQ::q(a) - RatQ::q(-a)) / (RatQ::q(1) - RatQ::q(-1));
    EXPECT_EQ(qint(a), quotient) << a;
    EXPECT_TRUE(qint(a).is_laurent());
    EXPECT_EQ(qint(-a), -qint(a));
  }
}

TEST(GradedPoly, ParsePrintAndGrading) {
  GradedPoly p = GradedPoly::parse("x1^2 - 1/2*y*x2 + 3");
  EXPECT_EQ(GradedPoly::parse(p.str()), p);
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_EQ(p.degree(), 4);
  EXPECT_EQ(p.homogeneous_component(0), GradedPoly(3));
  EXPECT_EQ(p.homogeneous_component(4) + p.homogeneous_component(0), p);
  std::mt19937 rng(3);
  for (int n = 0; n < 100; ++n) {
    GradedPoly a = testutil::random_poly(rng, 4, 3), b = testutil::random_poly(rng, 4, 3);
    EXPECT_EQ(GradedPoly::parse(a.str()), a);
    for (int d = 0; d <= 12; d += 2)
      EXPECT_EQ((a + b).homogeneous_component(d),
                a.homogeneous_component(d) + b.homogeneous_component(d));
  }
  EXPECT_THROW(GradedPoly::parse("x0 + 1"), std::runtime_error);
}

TEST(GradedPoly, ExactDivision) {
  GradedPoly a = GradedPoly::parse("x1 - x2 + y"), b = GradedPoly::parse("x3^2 - 2*y*x1 + 5");
  EXPECT_EQ(exact_divide(a * b, a), b);
  EXPECT_THROW(exact_divide(b, a), std::domain_error);
}

TEST(Demazure, SpecExamples) {
  const int r = 4;
  EXPECT_TRUE(demazure(1, r, GradedPoly::parse("x1 + x2")).is_zero());
  EXPECT_EQ(demazure(1, r, GradedPoly::x(1)), GradedPoly(-1));
  EXPECT_EQ(demazure(r, r, GradedPoly::x(1)), GradedPoly(1));
}

TEST(Demazure, AgreesWithDefiningQuotient) {
  std::mt19937 rng(5);
  for (int r : {3, 4}) {
    for (int n = 0; n < 40; ++n) {
      GradedPoly p = testutil::random_poly(rng, r, 3);
      for (int i = 1; i <= r; ++i) {
        GradedPoly d = demazure(i, r, p);
        EXPECT_EQ(d, exact_divide(p - sigma_act(i, r, p), simple_root(i, r)));
        EXPECT_TRUE(is_sigma_invariant(i, r, d));
        EXPECT_TRUE(demazure(i, r, d).is_zero());
      }
    }
  }
}

TEST(Demazure, TwistedLeibnizAndDegree) {
  std::mt19937 rng(9);
  const int r = 3;
  for (int n = 0; n < 40; ++n) {
    GradedPoly p = testutil::random_poly(rng, r, 2), q = testutil::random_poly(rng, r, 2);
    for (int i = 1; i <= r; ++i) {
      EXPECT_EQ(demazure(i, r, p * q),
                demazure(i, r, p) * q + sigma_act(i, r, p) * demazure(i, r, q));
      GradedPoly h = p.homogeneous_component(4);
      GradedPoly d = demazure(i, r, h);
      if (!d.is_zero()) {
        EXPECT_TRUE(d.is_homogeneous());
        EXPECT_EQ(d.degree(), 2);
      }
    }
  }
}

TEST(SplitInvariant, RecomposesWithInvariantParts) {
  const int r = 3;
  auto [a0, b0] = split_invariant(1, r, GradedPoly::x(2));
  EXPECT_TRUE(a0.is_zero());
  EXPECT_EQ(b0, GradedPoly(1));
  GradedPoly gen = GradedPoly::parse("(x3 + 1/2*y)*(x1 - 1/2*y)");
  auto [a1, b1] = split_invariant(r, r, gen);
  EXPECT_EQ(a1, gen);
  EXPECT_TRUE(b1.is_zero());
  std::mt19937 rng(13);
  for (int n = 0; n < 60; ++n) {
    GradedPoly p = testutil::random_poly(rng, r, 3);
    for (int i = 1; i <= r; ++i) {
      auto [a, b] = split_invariant(i, r, p);
      EXPECT_EQ(a + basis_b(i, r) * b, p);
      EXPECT_TRUE(is_sigma_invariant(i, r, a));
      EXPECT_TRUE(is_sigma_invariant(i, r, b));
    }
  }
}

TEST(AffineX, Wraparound) {
  const int r = 3;
  EXPECT_EQ(affine_x(4, r), GradedPoly::parse("x1 - y"));
  EXPECT_EQ(affine_x(0, r), GradedPoly::parse("x3 + y"));
  EXPECT_EQ(affine_x(-3, r), GradedPoly::parse("x3 + 2*y"));
  EXPECT_EQ(rho_act(1, r, GradedPoly::x(3)), GradedPoly::parse("x1 - y"));
  EXPECT_EQ(sigma_act(3, r, GradedPoly::x(1)), GradedPoly::parse("x3 + y"));
}
