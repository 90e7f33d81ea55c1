#include <gtest/gtest.h>

#include "tcalab/mpoly.hpp"
#include "tcalab/upoly.hpp"

using namespace tcalab;

namespace {

MPoly t(int i) { return MPoly::var(i); }
MPoly c(long n, long d = 1) { return MPoly::constant(Rational(n, d)); }

// exp(t_i) through weighted degree B.
MPoly exp_single(int i, int B) {
  MPoly r(VarFamily::t);
  for (int k = 0; i * k <= B; ++k) r.add(Monomial::var(i, k), Rational(1) / Rational(factorial(k)));
  return r;
}

}  // namespace

TEST(Monomial, DegreesAndPartitions) {
  const Monomial m = Monomial::of_partition({3, 1, 1});
  EXPECT_EQ(m.exponent(1), 2);
  EXPECT_EQ(m.exponent(3), 1);
  EXPECT_EQ(m.exponent(2), 0);
  EXPECT_EQ(m.total_degree(), 3);
  EXPECT_EQ(m.weighted_degree(), 5);
  EXPECT_EQ(m.as_partition(), (Partition{3, 1, 1}));
  EXPECT_EQ(Monomial::var(2) * Monomial::var(2), Monomial::var(2, 2));
  EXPECT_EQ(Monomial(std::vector<int>{1, 0, 0}), Monomial::var(1));
}

TEST(MPoly, RingArithmetic) {
  const MPoly f = t(1) + c(1), g = t(1) - c(1);
  EXPECT_EQ(f * g, t(1) * t(1) - c(1));
  EXPECT_EQ(f - f, MPoly{});
  EXPECT_TRUE((f - f).is_zero());
  EXPECT_EQ((t(2) * c(1, 2)).coeff(Monomial::var(2)), Rational(1, 2));
  EXPECT_EQ((f * f * f).coeff(Monomial::var(1, 2)), 3);
  EXPECT_EQ((t(1) * t(3)).weighted_degree(), 4);
  EXPECT_EQ((t(1) * t(3) + t(5)).variable_support(), (std::set<int>{1, 3, 5}));
}

TEST(MPoly, FamiliesDoNotMix) {
  EXPECT_THROW(MPoly::var(1, VarFamily::a) + t(1), Error);
  EXPECT_NO_THROW(MPoly::var(1, VarFamily::a) + MPoly(VarFamily::t));
}

TEST(MPoly, TruncationAndNegation) {
  const MPoly f = c(1) + t(1) + t(2) + t(1) * t(2);
  EXPECT_EQ(f.truncated(2), c(1) + t(1) + t(2));
  EXPECT_EQ(MPoly::mul_truncated(f, f, 2), (f * f).truncated(2));
  EXPECT_EQ(f.negate_variables(), c(1) - t(1) - t(2) + t(1) * t(2));
}

TEST(MPoly, Derivative) {
  EXPECT_EQ((t(1) * t(1) * c(1, 2) + t(2)).derivative(1), t(1));
  EXPECT_TRUE(c(7).derivative(1).is_zero());
  EXPECT_EQ((t(1) * t(2) * t(2)).derivative(2), c(2) * t(1) * t(2));
}

TEST(MPoly, Evaluate) {
  const MPoly f = t(1) * t(1) - c(3) * t(2) + c(1, 2);
  EXPECT_EQ(f.evaluate({Rational(2), Rational(1)}), Rational(3, 2));
  EXPECT_EQ(f.evaluate({}), Rational(1, 2));
}

TEST(MPoly, FallingFactorial) {
  const MPoly ff = falling_factorial(1, 3);
  for (int a = 0; a <= 6; ++a) EXPECT_EQ(ff.evaluate({Rational(a)}), Rational(a * (a - 1) * (a - 2)));
  EXPECT_EQ(falling_factorial(2, 0), MPoly::constant(1, VarFamily::a));
}

TEST(MPoly, ExpT0IsProductOfExponentials) {
  const int B = 9;
  MPoly prod = MPoly::constant(1);
  for (int i = 1; i <= B; ++i) prod = MPoly::mul_truncated(prod, exp_single(i, B), B);
  EXPECT_EQ(exp_T0_truncated(B), prod);
}

TEST(MPoly, StringForm) {
  EXPECT_EQ((c(1, 3) * t(1) * t(1) * t(1) - t(3)).str(), "1/3*t1^3 - t3");
  EXPECT_EQ(MPoly{}.str(), "0");
}

TEST(UPoly, Basics) {
  const UPoly p = UPoly::linear(1) * UPoly::linear(-1);
  EXPECT_EQ(p, UPoly({Rational(-1), Rational(0), Rational(1)}));
  EXPECT_EQ(p(3), 8);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ((p - p).degree(), -1);
}
