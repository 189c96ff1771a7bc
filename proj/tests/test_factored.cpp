#include <gtest/gtest.h>

#include "wmac/factored.hpp"

using namespace wmac;

namespace {

LinForm x(int v) { return LinForm::variable(v); }
LinForm c(const Scalar& a) { return LinForm::constant(a); }

}  // namespace

TEST(LinForm, Normalize) {
  LinForm f = x(0).scaled(q_pow(2)) - x(1);
  Scalar lead = f.normalize();
  EXPECT_EQ(lead, q_pow(2));
  EXPECT_TRUE(f.coeff(0).is_one());
  EXPECT_EQ(f.coeff(1), -q_pow(-2));
}

TEST(FactoredSum, ConstantFactorsAbsorbed) {
  FactoredSum f;
  f.add_term(Scalar(3), {{c(q_pow(1)), 2}, {x(0).scaled(Scalar(2)), 1}});
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f.terms().begin()->second, q_pow(2) * Scalar(6));
}

TEST(FactoredSum, PoleCancelsInSum) {
  // (x0 - q x1)/(x0 - x1) - (x1 - q x1)/(x0 - x1) = 1
  FactoredSum a;
  a.add_term(Scalar(1), {{x(0) - x(1).scaled(q_pow(1)), 1}, {x(0) - x(1), -1}});
  FactoredSum b;
  b.add_term(Scalar(1) - q_pow(1), {{x(1), 1}, {x(0) - x(1), -1}});
  FactoredSum f = a - b;
  FactoredSum at = substitute(f, 0, x(1));
  EXPECT_TRUE(is_zero(at - FactoredSum(Scalar(1))));
  EXPECT_TRUE(is_zero(f - FactoredSum(Scalar(1))));
}

TEST(FactoredSum, PoleSurvives) {
  FactoredSum f;
  f.add_term(Scalar(1), {{x(0) - x(1), -1}});
  EXPECT_THROW(substitute(f, 0, x(1)), PoleSurvived);
  Expansion e = expand_at(f, 0, x(1));
  EXPECT_EQ(e.singular.size(), 1u);
  EXPECT_TRUE(e.regular.is_empty() || is_zero(e.regular));
}

TEST(FactoredSum, SecondOrderExpansion) {
  // x0^2 / (x0 - 1)^2 at x0 = 1 + u: 1/u^2 + 2/u + 1
  FactoredSum f;
  f.add_term(Scalar(1), {{x(0), 2}, {x(0) - c(Scalar(1)), -2}});
  Expansion e = expand_at(f, 0, c(Scalar(1)));
  EXPECT_EQ(e.regular.constant_value(), Scalar(1));
  EXPECT_EQ(e.singular.at(1).constant_value(), Scalar(2));
  EXPECT_EQ(e.singular.at(2).constant_value(), Scalar(1));
}

TEST(FactoredSum, LimitAtInfinity) {
  FactoredSum f;
  f.add_term(Scalar(1), {{x(0).scaled(q_pow(1)) - c(Scalar(1)), 1}, {x(0) - c(Scalar(1)), -1}});
  EXPECT_EQ(limit_at_infinity(f, 0).constant_value(), q_pow(1));
  FactoredSum g = FactoredSum::variable(0);
  EXPECT_THROW(limit_at_infinity(g, 0), PoleSurvived);
  FactoredSum h = FactoredSum::variable(0, -1);
  EXPECT_TRUE(limit_at_infinity(h, 0).constant_value().is_zero());
}

TEST(FactoredSum, InvertVariable) {
  FactoredSum f;
  f.add_term(Scalar(1), {{x(0) - c(q_pow(1)), 1}});
  FactoredSum g = invert_variable(f, 0);
  Rational s(2), w(3);
  std::vector<Rational> pt{Rational(5, 7)};
  std::vector<Rational> inv{Rational(7, 5)};
  EXPECT_EQ(g.eval(s, w, pt), f.eval(s, w, inv));
}

TEST(FactoredSum, ZeroTest) {
  FactoredSum f = FactoredSum::variable(0) * FactoredSum::variable(1);
  EXPECT_FALSE(is_zero(f));
  EXPECT_TRUE(is_zero(f - FactoredSum::variable(1) * FactoredSum::variable(0)));
  FactoredSum sq;
  sq.add_term(Scalar(1), {{x(0) + x(1), 2}});
  FactoredSum expanded = FactoredSum::variable(0, 2) + FactoredSum::variable(1, 2) +
                         (FactoredSum::variable(0) * FactoredSum::variable(1)).scaled(Scalar(2));
  EXPECT_TRUE(is_zero(sq - expanded));
}

TEST(FactoredSum, Renamed) {
  FactoredSum f;
  f.add_term(Scalar(1), {{x(0) - x(1).scaled(q_pow(1)), 1}});
  FactoredSum g = f.renamed({1, 0});
  std::vector<Rational> pt{Rational(2), Rational(3)};
  std::vector<Rational> sw{Rational(3), Rational(2)};
  EXPECT_EQ(g.eval(Rational(5), Rational(7), pt), f.eval(Rational(5), Rational(7), sw));
}

TEST(FactoredSum, Binomial) {
  EXPECT_EQ(binomial(-2, 3), Rational(-4));
  EXPECT_EQ(binomial(5, 2), Rational(10));
  EXPECT_EQ(binomial(2, 3), Rational(0));
}
