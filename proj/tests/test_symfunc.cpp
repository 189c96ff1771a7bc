#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wmac/symfunc.hpp"

using namespace wmac;

namespace {

MultiPartition key(int ell, std::initializer_list<std::pair<int, Partition>> parts) {
  MultiPartition k(ell);
  for (const auto& [i, lam] : parts) k[i] = lam;
  return k;
}

SymFunc pgen(int ell, int n, int i) { return SymFunc::generator(ell, Basis::p, n, i); }

SymFunc random_p(std::mt19937& rng, int ell, int deg) {
  SymFunc f(ell, Basis::p);
  auto mps = multipartitions_of(deg, ell);
  std::uniform_int_distribution<std::size_t> pick(0, mps.size() - 1);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int k = 0; k < 3; ++k) f.add_term(mps[pick(rng)], Scalar(c(rng)) + q_pow(c(rng)) * t_pow(c(rng)));
  return f;
}

}  // namespace

TEST(SymFunc, DegreeOneCoincidence) {
  SymFunc h1 = SymFunc::generator(3, Basis::h, 1, 2);
  EXPECT_EQ(convert(h1, Basis::p).terms(), pgen(3, 1, 2).terms());
}

// Oracle: exp(p1 z + p2 z^2 / 2) to second order.
TEST(SymFunc, H2FromExponential) {
  SymFunc h2 = convert(SymFunc::generator(2, Basis::h, 2, 1), Basis::p);
  SymFunc expect(2, Basis::p);
  expect.add_term(key(2, {{1, {1, 1}}}), Scalar(Rational(1, 2)));
  expect.add_term(key(2, {{1, {2}}}), Scalar(Rational(1, 2)));
  EXPECT_EQ(h2.terms(), expect.terms());
}

TEST(SymFunc, ColumnSchurIsElementary) {
  SymFunc s11 = SymFunc::monomial(3, Basis::s, key(3, {{1, {1, 1}}}));
  SymFunc e = convert(s11, Basis::e);
  EXPECT_EQ(e.terms(), SymFunc::monomial(3, Basis::e, key(3, {{1, {2}}})).terms());
}

// Oracle: Murnaghan-Nakayama characters.
TEST(SymFunc, SchurMatchesCharacters) {
  for (int n = 1; n <= 7; ++n)
    for (const Partition& lam : partitions_of(n)) {
      auto got = classical_to_p(Basis::s, lam);
      for (const Partition& mu : partitions_of(n)) {
        Rational expect = Rational(oracle::mn_character(lam, mu)) / oracle::z_of(mu);
        Rational have = got.count(mu) ? got.at(mu) : Rational(0);
        EXPECT_EQ(have, expect) << to_string(lam) << " " << to_string(mu);
      }
    }
}

// Oracle: Newton identities n h_n = sum_k p_k h_{n-k} and n e_n = sum_k (-1)^{k-1} p_k e_{n-k}.
TEST(SymFunc, NewtonIdentities) {
  for (int n = 1; n <= 6; ++n)
    for (Basis b : {Basis::h, Basis::e}) {
      SymFunc lhs = convert(SymFunc::generator(1, b, n, 0), Basis::p).scaled(Scalar(n));
      SymFunc rhs(1, Basis::p);
      for (int k = 1; k <= n; ++k) {
        SymFunc term = multiply(pgen(1, k, 0), SymFunc::generator(1, b, n - k, 0));
        if (b == Basis::e && k % 2 == 0) term = term.scaled(Scalar(-1));
        rhs += term;
      }
      EXPECT_EQ(lhs.terms(), rhs.terms()) << basis_name(b) << " " << n;
    }
}

TEST(SymFunc, MultiplyBasics) {
  SymFunc p10 = pgen(3, 1, 0);
  EXPECT_EQ(multiply(p10, p10).terms(), SymFunc::monomial(3, Basis::p, key(3, {{0, {1, 1}}})).terms());
  std::mt19937 rng(1);
  SymFunc f = random_p(rng, 3, 2);
  EXPECT_EQ(multiply(f, SymFunc::one(3)).terms(), f.terms());
  EXPECT_THROW(multiply(SymFunc::one(2), SymFunc::one(3)), std::invalid_argument);
}

TEST(SymFunc, ProductOfTwoColorsInSchur) {
  SymFunc prod = multiply(SymFunc::generator(3, Basis::h, 1, 0), SymFunc::generator(3, Basis::h, 1, 1));
  SymFunc s = convert(prod, Basis::s);
  EXPECT_EQ(s.terms(), SymFunc::monomial(3, Basis::s, key(3, {{0, {1}}, {1, {1}}})).terms());
  EXPECT_EQ(convert(s, Basis::p).terms(), prod.terms());
}

TEST(SymFunc, ConversionsRoundTrip) {
  std::mt19937 rng(2);
  for (int ell : {1, 2, 3})
    for (int deg = 1; deg <= 4; ++deg) {
      SymFunc f = random_p(rng, ell, deg);
      for (Basis b : {Basis::h, Basis::e, Basis::s, Basis::hhat, Basis::ehat}) {
        SymFunc g = convert(f, b);
        EXPECT_EQ(g.degree(), deg);
        EXPECT_EQ(convert(g, Basis::p).terms(), f.terms()) << basis_name(b);
      }
    }
}

TEST(SymFunc, PhiQOnGenerator) {
  for (int i = 0; i < 3; ++i) {
    SymFunc img = pleth(pgen(3, 1, i), PlethMap::PhiQ);
    SymFunc expect = pgen(3, 1, i) - pgen(3, 1, i - 1).scaled(q_pow(1));
    EXPECT_EQ(img.terms(), expect.terms());
  }
}

TEST(SymFunc, PhiQInvSingleColor) {
  for (int n = 1; n <= 4; ++n) {
    SymFunc img = pleth(pgen(1, n, 0), PlethMap::PhiQInv);
    EXPECT_EQ(img.terms(), pgen(1, n, 0).scaled((Scalar(1) - q_pow(n)).inverse()).terms());
  }
}

TEST(SymFunc, PlethInverseLaws) {
  std::mt19937 rng(4);
  for (int ell = 1; ell <= 4; ++ell)
    for (int deg = 1; deg <= (ell <= 2 ? 6 : 3); ++deg) {
      SymFunc f = random_p(rng, ell, deg);
      EXPECT_EQ(pleth(pleth(f, PlethMap::PhiQ), PlethMap::PhiQInv).terms(), f.terms());
      EXPECT_EQ(pleth(pleth(f, PlethMap::PhiQInv), PlethMap::PhiQ).terms(), f.terms());
      EXPECT_EQ(pleth(pleth(f, PlethMap::PhiTinv), PlethMap::PhiTinvInv).terms(), f.terms());
      EXPECT_EQ(pleth(pleth(f, PlethMap::PhiTinvInv), PlethMap::PhiTinv).terms(), f.terms());
    }
}

TEST(SymFunc, PlethIsMultiplicative) {
  std::mt19937 rng(6);
  for (PlethMap m : {PlethMap::PhiQ, PlethMap::PhiQInv, PlethMap::PhiTinv, PlethMap::PhiTinvInv})
    for (int iter = 0; iter < 3; ++iter) {
      SymFunc f = random_p(rng, 3, 1 + iter % 2), g = random_p(rng, 3, 1);
      EXPECT_EQ(pleth(multiply(f, g), m).terms(), multiply(pleth(f, m), pleth(g, m)).terms());
    }
}

TEST(SymFunc, HatOfCoreIsOne) {
  SymFunc f = hhat(Partition{3, 1}, 3);
  EXPECT_EQ(f.terms(), SymFunc::one(3).terms());
  ASSERT_TRUE(f.core().has_value());
  EXPECT_EQ(*f.core(), core_quotient(Partition{3, 1}, 3).charges);
  EXPECT_EQ(ehat(Partition{3, 1}, 3).terms(), SymFunc::one(3).terms());
}

TEST(SymFunc, HatSingleColor) {
  SymFunc f = hhat(Partition{1}, 1);
  EXPECT_EQ(f.terms(), pgen(1, 1, 0).scaled((Scalar(1) - q_pow(1)).inverse()).terms());
}

// Oracle: the inverse formula at n = 1 written out over three colors.
TEST(SymFunc, HatThreeColors) {
  CoreQuotient cq = core_quotient(Partition{3}, 3);
  int c = -1;
  for (int i = 0; i < 3; ++i)
    if (!cq.quot[i].empty()) c = i;
  ASSERT_GE(c, 0);
  SymFunc expect(3, Basis::p);
  Scalar den = (Scalar(1) - q_pow(3)).inverse();
  for (int k = 0; k < 3; ++k) expect.add_term(key(3, {{((c - k) % 3 + 3) % 3, {1}}}), q_pow(k) * den);
  EXPECT_EQ(hhat(Partition{3}, 3).terms(), expect.terms());
}

TEST(SymFunc, TrivialCoefficient) {
  for (int n = 1; n <= 4; ++n) {
    EXPECT_TRUE(trivial_coefficient(SymFunc::monomial(3, Basis::s, key(3, {{0, {n}}})), n).is_one());
    EXPECT_TRUE(trivial_coefficient(SymFunc::monomial(3, Basis::s, key(3, {{1, {n}}})), n).is_zero());
    EXPECT_TRUE(trivial_coefficient(SymFunc::generator(3, Basis::h, n, 0), n).is_one());
  }
  SymFunc mixed = pgen(2, 1, 0) + pgen(2, 2, 0);
  EXPECT_THROW(trivial_coefficient(mixed, 1), std::invalid_argument);
}

TEST(SymFunc, DegreeCap) {
  set_degree_cap(3);
  EXPECT_THROW(convert(SymFunc::generator(2, Basis::h, 4, 0), Basis::p), std::invalid_argument);
  set_degree_cap(12);
  EXPECT_NO_THROW(convert(SymFunc::generator(2, Basis::h, 4, 0), Basis::p));
}

TEST(SymFunc, JsonRoundTrip) {
  SymFunc f = hhat(Partition{4, 2}, 3);
  SymFunc g = symfunc_from_json(to_json(f));
  EXPECT_EQ(g.terms(), f.terms());
  EXPECT_EQ(g.core(), f.core());
  EXPECT_EQ(g.basis(), Basis::p);
  EXPECT_FALSE(f.latex().empty());
}
