#include <gtest/gtest.h>

#include "wmac/fock.hpp"

using namespace wmac;

namespace {

constexpr int kEll = 3;

int mod(int a, int m) { return ((a % m) + m) % m; }

ShuffleElement single(int ell, int color, const FactoredSum& f = FactoredSum(Scalar(1))) {
  DegreeVector k(ell, 0);
  k[color] = 1;
  return ShuffleElement{ell, k, f, false};
}

// Nodes x of color p and y of color p + 1 with y immediately left of x (horizontal) or below x (vertical).
bool has_adjacent_pair(const std::vector<Node>& added, int p, int ell, bool horizontal) {
  for (const Node& x : added) {
    if (mod(x.content(), ell) != mod(p, ell)) continue;
    for (const Node& y : added) {
      if (mod(y.content(), ell) != mod(p + 1, ell)) continue;
      if (horizontal && y.b == x.b && y.a + 1 == x.a) return true;
      if (!horizontal && y.a == x.a && y.b == x.b + 1) return true;
    }
  }
  return false;
}

std::vector<Partition> partitions_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (const Partition& lam : partitions_of(k)) out.push_back(lam);
  return out;
}

}  // namespace

TEST(Norm, Examples) {
  EXPECT_TRUE(n_norm({}, kEll).is_one());
  EXPECT_TRUE(n_norm({1}, kEll).is_one());
  EXPECT_EQ(n_norm({3}, kEll), (Scalar(1) - Scalar::qt(2, -1)) * (Scalar(1) - Scalar::qt(3, 0)));
  // At ell = 1 every hook counts: (2) has hooks 2 and 1.
  EXPECT_EQ(n_norm({2}, 1), (Scalar(1) - Scalar::qt(1, -1)) * (Scalar(1) - Scalar::qt(2, 0)) *
                                (Scalar(1) - Scalar::qt(0, -1)) * (Scalar(1) - Scalar::qt(1, 0)));
}

TEST(Currents, SmallestCases) {
  CurrentAction e = e_action({}, 0, kEll);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].node, (Node{1, 1}));
  EXPECT_TRUE(e[0].spectral.is_one());
  EXPECT_TRUE(e[0].coefficient.is_one());
  EXPECT_TRUE(e_action({}, 1, kEll).empty());
  EXPECT_EQ(e_action({}, 2, kEll, 2).size(), 1u);

  CurrentAction f = f_action({1}, 0, kEll);
  ASSERT_EQ(f.size(), 1u);
  EXPECT_EQ(f[0].node, (Node{1, 1}));
  EXPECT_TRUE(f[0].coefficient.is_one());
  EXPECT_THROW(e_action({}, 0, 2), std::invalid_argument);
}

TEST(Currents, CornerProducts) {
  // Adding (2,1) to (1,1): the only other color-2 corner is the addable (1,3).
  CurrentAction e = e_action({1, 1}, 2, kEll);
  ASSERT_EQ(e.size(), 2u);
  for (const CurrentEntry& x : e) {
    Node other = x.node == Node{2, 1} ? Node{1, 3} : Node{2, 1};
    Scalar r = x.node.character() / other.character();
    Scalar expect = x.node.content() > other.content() ? Scalar(1) / (qq_pow(1) - qq_pow(1) / r)
                                                       : Scalar(1) / (Scalar(1) - r);
    EXPECT_EQ(x.coefficient, expect);
  }
}

TEST(Psi, Examples) {
  std::vector<PsiFactor> vac = psi_eigenvalue({}, 0, kEll);
  ASSERT_EQ(vac.size(), 1u);
  Scalar z = Scalar::qt(2, 3);
  EXPECT_EQ(psi_at(vac, z), (qq_pow(-1) - qq_pow(1) / z) / (Scalar(1) - Scalar(1) / z));
  EXPECT_TRUE(psi_eigenvalue({}, 1, kEll).empty());
  EXPECT_TRUE(psi_at(psi_eigenvalue({}, 1, kEll), z).is_one());

  Corners cr = corners({3}, kEll, 1);
  std::vector<PsiFactor> three = psi_eigenvalue({3}, 1, kEll);
  EXPECT_EQ(three.size(), cr.addable.size() + cr.removable.size());
  Scalar expect(1);
  for (const Node& n : cr.addable)
    expect *= (qq_pow(-1) - qq_pow(1) * n.character() / z) / (Scalar(1) - n.character() / z);
  for (const Node& n : cr.removable)
    expect *= (qq_pow(1) - qq_pow(-1) * n.character() / z) / (Scalar(1) - n.character() / z);
  EXPECT_EQ(psi_at(three, z), expect);
}

TEST(Psi, ConstantTermMatchesCoreCharges) {
  for (int p = 0; p < kEll; ++p)
    for (const Partition& lam : partitions_up_to(9)) {
      CoreQuotient cq = core_quotient(lam, kEll);
      for (int i = 0; i < kEll; ++i) {
        // Color i relative to the highest weight p sees the content color i - p.
        const int c = mod(i - p, kEll);
        const int pairing = cq.charges[c] - cq.charges[mod(c - 1, kEll)];
        const int vacuum = i == p ? 1 : 0;
        std::vector<PsiFactor> psi = psi_eigenvalue(lam, i, kEll, p);
        EXPECT_EQ(psi_at_zero(psi), qq_pow(vacuum + pairing)) << to_string(lam) << " i=" << i;
        EXPECT_EQ(psi_at_infinity(psi), qq_pow(-vacuum - pairing));
      }
    }
}

TEST(ShuffleAction, ScalarActsDiagonally) {
  ShuffleElement c = constant_element(kEll, DegreeVector(kEll, 0), Scalar(5));
  FockVector v = basis_vector({2, 1}, kEll);
  FockVector out = shuffle_action(c, v);
  ASSERT_EQ(out.terms.size(), 1u);
  EXPECT_EQ(out.terms.at({2, 1}), Scalar(5));
}

TEST(ShuffleAction, SingleNodeIsRaisingCurrent) {
  // x^k on one variable of color i acts by e-coefficient times chi^k.
  for (const Partition& lam : partitions_up_to(5))
    for (int i = 0; i < kEll; ++i) {
      FactoredSum x2 = FactoredSum::variable(0, 2);
      FockVector out = shuffle_action(single(kEll, i, x2), basis_vector(lam, kEll));
      CurrentAction e = e_action(lam, i, kEll);
      ASSERT_EQ(out.terms.size(), e.size());
      for (const CurrentEntry& x : e)
        EXPECT_EQ(out.terms.at(add_node(lam, x.node)), x.coefficient * x.spectral.pow(2));
    }
}

TEST(ShuffleAction, FSupportOnStrips) {
  for (int p = 0; p < kEll; ++p) {
    FockVector out = shuffle_action(F_pn(p, 1, kEll), basis_vector({}, kEll));
    std::set<Partition> support;
    for (const auto& [mu, c] : out.terms) support.insert(mu);
    EXPECT_EQ(support, (std::set<Partition>{{3}, {2, 1}, {1, 1, 1}})) << "p=" << p;
  }
}

TEST(ShuffleAction, OrderIndependentForConstants) {
  // Every addition order is compared internally; a mismatch throws.
  for (const Partition& lam : partitions_up_to(4)) {
    EXPECT_NO_THROW(shuffle_action(constant_element(kEll, {1, 1, 1}, Scalar(1)), basis_vector(lam, kEll)));
    EXPECT_NO_THROW(shuffle_action(constant_element(4, {1, 1, 1, 1}, Scalar(1)), basis_vector(lam, 4)));
  }
}

TEST(ShuffleAction, ProductActsAsComposition) {
  std::vector<ShuffleElement> gens;
  for (int i = 0; i < kEll; ++i) {
    gens.push_back(single(kEll, i));
    gens.push_back(single(kEll, i, FactoredSum::variable(0)));
  }
  std::vector<Partition> sources = partitions_up_to(4);
  for (const ShuffleElement& f : gens)
    for (const ShuffleElement& g : gens) {
      SparseMatrix lhs = operator_columns(shuffle_product(f, g), sources);
      std::vector<Partition> mids = partitions_up_to(5);
      SparseMatrix rhs = compose(operator_columns(f, mids), operator_columns(g, sources));
      EXPECT_TRUE(matrices_equal(lhs, rhs));
    }
}

TEST(ShuffleAction, DegreeBookkeeping) {
  for (const Partition& lam : partitions_up_to(4)) {
    FockVector out = shuffle_action(F_pn(1, 1, kEll), basis_vector(lam, kEll));
    for (const auto& [mu, c] : out.terms) EXPECT_EQ(size(mu), size(lam) + kEll);
  }
}

TEST(ShuffleAction, SymbolicSpectralParameter) {
  FockVector v = basis_vector({1}, kEll);
  v.symbolic_u = true;
  FactoredSum x2 = FactoredSum::variable(0, 2);
  FockVector out = shuffle_action(single(kEll, 1, x2), v);
  EXPECT_EQ(out.u_degree, 2);
  FockVector plain = shuffle_action(single(kEll, 1, x2), basis_vector({1}, kEll));
  EXPECT_EQ(out.terms, plain.terms);

  int d = -1;
  Scalar c = shuffle_coefficient(F_pn(0, 1, kEll), {}, {2, 1}, 0, &d);
  EXPECT_EQ(c, shuffle_coefficient(F_pn(0, 1, kEll), {}, {2, 1}));
  FockVector f = basis_vector({}, kEll);
  f.symbolic_u = true;
  EXPECT_EQ(shuffle_action(F_pn(0, 1, kEll), f).u_degree, d);
}

TEST(ShuffleAction, ColoredExtensions) {
  std::vector<Partition> ext = colored_extensions({}, {1, 1, 1}, kEll);
  EXPECT_EQ(std::set<Partition>(ext.begin(), ext.end()), (std::set<Partition>{{3}, {2, 1}, {1, 1, 1}}));
  EXPECT_TRUE(colored_extensions({}, {0, 1, 0}, kEll).empty());
}

TEST(Operators, FCommute) {
  const int max = 9;
  std::vector<ShuffleElement> fs;
  for (int p = 0; p < kEll; ++p) fs.push_back(F_pn(p, 1, kEll));
  fs.push_back(F_pn(0, 2, kEll));
  std::vector<SparseMatrix> mats;
  for (const ShuffleElement& f : fs) mats.push_back(operator_matrix(f, max));
  for (std::size_t a = 0; a < fs.size(); ++a)
    for (std::size_t b = a + 1; b < fs.size(); ++b) {
      const int room = max - fs[a].num_vars() - fs[b].num_vars();
      ASSERT_GE(room, 0);
      std::vector<Partition> sources = partitions_up_to(room);
      SparseMatrix ab = compose(mats[a], operator_columns(fs[b], sources));
      SparseMatrix ba = compose(mats[b], operator_columns(fs[a], sources));
      EXPECT_TRUE(matrices_equal(ab, ba)) << a << "," << b;
    }
}

TEST(Operators, Adjacency) {
  for (int n = 1; n <= 2; ++n)
    for (int p = 0; p < kEll; ++p) {
      const int max = n == 1 ? 7 : 8;
      SparseMatrix e = operator_matrix(E_pn(p, n, kEll), max);
      SparseMatrix h = operator_matrix(H_pn(p, n, kEll), max);
      int e_nonzero = 0, h_nonzero = 0;
      for (const auto& [lam, col] : e)
        for (const auto& [mu, c] : col) {
          ++e_nonzero;
          EXPECT_FALSE(has_adjacent_pair(skew_nodes(mu, lam), p, kEll, true)) << to_string(lam) << "->" << to_string(mu);
        }
      for (const auto& [lam, col] : h)
        for (const auto& [mu, c] : col) {
          ++h_nonzero;
          EXPECT_FALSE(has_adjacent_pair(skew_nodes(mu, lam), p, kEll, false)) << to_string(lam) << "->" << to_string(mu);
        }
      EXPECT_GT(e_nonzero, 0);
      EXPECT_GT(h_nonzero, 0);
    }
}

TEST(Operators, ComposeRejectsEscapes) {
  SparseMatrix a = operator_matrix(F_pn(0, 1, kEll), 3);
  SparseMatrix b = operator_matrix(F_pn(0, 1, kEll), 3);
  EXPECT_THROW(compose(a, b), std::out_of_range);
}

TEST(FockVector, Json) {
  FockVector v = basis_vector({2, 1}, kEll);
  EXPECT_NE(v.to_json().find("(2,1)"), std::string::npos);
}
