#include <gtest/gtest.h>

#include "qconj/uq.hpp"
#include "qconj/verma.hpp"

using namespace qconj;

namespace {

const Scalar q = Scalar::q_pow(1);

Weight neg(Weight w) {
  for (auto& x : w) x = -x;
  return w;
}

Matrix unit(int n, int i, int j) {
  Matrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Scalar(1);
  return m;
}

}  // namespace

TEST(NaturalRep, Generators) {
  EXPECT_EQ(natural_rep(UqElement::E(3, 0)), unit(3, 0, 1));
  EXPECT_EQ(natural_rep(UqElement::F(3, 0)), unit(3, 1, 0));
  Matrix k(3, 3);
  k(0, 0) = q.pow(2);
  k(1, 1) = q.inverse();
  k(2, 2) = Scalar(1);
  EXPECT_EQ(natural_rep(UqElement::K(3, {2, -1, 0})), k);
}

TEST(NaturalRep, DefiningRelations) {
  for (int n = 2; n <= 4; ++n) {
    const RootSystem rs(n);
    for (int i = 0; i + 1 < n; ++i)
      for (int j = 0; j + 1 < n; ++j) {
        const UqElement e = UqElement::E(n, i);
        const UqElement f = UqElement::F(n, j);
        Matrix expected(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        if (i == j)
          expected = natural_rep(UqElement::K(n, rs.simple_root(i)) - UqElement::K(n, neg(rs.simple_root(i)))) *
                     (q - q.inverse()).inverse();
        EXPECT_EQ(natural_rep(e * f - f * e), expected);
      }
  }
}

TEST(NaturalRep, Serre) {
  const Matrix e1 = natural_rep(UqElement::E(3, 0));
  const Matrix e2 = natural_rep(UqElement::E(3, 1));
  EXPECT_TRUE((e1 * e1 * e2 - e1 * e2 * e1 * Scalar::q_int(2) + e2 * e1 * e1).is_zero());
  const Matrix f1 = natural_rep(UqElement::F(3, 0));
  const Matrix f2 = natural_rep(UqElement::F(3, 1));
  EXPECT_TRUE((f2 * f2 * f1 - f2 * f1 * f2 * Scalar::q_int(2) + f1 * f2 * f2).is_zero());
}

TEST(Product, CartanCommutation) {
  const int n = 3;
  const RootSystem rs(n);
  const Weight mu{1, 0, -2};
  const UqElement lhs = UqElement::K(n, mu) * UqElement::E(n, 1);
  const UqElement rhs = UqElement::E(n, 1) * UqElement::K(n, mu) * q.pow(pairing(mu, rs.simple_root(1)));
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(UqElement::K(n, mu) * UqElement::K(n, neg(mu)), UqElement::one(n));
}

TEST(Coproduct, Generators) {
  const int n = 2;
  const RootSystem rs(n);
  EXPECT_EQ(coproduct(UqElement::one(n)), TensorElement::pure(UqElement::one(n), UqElement::one(n)));
  TensorElement df = TensorElement::pure(UqElement::one(n), UqElement::F(n, 0));
  df += TensorElement::pure(UqElement::F(n, 0), UqElement::K(n, neg(rs.simple_root(0))));
  EXPECT_EQ(coproduct(UqElement::F(n, 0)), df);
}

TEST(Coproduct, IsMultiplicative) {
  const int n = 3;
  const std::vector<UqElement> gens{UqElement::E(n, 0), UqElement::E(n, 1), UqElement::F(n, 0), UqElement::F(n, 1),
                                    UqElement::K(n, {1, 0, -1})};
  for (const auto& a : gens)
    for (const auto& b : gens) {
      EXPECT_EQ(coproduct(a * b), coproduct(a) * coproduct(b));
      EXPECT_EQ(natural_rep(coproduct(a * b)), natural_rep(coproduct(a)) * natural_rep(coproduct(b)));
    }
  EXPECT_EQ(coproduct(UqElement::E(n, 0) * UqElement::F(n, 0)).terms().size(), 4u);
}

TEST(Antipode, Generators) {
  const int n = 2;
  const RootSystem rs(n);
  const Weight a = rs.simple_root(0);
  EXPECT_EQ(antipode(UqElement::K(n, {3, -1})), UqElement::K(n, {-3, 1}));
  EXPECT_EQ(antipode(UqElement::E(n, 0)), -(UqElement::K(n, neg(a)) * UqElement::E(n, 0)));
  EXPECT_EQ(antipode(UqElement::E(n, 0)), -(UqElement::E(n, 0) * UqElement::K(n, neg(a))) * q.pow(-2));
  EXPECT_EQ(antipode(antipode(UqElement::E(n, 0))), UqElement::E(n, 0) * q.pow(-2));
  EXPECT_EQ(antipode(antipode(UqElement::F(n, 0))), UqElement::F(n, 0) * q.pow(2));
}

TEST(Antipode, SquareActsConsistentlyOnVerma) {
  const auto v = build_verma({3, 0}, 3);
  for (const auto& c : enumerate_contents(2, 2)) {
    EXPECT_EQ(act_matrix(antipode(antipode(UqElement::E(2, 0))), *v, c),
              act_matrix(UqElement::E(2, 0), *v, c) * q.pow(-2));
  }
}

TEST(Antipode, HopfAxiom) {
  const int n = 3;
  const std::vector<UqElement> xs{UqElement::E(n, 0), UqElement::F(n, 1), UqElement::E(n, 0) * UqElement::F(n, 0),
                                  UqElement::F(n, 0) * UqElement::F(n, 1), UqElement::K(n, {0, 1, 1})};
  for (const auto& x : xs) {
    UqElement left(n);
    UqElement right(n);
    const TensorElement dx = coproduct(x);
    for (const auto& [mm, c] : dx.terms()) {
      UqElement a(n);
      UqElement b(n);
      a.add_term(mm.first, c);
      b.add_term(mm.second, Scalar(1));
      left += antipode(a) * b;
      right += a * antipode(b);
    }
    EXPECT_EQ(left, UqElement::scalar(n, counit(x)));
    EXPECT_EQ(right, UqElement::scalar(n, counit(x)));
  }
}

TEST(Counit, Values) {
  EXPECT_TRUE(counit(UqElement::E(2, 0)).is_zero());
  EXPECT_TRUE(counit(UqElement::K(2, {1, 2})).is_one());
  EXPECT_EQ(counit(UqElement::scalar(2, q) + UqElement::F(2, 0)), q);
}

TEST(Display, Format) {
  const UqElement x = UqElement::F(3, 0) * UqElement::F(3, 1) * UqElement::K(3, {0, 1, -1});
  EXPECT_EQ(x.to_string(), "(1*q^0 / 1*q^0) F1 F2 K(0,1,-1)");
}
