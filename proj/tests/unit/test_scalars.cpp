#include <gtest/gtest.h>

#include <random>

#include "qconj/error.hpp"
#include "qconj/matrix.hpp"
#include "qconj/scalar.hpp"
#include "qconj/scalar_poly.hpp"

using namespace qconj;

namespace {

mpq_class eval_laurent(const LaurentPoly& p, long q) {
  mpq_class acc = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(std::abs(e)));
    acc += e >= 0 ? mpq_class(c * pw) : mpq_class(c, pw);
  }
  acc.canonicalize();
  return acc;
}

// Evaluation at an integer point, independent of the canonical form.
mpq_class at(const Scalar& s, long q) {
  mpq_class r = eval_laurent(s.numerator(), q) / eval_laurent(s.denominator(), q);
  r.canonicalize();
  return r;
}

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  std::uniform_int_distribution<int> e(-3, 3);
  Scalar num;
  Scalar den;
  for (int t = 0; t < 3; ++t) {
    num += Scalar(c(rng)) * Scalar::q_pow(e(rng));
    den += Scalar(c(rng)) * Scalar::q_pow(e(rng));
  }
  if (den.is_zero()) den = Scalar(1);
  return num / den;
}

const Scalar q = Scalar::q_pow(1);

}  // namespace

TEST(Scalar, SimpleIdentities) {
  EXPECT_TRUE((Scalar(1) + Scalar(-1)).is_zero());
  EXPECT_TRUE(((q * q - 1) / (q * (q - q.inverse()))).is_one());
  EXPECT_TRUE(((q - q.inverse()) * (q - q.inverse()).inverse()).is_one());
}

TEST(Scalar, QIntegers) {
  EXPECT_TRUE(Scalar::q_int(0).is_zero());
  EXPECT_TRUE(Scalar::q_int(1).is_one());
  EXPECT_EQ(Scalar::q_int(2), q + q.inverse());
  EXPECT_EQ(Scalar::q_int(-2), -(q + q.inverse()));
  EXPECT_EQ(Scalar::q_int(3), q * q + 1 + q.pow(-2));
  for (int z = -8; z <= 8; ++z) EXPECT_EQ(Scalar::q_int(-z), -Scalar::q_int(z));
}

TEST(Scalar, QPowers) {
  EXPECT_TRUE(Scalar::q_pow(0).is_one());
  EXPECT_EQ(Scalar::q_pow(3), q * q * q);
  for (int a = -5; a <= 5; ++a)
    for (int b = -5; b <= 5; ++b) EXPECT_EQ(Scalar::q_pow(a) * Scalar::q_pow(b), Scalar::q_pow(a + b));
}

TEST(Scalar, QIntegerAdditionLaw) {
  for (int a = -15; a <= 15; ++a)
    for (int b = -15; b <= 15; ++b)
      ASSERT_EQ(Scalar::q_int(a + b), Scalar::q_int(a) * Scalar::q_pow(b) + Scalar::q_pow(-a) * Scalar::q_int(b));
}

TEST(Scalar, ArithmeticAgreesWithEvaluation) {
  std::mt19937 rng(7);
  for (int t = 0; t < 150; ++t) {
    const Scalar a = random_scalar(rng);
    const Scalar b = random_scalar(rng);
    for (long x : {2L, 3L, 7L}) {
      if (eval_laurent(a.denominator(), x) == 0 || eval_laurent(b.denominator(), x) == 0) continue;
      EXPECT_EQ(at(a + b, x), at(a, x) + at(b, x));
      EXPECT_EQ(at(a - b, x), at(a, x) - at(b, x));
      EXPECT_EQ(at(a * b, x), at(a, x) * at(b, x));
      if (!b.is_zero() && at(b, x) != 0) EXPECT_EQ(at(a / b, x), at(a, x) / at(b, x));
    }
  }
}

TEST(Scalar, CanonicalFormIsUnique) {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    const Scalar a = random_scalar(rng);
    const Scalar b = random_scalar(rng);
    const Scalar c = (a * b + a) / (b + 1);
    const Scalar d = a;
    if ((b + 1).is_zero()) continue;
    EXPECT_EQ(c, d);
    EXPECT_EQ(c.hash(), d.hash());
    EXPECT_EQ(c.to_string(), d.to_string());
  }
}

TEST(Scalar, SerializationRoundTrip) {
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    const Scalar a = random_scalar(rng);
    EXPECT_EQ(Scalar::parse(a.to_string()), a);
  }
  EXPECT_EQ(Scalar().to_string(), "0 / 1*q^0");
  EXPECT_EQ(Scalar::parse("1/2*q^1 / 1*q^0"), q / Scalar(2));
  EXPECT_EQ(Scalar::q_int(2).to_string(), "1*q^-1 + 1*q^1 / 1*q^0");
}

TEST(Scalar, Errors) {
  EXPECT_THROW(Scalar(1) / Scalar(), DivisionByZero);
  EXPECT_THROW(Scalar().inverse(), DivisionByZero);
  EXPECT_THROW(Scalar::parse("garbage"), Error);
}

TEST(PolyGcd, RecoversCommonFactor) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-6, 6);
  auto rnd = [&](int deg) {
    std::vector<mpz_class> v;
    for (int i = 0; i <= deg; ++i) v.emplace_back(c(rng));
    v.back() = v.back() == 0 ? mpz_class(1) : v.back();
    if (v.front() == 0) v.front() = 1;
    return IntPoly(v);
  };
  for (int t = 0; t < 40; ++t) {
    const IntPoly g = rnd(3);
    const IntPoly a = g * rnd(4);
    const IntPoly b = g * rnd(2);
    const IntPoly h = gcd(a, b);
    EXPECT_TRUE(divide_if_exact(h, g).has_value());
    EXPECT_TRUE(divide_if_exact(a, h).has_value());
    EXPECT_TRUE(divide_if_exact(b, h).has_value());
  }
}

TEST(Matrix, KernelAndSolve) {
  Matrix m(2, 3);
  m(0, 0) = q;
  m(0, 1) = Scalar(1);
  m(1, 1) = Scalar::q_int(2);
  m(1, 2) = -q;
  const auto ker = kernel(m);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_TRUE(is_zero(m.apply(ker[0])));
  EXPECT_EQ(rank(m), 2u);
  const Vector b{Scalar(1), Scalar(2)};
  const auto x = solve(m, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m.apply(*x), b);
}

TEST(ScalarPoly, MinimalPolynomialOfJordanBlock) {
  Matrix j(2, 2);
  j(0, 0) = q;
  j(0, 1) = Scalar(1);
  j(1, 1) = q;
  const ScalarPoly p = minimal_polynomial(j);
  EXPECT_EQ(p, ScalarPoly::from_roots({q, q}));
  EXPECT_TRUE(p.eval(j).is_zero());
  Matrix d(2, 2);
  d(0, 0) = q;
  d(1, 1) = q;
  EXPECT_EQ(minimal_polynomial(d).degree(), 1);
}
