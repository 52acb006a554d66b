#include <gtest/gtest.h>

#include <algorithm>

#include "qconj/error.hpp"
#include "qconj/orbit.hpp"

using namespace qconj;

namespace {

const Scalar q = Scalar::q_pow(1);

Scalar brute_target(int m, const std::vector<int>& mult, const std::vector<Scalar>& x) {
  Scalar acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Scalar term = x[i].pow(m) * Scalar::q_int(mult[i]);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (j != i) term *= (q.pow(mult[j]) * x[i] - q.pow(-mult[j]) * x[j]) / (x[i] - x[j]);
    acc += term;
  }
  return acc;
}

void expect_all_pass(const Certificate& c) {
  for (const auto& ch : c.checks) EXPECT_TRUE(ch.pass) << ch.name << ": " << ch.witness;
}

}  // namespace

TEST(OrbitData, Construction) {
  const OrbitData o = make_orbit({2, 1}, {5, 0});
  EXPECT_EQ(o.n, 3);
  EXPECT_EQ(o.k(), 2);
  EXPECT_EQ(o.lambda, (Weight{5, 5, 0}));
  EXPECT_EQ(o.x[0], q.pow(10));
  EXPECT_EQ(o.x[1], q.pow(-4));
  EXPECT_EQ(orbit_polynomial(o), ScalarPoly::from_roots({q.pow(10), q.pow(-4)}));
  EXPECT_FALSE(o.describe().empty());
}

TEST(OrbitData, RejectsBadInput) {
  EXPECT_THROW(make_orbit({2, 1}, {0, 2}), InvalidArgument);
  EXPECT_THROW(make_orbit({2, 1}, {5}), InvalidArgument);
  EXPECT_THROW(make_orbit({3}, {1}), InvalidArgument);
  EXPECT_THROW(make_orbit({2, 0}, {1, 0}), InvalidArgument);
  EXPECT_THROW(make_orbit({1, 1}, {3, 3}), InvalidArgument);
}

TEST(OrbitData, HatXPermutesUnderShiftedAction) {
  const OrbitData o = make_orbit({2, 1}, {5, 0});
  for (const auto& s : enumerate_admissible(o.blocks)) {
    const Weight sl = shifted_action(s, o.lambda);
    std::vector<std::string> a;
    std::vector<std::string> b;
    for (int l = 0; l < 3; ++l) {
      a.push_back(hat_x(o.lambda, l).to_string());
      b.push_back(hat_x(sl, l).to_string());
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
  }
}

TEST(QTraceTarget, MatchesDirectFormula) {
  for (const auto& [mult, exps] : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
           {{2, 1}, {5, 0}}, {{1, 1, 1}, {6, 2, -3}}, {{2, 2}, {7, 0}}, {{1, 3}, {4, 9}}}) {
    const OrbitData o = make_orbit(mult, exps);
    for (int m = 1; m <= 4; ++m) EXPECT_EQ(qtrace_target(m, o), brute_target(m, mult, o.x));
  }
  EXPECT_THROW(qtrace_target(0, make_orbit({1, 1}, {1, 0})), InvalidArgument);
}

// With m = 0 the target degenerates to the quantum dimension [n].
TEST(QTraceTarget, ZerothPowerIsQuantumDimension) {
  const OrbitData o = make_orbit({2, 1}, {5, 0});
  EXPECT_EQ(brute_target(0, {2, 1}, o.x), Scalar::q_int(3));
}

TEST(VerifyOrbit, LeviCasePasses) {
  const OrbitData o = make_orbit({2, 1}, {5, 0});
  const Certificate c = verify_orbit(o, Permutation::identity(3), {4, 2, 1});
  expect_all_pass(c);
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.cutoff, 4);
  EXPECT_EQ(c.witness_field("minimal polynomial", "degree"), "2");
  ASSERT_NE(c.find("q-trace m=3 (extended)"), nullptr);
  EXPECT_EQ(c.witness_field("q-trace m=1", "computed"), "\"" + qtrace_target(1, o).to_string() + "\"");
  EXPECT_EQ(c.conventions.at("exactness"), "asserted by theory, not machine-checked at finite cutoff");
}

TEST(VerifyOrbit, NonLeviCasePasses) {
  const OrbitData o = make_orbit({2, 2}, {7, 0});
  const Certificate c = verify_orbit(o, Permutation::from_one_based({1, 3, 2, 4}), {3, 1, 0});
  expect_all_pass(c);
  EXPECT_EQ(c.sigma, (std::vector<int>{1, 3, 2, 4}));
}

TEST(VerifyOrbit, RecordsFailureInsteadOfThrowing) {
  const OrbitData o = make_orbit({2, 1}, {5, 0});
  const Certificate c = verify_orbit(o, Permutation::from_one_based({2, 1, 3}), {3, 1, 0});
  EXPECT_FALSE(c.passed());
  ASSERT_FALSE(c.checks.empty());
  EXPECT_FALSE(c.checks.front().pass);
  EXPECT_NE(c.checks.front().witness.find("error"), std::string::npos);
}

TEST(SigmaSweep, LeviOrbitAgrees) {
  const SweepResult r = sigma_sweep(make_orbit({2, 1}, {5, 0}), {3, 1, 1}, 2);
  ASSERT_EQ(r.certificates.size(), 3u);
  EXPECT_TRUE(r.agreement) << r.detail;
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.certificates[0].sigma, (std::vector<int>{1, 2, 3}));
}

TEST(SigmaSweep, RegularOrbitHasSixCertificates) {
  const SweepResult r = sigma_sweep(make_orbit({1, 1, 1}, {6, 2, -3}), {3, 1, 0}, 1);
  EXPECT_EQ(r.certificates.size(), 6u);
  EXPECT_TRUE(r.passed()) << r.detail;
}

TEST(Certificate, JsonRoundTrip) {
  const Certificate c = verify_orbit(make_orbit({1, 1}, {3, 0}), Permutation::identity(2), {3, 1, 0});
  const std::string text = c.to_json();
  std::string why;
  EXPECT_TRUE(validate_certificate_json(text, &why)) << why;
  const Certificate back = Certificate::from_json(text);
  EXPECT_EQ(back.to_json(), text);
  EXPECT_TRUE(validate_certificate_json(to_json(std::vector<Certificate>{c, back}), &why)) << why;
  EXPECT_FALSE(validate_certificate_json("{\"n\": 2}", &why));
  EXPECT_FALSE(why.empty());
  EXPECT_FALSE(validate_certificate_json("not json", &why));
}
