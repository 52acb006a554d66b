#include <chrono>
#include <functional>

#include "qconj/braiding.hpp"
#include "qconj/cli.hpp"
#include "qconj/error.hpp"
#include "qconj/orbit.hpp"
#include "qconj/verma.hpp"

namespace qconj::cli {

namespace {

using Suite = std::function<std::string()>;

std::string scalars_suite() {
  for (int a = -6; a <= 6; ++a)
    for (int b = -6; b <= 6; ++b)
      if (!(Scalar::q_int(a + b) == Scalar::q_int(a) * Scalar::q_pow(b) + Scalar::q_pow(-a) * Scalar::q_int(b)))
        return "[a+b] identity fails at a=" + std::to_string(a) + " b=" + std::to_string(b);
  const Scalar q = Scalar::q_pow(1);
  const Scalar x = (q + 1) / (q - 1) + Scalar::q_int(3) / Scalar::q_int(2);
  if (!(Scalar::parse(x.to_string()) == x)) return "serialization does not round-trip";
  if (!((q * q - 1) / (q - q.inverse()) == q)) return "cancellation failed";
  return {};
}

std::string rootdata_suite() {
  for (const auto& mult : std::vector<std::vector<int>>{{1, 1}, {2, 1}, {1, 2}, {1, 1, 1}}) {
    const BlockStructure b(mult);
    const auto perms = enumerate_admissible(b);
    if (perms.size() != multinomial(b)) return "admissible count differs from multinomial for " + format_list(mult);
    const Weight lam = b.block_weight(std::vector<int>(mult.size(), 0));
    for (const auto& s : perms)
      if (!(shifted_action(s.inverse(), shifted_action(s, lam)) == lam)) return "shifted action is not an action";
  }
  for (int n = 2; n <= 3; ++n)
    for (const auto& d : enumerate_contents(n, 4))
      if (kostant_partition_count(n, d) == 0) return "zero Kostant count at " + format_list(d);
  return {};
}

std::string uq_suite() {
  for (int n = 2; n <= 3; ++n) {
    const RootSystem rs(n);
    const Scalar qq = Scalar::q_pow(1) - Scalar::q_pow(-1);
    for (int i = 0; i + 1 < n; ++i)
      for (int j = 0; j + 1 < n; ++j) {
        const UqElement e = UqElement::E(n, i);
        const UqElement f = UqElement::F(n, j);
        Matrix lhs = natural_rep(e * f - f * e);
        Matrix rhs(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        if (i == j) {
          Weight neg = rs.simple_root(i);
          for (auto& v : neg) v = -v;
          rhs = natural_rep(UqElement::K(n, rs.simple_root(i)) - UqElement::K(n, neg)) * qq.inverse();
        }
        if (!(lhs == rhs)) return "[E,F] relation fails in the natural representation";
        if (!(natural_rep(coproduct(e * f)) == natural_rep(coproduct(e)) * natural_rep(coproduct(f))))
          return "coproduct is not multiplicative";
      }
    for (int i = 0; i + 1 < n; ++i)
      for (const UqElement& x : {UqElement::E(n, i), UqElement::F(n, i), UqElement::E(n, i) * UqElement::F(n, i)}) {
        Matrix acc(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        for (const auto& [mm, c] : coproduct(x).terms()) {
          UqElement a(n);
          UqElement b(n);
          a.add_term(mm.first, c);
          b.add_term(mm.second, Scalar(1));
          acc = acc + natural_rep(antipode(a)) * natural_rep(b);
        }
        if (!(acc == Matrix::identity(static_cast<std::size_t>(n)) * counit(x))) return "antipode axiom fails";
      }
  }
  return {};
}

std::string verma_suite() {
  const Weight lam{4, 2, 0};
  const auto v = build_verma(lam, 4);
  for (const auto& r : RootSystem(3).positive_roots())
    for (int m = 1; m <= 2; ++m)
      for (const auto& c : check_basic_dyn(*v, r, m))
        if (!c.equal) return "basic dynamical identity fails";
  const auto t = tensor_with_natural(v);
  for (int l = 0; l < 3; ++l) {
    const WeightVector u = u_hat(*t, l);
    if (u.is_zero() || !is_singular(*t, u)) return "u_hat is not a nonzero singular vector";
  }
  return {};
}

std::string braiding_suite(bool corrupt) {
  for (int n = 2; n <= 3; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const QMatrix qm = build_Q(n);
    Matrix s = hecke_S(n, qm.orientation);
    if (corrupt) s(0, 0) = s(0, 0) * Scalar::q_pow(2);
    const Matrix id = Matrix::identity(un);
    const Matrix s12 = kron(s, id);
    const Matrix s23 = kron(id, s);
    if (!(s12 * s23 * s12 == s23 * s12 * s23)) return "braid relation fails for n=" + std::to_string(n);
    const Matrix big = Matrix::identity(un * un);
    const Scalar q = Scalar::q_pow(1);
    if (!((s - big * q) * (s + big * q.inverse())).is_zero()) return "Hecke condition fails for n=" + std::to_string(n);
    if (!(s * s == qm.natural_image())) return "S^2 differs from the natural image of Q";
  }
  const auto t = tensor_with_natural(build_verma(Weight{3, 1}, 3));
  QAction qa(t, build_Q(2));
  if (!q_equivariant(qa, 3)) return "Q does not commute with the algebra action";
  if (!(min_poly(qa, 3) == ScalarPoly::from_roots({hat_x({3, 1}, 0), hat_x({3, 1}, 1)})))
    return "spectrum of Q differs from q^(2(lambda_i - i + 1))";
  return {};
}

std::string orbit_suite() {
  const OrbitData o = make_orbit({2, 1}, {5, 0});
  const Certificate c = verify_orbit(o, Permutation::identity(3), {3, 2, 1});
  for (const auto& ch : c.checks)
    if (!ch.pass) return "orbit check '" + ch.name + "' failed";
  try {
    make_orbit({2, 1}, {0, 2});
    return "eigenvalue collision was accepted";
  } catch (const InvalidArgument&) {
  }
  return {};
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(bool inject_fault) {
  const std::vector<std::pair<std::string, Suite>> suites{
      {"scalars", scalars_suite},
      {"rootdata", rootdata_suite},
      {"uq", uq_suite},
      {"verma", verma_suite},
      {"braiding", [inject_fault] { return braiding_suite(inject_fault); }},
      {"orbit", orbit_suite},
  };
  std::vector<SuiteResult> out;
  for (const auto& [name, run] : suites) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult r{name, false, {}, 0};
    try {
      r.detail = run();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace qconj::cli
