#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "qconj/braiding.hpp"
#include "qconj/orbit.hpp"
#include "qconj/verma.hpp"

using namespace qconj;

namespace {

const Scalar q = Scalar::q_pow(1);

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string limit_text(double s) {
  std::ostringstream os;
  if (s >= 60)
    os << s / 60 << " min";
  else
    os << s << " s";
  return os.str();
}

WeightVector minus(WeightVector a, const WeightVector& b) {
  for (std::size_t k = 0; k < a.coords.size(); ++k) a.coords[k] -= b.coords[k];
  return a;
}

WeightVector scaled(WeightVector v, const Scalar& c) {
  for (auto& x : v.coords) x *= c;
  return v;
}

bool in_span(const SubmoduleSpans& s, const WeightVector& v) {
  auto it = s.find(v.content);
  return it == s.end() ? v.is_zero() : it->second.contains(v.coords);
}

Outcome q_arithmetic() {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> d(-40, 40);
  for (int t = 0; t < 200; ++t) {
    const int a = d(rng);
    const int b = d(rng);
    if (Scalar::q_int(a + b) != Scalar::q_int(a) * Scalar::q_pow(b) + Scalar::q_pow(-a) * Scalar::q_int(b))
      return {false, "fails at a=" + std::to_string(a) + " b=" + std::to_string(b)};
  }
  return {true, "200 pairs"};
}

Outcome s_matrix() {
  for (int n = 2; n <= 4; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const QMatrix qm = build_Q(n);
    const Matrix s = hecke_S(n, qm.orientation);
    const Matrix id = Matrix::identity(un * un);
    const Matrix s1 = kron(s, Matrix::identity(un));
    const Matrix s2 = kron(Matrix::identity(un), s);
    if (s1 * s2 * s1 != s2 * s1 * s2) return {false, "braid relation fails at n=" + std::to_string(n)};
    if (!((s - id * q) * (s + id * q.inverse())).is_zero()) return {false, "Hecke condition fails at n=" + std::to_string(n)};
    if (s * s != qm.natural_image()) return {false, "S^2 differs from the image of Q at n=" + std::to_string(n)};
  }
  return {true, "n=2,3,4; " + to_string(build_Q(2).orientation)};
}

Outcome verma_dimensions() {
  std::size_t spaces = 0;
  for (const auto& [n, cutoff] : std::vector<std::pair<int, int>>{{3, 6}, {4, 4}}) {
    const auto v = build_verma(Weight(static_cast<std::size_t>(n), 0), cutoff);
    for (const auto& d : enumerate_contents(n, cutoff)) {
      ++spaces;
      if (v->dim(d) != oracle::kostant(n, d)) return {false, "n=" + std::to_string(n) + " content " + format_list(d)};
    }
  }
  return {true, std::to_string(spaces) + " weight spaces"};
}

Outcome basic_dyn() {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> d(-10, 10);
  std::size_t checks = 0;
  for (int t = 0; t < 5; ++t) {
    const Weight lam{d(rng), d(rng), d(rng)};
    const auto v = build_verma(lam, 4);
    for (const auto& r : RootSystem(3).positive_roots())
      for (int m = 1; m <= 2; ++m)
        for (const auto& c : check_basic_dyn(*v, r, m)) {
          ++checks;
          if (!c.equal) return {false, "lambda " + format_list(lam) + " root " + std::to_string(r.i + 1) + std::to_string(r.j + 1)};
        }
  }
  return {true, std::to_string(checks) + " identities"};
}

Outcome singular_vectors() {
  std::mt19937 rng(5);
  for (int n = 3; n <= 4; ++n)
    for (int t = 0; t < 3; ++t) {
      const Weight lam = oracle::generic_lambda(rng, n, n + 2);
      const auto tm = tensor_with_natural(build_verma(lam, n - 1));
      const WeightVector v = top_vector(*tm->layout()->base);
      for (int l = 0; l < n; ++l) {
        const WeightVector u = u_hat(*tm, l);
        const auto ker = singular_space(*tm, u.content);
        if (ker.size() != 1 || u.is_zero()) return {false, "kernel dimension at lambda " + format_list(lam)};
        Subspace s(u.coords.size());
        s.insert(ker[0].coords);
        if (!s.contains(u.coords)) return {false, "u_hat outside kernel at lambda " + format_list(lam)};
        const Scalar sign = l % 2 ? Scalar(-1) : Scalar(1);
        if (!in_span(filtration_V(*tm, l, n - 1), minus(u, scaled(embed(*tm, l, v), sign * c_hat(lam, l)))))
          return {false, "leading coefficient identity fails at lambda " + format_list(lam)};
      }
    }
  const RootSystem rs(3);
  std::size_t critical = 0;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const Weight lam{a, b, 0};
      const auto vm = build_verma(lam, 2);
      const WeightVector top = top_vector(*vm);
      for (const auto& r : rs.positive_roots()) {
        const WeightVector x = act(dyn_root(3, r.i, r.j), *vm, top);
        const Weight rw = rs.root_weight(r);
        const bool crit = pairing(lam, rw) + pairing(rs.rho(), rw) == 1;
        critical += crit ? 1 : 0;
        if (x.is_zero() || is_singular(*vm, x) != crit) return {false, "singularity criterion at lambda " + format_list(lam)};
      }
    }
  return {true, "grid 7x7, " + std::to_string(critical) + " critical pairs"};
}

Outcome spectrum() {
  const Weight lam{4, 2, 0};
  QAction qa(tensor_with_natural(build_verma(lam, 4)), build_Q(3));
  std::vector<Scalar> roots;
  for (int i = 1; i <= 3; ++i) roots.push_back(Scalar::q_pow(2 * (lam[static_cast<std::size_t>(i - 1)] - i + 1)));
  const ScalarPoly p = ScalarPoly::from_roots(roots);
  const auto contents = enumerate_contents(3, 4);
  for (const auto& c : contents)
    if (!p.eval(qa.on_tensor(c)).is_zero()) return {false, "nonzero at content " + format_list(c)};
  std::string witness;
  if (!q_equivariant(qa, 4, &witness)) return {false, "equivariance: " + witness};
  return {true, std::to_string(contents.size()) + " weight spaces"};
}

Outcome orbit_levi() {
  const OrbitData o = make_orbit({2, 1}, {5, 0});
  const Certificate c = verify_orbit(o, Permutation::identity(3), {4, 2, 0});
  const ScalarPoly target = ScalarPoly::from_roots({q.pow(10), q.pow(-4)});
  std::string expected = "[";
  for (const auto& s : target.to_strings()) expected += (expected.size() > 1 ? "," : "") + ("\"" + s + "\"");
  expected += "]";
  const std::string computed = c.witness_field("minimal polynomial", "computed");
  if (computed != expected) return {false, "minimal polynomial " + computed};
  for (const std::string name : {"build", "generator singularity", "minimal polynomial", "q-trace m=1", "q-trace m=2",
                                 "reflection equation"}) {
    const Check* ch = c.find(name);
    if (!ch || !ch->pass) return {false, name + ": " + (ch ? ch->witness : "missing")};
  }
  return {true, "(X - q^10)(X - q^-4), traces m=1,2, reflection equation at D=2"};
}

Outcome orbit_sweep() {
  const SweepResult r = sigma_sweep(make_orbit({2, 1}, {5, 0}), {4, 2, 0});
  if (r.certificates.size() != 3) return {false, std::to_string(r.certificates.size()) + " certificates"};
  if (!r.agreement) return {false, r.detail};
  for (const auto& c : r.certificates)
    for (const std::string name : {"minimal polynomial", "q-trace m=1", "q-trace m=2"})
      if (!c.find(name) || !c.find(name)->pass) return {false, name + " fails for a sigma"};
  return {true, "3 sigma agree"};
}

Outcome orbit_non_levi() {
  const Certificate c = verify_orbit(make_orbit({2, 2}, {7, 0}), Permutation::from_one_based({1, 3, 2, 4}), {3, 1, 0});
  for (const std::string name : {"build", "generator singularity", "minimal polynomial", "q-trace m=1", "q-trace m=2"}) {
    const Check* ch = c.find(name);
    if (!ch || !ch->pass) return {false, name + ": " + (ch ? ch->witness : "missing")};
  }
  if (c.witness_field("minimal polynomial", "degree") != "2") return {false, "degree " + c.witness_field("minimal polynomial", "degree")};
  return {true, "sigma (1,3,2,4), degree 2"};
}

// A colliding pair x_i = x_j must lower the degree of the minimal polynomial
// below n and separate the two filtrations.
Outcome degeneration() {
  const std::vector<Weight> cases{{0, 1}, {1, 2, 0}, {2, 0, 1}};
  bool ok = true;
  std::ostringstream os;
  for (const Weight& lam : cases) {
    const int n = static_cast<int>(lam.size());
    const int cutoff = n == 2 ? 4 : 3;
    QAction qa(tensor_with_natural(build_verma(lam, cutoff)), build_Q(n));
    const ScalarPoly mp = min_poly(qa, cutoff);
    std::set<std::string> distinct;
    for (int l = 0; l < n; ++l) distinct.insert(hat_x(lam, l).to_string());
    std::size_t w_dim = 0;
    std::size_t v_dim = 0;
    for (const auto& [c, s] : filtration_W(qa.tensor(), n, cutoff)) w_dim += s.dim();
    for (const auto& [c, s] : filtration_V(qa.tensor(), n, cutoff)) v_dim += s.dim();
    const bool drops = mp.degree() < n;
    const bool separated = w_dim != v_dim;
    ok = ok && drops && separated;
    os << "lambda " << format_list(lam) << ": degree " << mp.degree() << " (n=" << n << ", " << distinct.size()
       << " distinct eigenvalues), W " << w_dim << " vs V " << v_dim << "; ";
  }
  return {ok, os.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "q-arithmetic addition law", 1, q_arithmetic},
      {2, "S-matrix braid, Hecke and S^2 = image of Q", 10, s_matrix},
      {3, "Verma dimensions equal Kostant counts", 60, verma_dimensions},
      {4, "dynamical root raising identity", 60, basic_dyn},
      {5, "singular vectors and leading coefficients", 120, singular_vectors},
      {6, "spectrum of Q on C^3 (x) Verma", 120, spectrum},
      {7, "orbit, Levi placement", 180, orbit_levi},
      {8, "orbit, sigma sweep agreement", 600, orbit_sweep},
      {9, "orbit, non-Levi placement", 900, orbit_non_levi},
      {10, "degeneration controls", 120, degeneration},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = o.pass && secs < c.limit_seconds;
    if (!pass) ++failures;
    std::printf("[%s] %d %s (%.3f s < %s)  %s\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                limit_text(c.limit_seconds).c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
