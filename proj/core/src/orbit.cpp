#include "qconj/orbit.hpp"

#include <atomic>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qconj/braiding.hpp"
#include "qconj/error.hpp"
#include "qconj/verma.hpp"

namespace qconj {

using nlohmann::json;

namespace {

json scalars(const std::vector<Scalar>& v) {
  json a = json::array();
  for (const auto& s : v) a.push_back(s.to_string());
  return a;
}

std::string root_name(const Root& r) { return "e" + std::to_string(r.i + 1) + "-e" + std::to_string(r.j + 1); }

std::size_t total_dim(const SubmoduleSpans& s) {
  std::size_t d = 0;
  for (const auto& [c, sp] : s) d += sp.dim();
  return d;
}

void run_check(Certificate& cert, const std::string& name, const std::string& anchor,
               const std::function<bool(json&)>& body) {
  Check ch{name, anchor, false, "null"};
  json w = json::object();
  try {
    ch.pass = body(w);
  } catch (const std::exception& e) {
    ch.pass = false;
    w["error"] = e.what();
  }
  ch.witness = w.dump();
  cert.checks.push_back(std::move(ch));
}

}  // namespace

std::string OrbitData::describe() const {
  std::ostringstream os;
  os << "n=" << n << " mult=" << format_list(blocks.mult()) << " exps=" << format_list(exps);
  return os.str();
}

OrbitData make_orbit(const std::vector<int>& mult, const std::vector<int>& exps) {
  if (mult.size() != exps.size()) throw InvalidArgument("mult and exps must have the same length");
  if (mult.size() < 2) throw InvalidArgument("an orbit needs at least two distinct eigenvalues");
  for (int m : mult)
    if (m < 1) throw InvalidArgument("multiplicities must be positive");
  OrbitData o{0, BlockStructure(mult), exps, {}, {}};
  o.n = o.blocks.n();
  std::set<int> seen;
  for (int i = 0; i < o.k(); ++i) {
    const int e = exps[static_cast<std::size_t>(i)] - o.blocks.starts()[static_cast<std::size_t>(i)];
    if (!seen.insert(e).second)
      throw InvalidArgument("eigenvalue collision: a_i - m_i + 1 = " + std::to_string(e) + " repeats");
    o.x.push_back(Scalar::q_pow(2 * e));
  }
  o.lambda = o.blocks.block_weight(exps);
  if (!is_levi_regular(o.lambda, o.blocks)) throw InvalidArgument("block values must be pairwise distinct");
  if (!is_orbit_regular(o.lambda, o.blocks)) throw InvalidArgument("weight is not orbit-regular");
  return o;
}

Scalar hat_x(const Weight& lam, int l) { return Scalar::q_pow(2 * (lam[static_cast<std::size_t>(l)] - l)); }

ScalarPoly orbit_polynomial(const OrbitData& o) { return ScalarPoly::from_roots(o.x); }

Scalar qtrace_target(int m, const OrbitData& o) {
  if (m < 1) throw InvalidArgument("trace power must be positive");
  Scalar sum;
  const int k = o.k();
  for (int i = 0; i < k; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    Scalar term = o.x[ui].pow(m) * Scalar::q_int(o.blocks.mult()[ui]);
    for (int j = 0; j < k; ++j) {
      if (j == i) continue;
      const auto uj = static_cast<std::size_t>(j);
      const int nj = o.blocks.mult()[uj];
      term *= (Scalar::q_pow(nj) * o.x[ui] - Scalar::q_pow(-nj) * o.x[uj]) / (o.x[ui] - o.x[uj]);
    }
    sum += term;
  }
  return sum;
}

Certificate verify_orbit(const OrbitData& o, const Permutation& sigma, const VerifyOptions& opts) {
  Certificate cert;
  cert.n = o.n;
  cert.mult = o.blocks.mult();
  cert.exps = o.exps;
  cert.sigma = sigma.one_based();
  cert.cutoff = opts.cutoff;
  cert.conventions["eigenvalues"] = "x_i = q^(2(a_i - m_i + 1)), m_i the first index of block i";
  cert.conventions["q-trace"] = "Tr_q(X) = sum_i q^(n+1-2i) X_ii";
  cert.conventions["root vectors"] =
      "f_(i,j) = F_i f_(i+1,j) [h_b + (rho,b)] - f_(i+1,j) F_i [h_b + (rho,b) - 1], b = e_(i+1) - e_j";
  cert.conventions["probed contents"] = "every weight space of C^n (x) M with total content <= cutoff";
  cert.conventions["exactness"] = "asserted by theory, not machine-checked at finite cutoff";

  const QMatrix qm = build_Q(o.n);
  cert.conventions["S orientation"] = to_string(qm.orientation);

  std::optional<SigmaModule> sm;
  run_check(cert, "build", "parabolic quotient of the Verma module of sigma.lambda", [&](json& w) {
    sm = build_M_sigma(o.lambda, o.blocks, sigma, opts.cutoff);
    w["sigma_lambda"] = sm->sigma_lambda;
    json roots = json::array();
    for (const auto& r : sm->generator_roots) roots.push_back(root_name(r));
    w["generator_roots"] = roots;
    std::size_t vd = 0;
    std::size_t qd = 0;
    for (const auto& s : sm->verma->spaces()) vd += s.dim;
    for (const auto& s : sm->quotient.module->spaces()) qd += s.dim;
    w["verma_dim"] = vd;
    w["quotient_dim"] = qd;
    return sm->generators.empty() ? qd == vd : qd < vd;
  });
  if (!sm) return cert;

  run_check(cert, "generator singularity", "dynamical root vectors at sigma-images of Levi simple roots are singular",
            [&](json& w) {
              bool ok = true;
              json list = json::array();
              for (std::size_t g = 0; g < sm->generators.size(); ++g) {
                const WeightVector& v = sm->generators[g];
                const auto ker = singular_space(*sm->verma, v.content);
                Subspace k(v.coords.size());
                for (const auto& b : ker) k.insert(b.coords);
                const bool in = k.contains(v.coords);
                const bool nonzero = !v.is_zero();
                ok = ok && in && nonzero;
                list.push_back({{"root", root_name(sm->generator_roots[g])},
                                {"content", v.content},
                                {"kernel_dim", ker.size()},
                                {"nonzero", nonzero},
                                {"in_kernel", in}});
              }
              w["generators"] = list;
              return ok;
            });

  const auto tensor = tensor_with_natural(sm->quotient.module);
  QAction qa(tensor, qm);

  run_check(cert, "minimal polynomial", "prod_i (Q - x_i) = 0 with no proper divisor vanishing", [&](json& w) {
    const ScalarPoly mp = min_poly(qa, opts.cutoff);
    const ScalarPoly target = orbit_polynomial(o);
    w["computed"] = mp.to_strings();
    w["target"] = target.to_strings();
    w["degree"] = mp.degree();
    w["spaces"] = enumerate_contents(o.n, opts.cutoff).size();
    return mp == target;
  });

  for (int m = 1; m <= o.k() + opts.extra_traces; ++m) {
    const bool extended = m > o.k();
    const std::string name = "q-trace m=" + std::to_string(m) + (extended ? " (extended)" : "");
    run_check(cert, name, "Tr_q(Q^m) = sum_i x_i^m [n_i] prod_(j!=i) (q^n_j x_i - q^-n_j x_j)/(x_i - x_j)",
              [&](json& w) {
                const TraceResult tr = qtrace_power(qa, m);
                const Scalar target = qtrace_target(m, o);
                w["computed"] = tr.value.to_string();
                w["target"] = target.to_string();
                w["probed"] = tr.probed.size();
                w["scalar"] = tr.scalar;
                w["consistent"] = tr.consistent;
                if (!tr.detail.empty()) w["detail"] = tr.detail;
                return tr.scalar && tr.consistent && tr.value == target;
              });
  }

  run_check(cert, "reflection equation", "S12 Q2 S12 Q2 = Q2 S12 Q2 S12 on C^n (x) C^n (x) M", [&](json& w) {
    const ReflectionResult r = re_check(qa, hecke_S(o.n, qm.orientation), opts.re_cutoff);
    w["max_total"] = opts.re_cutoff;
    w["spaces"] = r.spaces;
    if (!r.witness.empty()) w["first_difference"] = r.witness;
    return r.holds && r.spaces > 0;
  });

  run_check(cert, "Q-equivariance", "Q commutes with the action of U_q(gl(n)) on C^n (x) M", [&](json& w) {
    std::string why;
    const bool ok = q_equivariant(qa, opts.cutoff, &why);
    if (!ok) w["first_difference"] = why;
    return ok;
  });

  const std::vector<int> heads = sorted_block_starts(sigma, o.blocks);

  run_check(cert, "filtration", "images of the V-filtration jump exactly at the sigma-images of block starts",
            [&](json& w) {
              const WeightVector v = top_vector(*sm->quotient.module);
              std::vector<WeightVector> gens;
              std::vector<std::size_t> dims{0};
              std::vector<int> jumps;
              for (int j = 0; j < o.n; ++j) {
                gens.push_back(embed(*tensor, j, v));
                dims.push_back(total_dim(f_span(*tensor, gens, opts.cutoff)));
                if (dims.back() > dims[dims.size() - 2]) jumps.push_back(j + 1);
              }
              std::vector<int> expected;
              for (int h : heads) expected.push_back(h + 1);
              std::size_t full = 0;
              for (const auto& c : enumerate_contents(o.n, opts.cutoff)) full += tensor->dim(c);
              w["dims"] = dims;
              w["jumps"] = jumps;
              w["expected"] = expected;
              w["tensor_dim"] = full;
              return jumps == expected && dims.back() == full;
            });

  run_check(cert, "direct sum", "C^n (x) M splits into the submodules generated by the normalized singular vectors",
            [&](json& w) {
              const Weight& sl = sm->sigma_lambda;
              std::vector<Scalar> xs;
              std::vector<Scalar> cbar;
              std::vector<SubmoduleSpans> pieces;
              bool ok = true;
              json vecs = json::array();
              for (std::size_t i = 0; i < heads.size(); ++i) {
                const int m = heads[i];
                xs.push_back(hat_x(sl, m));
                Scalar ci(1);
                for (std::size_t j = 0; j < i; ++j) ci *= xs[i] - xs[j];
                const Scalar ch = c_hat(sl, m);
                const Scalar cb = ci.is_zero() ? Scalar() : ch / ci;
                cbar.push_back(cb);
                if (cb.is_zero()) {
                  ok = false;
                  continue;
                }
                WeightVector y = u_hat(*tensor, m);
                for (auto& s : y.coords) s = s / cb;
                const bool nonzero = !y.is_zero();
                const bool singular = is_singular(*tensor, y);
                const Vector qy = qa.on_tensor(y.content).apply(y.coords);
                bool eigen = true;
                for (std::size_t t = 0; t < qy.size(); ++t) eigen = eigen && qy[t] == xs[i] * y.coords[t];
                ok = ok && nonzero && singular && eigen;
                vecs.push_back({{"index", m + 1}, {"nonzero", nonzero}, {"singular", singular}, {"eigenvector", eigen}});
                pieces.push_back(f_span(*tensor, {y}, opts.cutoff));
              }
              w["eigenvalues"] = scalars(xs);
              w["c_bar"] = scalars(cbar);
              w["generators"] = vecs;
              std::set<std::string> distinct;
              for (const auto& x : xs) distinct.insert(x.to_string());
              std::set<std::string> target;
              for (const auto& x : o.x) target.insert(x.to_string());
              w["same_spectrum"] = distinct == target;
              ok = ok && distinct == target;
              if (!ok) return false;
              json piece_dims = json::array();
              for (const auto& p : pieces) piece_dims.push_back(total_dim(p));
              w["piece_dims"] = piece_dims;
              for (const auto& c : enumerate_contents(o.n, opts.cutoff)) {
                const std::size_t full = tensor->dim(c);
                Subspace sum(full);
                std::size_t added = 0;
                for (const auto& p : pieces) {
                  auto it = p.find(c);
                  if (it == p.end()) continue;
                  added += it->second.dim();
                  for (const auto& b : it->second.basis()) sum.insert(b);
                }
                if (added != full || sum.dim() != full) {
                  w["failing_content"] = c;
                  w["sum_of_dims"] = added;
                  w["span_dim"] = sum.dim();
                  w["space_dim"] = full;
                  return false;
                }
              }
              return true;
            });
  return cert;
}

bool SweepResult::passed() const {
  if (!agreement || certificates.empty()) return false;
  for (const auto& c : certificates)
    if (!c.passed()) return false;
  return true;
}

unsigned env_threads() {
  const char* s = std::getenv("QCONJ_THREADS");
  if (!s) return 1;
  const long v = std::strtol(s, nullptr, 10);
  return v > 0 ? static_cast<unsigned>(v) : 1;
}

SweepResult sigma_sweep(const OrbitData& o, const VerifyOptions& opts, unsigned threads) {
  const std::vector<Permutation> perms = enumerate_admissible(o.blocks);
  SweepResult res;
  res.certificates.resize(perms.size());
  if (threads == 0) threads = env_threads();
  threads = std::min<unsigned>(threads, static_cast<unsigned>(perms.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < perms.size(); i = next++) res.certificates[i] = verify_orbit(o, perms[i], opts);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<std::string> names{"minimal polynomial"};
  for (int m = 1; m <= o.k() + opts.extra_traces; ++m)
    names.push_back("q-trace m=" + std::to_string(m) + (m > o.k() ? " (extended)" : ""));
  res.agreement = true;
  const Certificate& first = res.certificates.front();
  for (const auto& c : res.certificates)
    for (const auto& name : names) {
      const std::string a = first.witness_field(name, "computed");
      const std::string b = c.witness_field(name, "computed");
      if (a.empty() || a != b) {
        res.agreement = false;
        if (res.detail.empty())
          res.detail = name + " differs for sigma " + Permutation::from_one_based(c.sigma).to_string();
      }
    }
  return res;
}

}  // namespace qconj
