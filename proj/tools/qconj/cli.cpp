#include "qconj/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qconj/braiding.hpp"
#include "qconj/error.hpp"
#include "qconj/orbit.hpp"
#include "qconj/verma.hpp"

namespace qconj::cli {

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string monomial(int e) { return e == 0 ? "1" : "q^" + std::to_string(e); }

void print_vector(std::ostream& out, const WeightSpace& s, const Vector& v) {
  bool first = true;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    out << (first ? "    " : "  + ") << "(" << v[k].to_string() << ") " << s.labels[k] << "\n";
    first = false;
  }
  if (first) out << "    0\n";
}

Weight read_lambda(const std::string& text, std::optional<int> n) {
  const Weight lam = parse_int_list(text);
  if (n && static_cast<int>(lam.size()) != *n) throw UsageError("--lambda must have n entries");
  if (lam.size() < 2) throw UsageError("n must be at least 2");
  return lam;
}

int selfcheck(bool json_out, bool fault, std::ostream& out) {
  const auto results = run_selfcheck(fault);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.pass;
  if (json_out) {
    nlohmann::json doc{{"status", ok ? "pass" : "fail"}, {"suites", nlohmann::json::array()}};
    for (const auto& r : results)
      doc["suites"].push_back(
          {{"name", r.name}, {"status", r.pass ? "pass" : "fail"}, {"seconds", r.seconds}, {"detail", r.detail}});
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(10) << r.name << std::fixed
          << std::setprecision(3) << r.seconds << "s";
      if (!r.pass) out << "  " << r.detail;
      out << "\n";
    }
    out << (ok ? "selfcheck passed" : "selfcheck failed") << "\n";
  }
  return ok ? 0 : 1;
}

void summarize(std::ostream& out, const Certificate& c) {
  out << "sigma " << Permutation::from_one_based(c.sigma).to_string() << ": " << (c.passed() ? "PASS" : "FAIL")
      << "\n";
  for (const auto& ch : c.checks) {
    out << "  [" << (ch.pass ? "pass" : "FAIL") << "] " << ch.name;
    if (!ch.pass) out << "  " << ch.witness;
    out << "\n";
  }
}

struct OrbitArgs {
  std::string mult, exps, sigma = "all", out;
  int cutoff = 0;
  int re_cutoff = 2;
  bool json = false;
};

int orbit_verify(const OrbitArgs& a, std::ostream& out) {
  OrbitData o = [&] {
    try {
      return make_orbit(parse_int_list(a.mult), parse_int_list(a.exps));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }();
  VerifyOptions opts;
  opts.cutoff = a.cutoff > 0 ? a.cutoff : default_cutoff(o.n);
  opts.re_cutoff = a.re_cutoff;
  if (opts.re_cutoff < 0) throw UsageError("--re-cutoff must be nonnegative");

  std::vector<Certificate> certs;
  bool ok = true;
  std::string agreement;
  if (a.sigma == "all") {
    SweepResult sw = sigma_sweep(o, opts);
    ok = sw.passed();
    certs = std::move(sw.certificates);
    agreement = sw.agreement ? "pass" : "FAIL " + sw.detail;
  } else {
    std::optional<Permutation> s;
    try {
      s = Permutation::from_one_based(parse_int_list(a.sigma));
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
    if (s->n() != o.n) throw UsageError("--sigma must list n images");
    if (!is_admissible(*s, o.blocks)) throw UsageError("sigma " + s->to_string() + " is not admissible");
    certs.push_back(verify_orbit(o, *s, opts));
    ok = certs.back().passed();
  }

  if (!a.out.empty()) {
    std::ofstream f(a.out);
    if (!f) throw UsageError("cannot write " + a.out);
    f << to_json(certs) << "\n";
  }
  if (a.json) {
    out << to_json(certs) << "\n";
  } else {
    out << o.describe() << " cutoff=" << opts.cutoff << "\n";
    for (const auto& c : certs) summarize(out, c);
    if (!agreement.empty()) out << "sigma agreement: " << agreement << "\n";
    out << certs.size() << " certificate(s), " << (ok ? "all pass" : "failures present") << "\n";
  }
  return ok ? 0 : 1;
}

int enumerate_sigma(const std::string& mult, std::ostream& out) {
  const BlockStructure b(parse_int_list(mult));
  const auto perms = enumerate_admissible(b);
  for (const auto& s : perms) {
    std::vector<int> heads;
    for (int h : sorted_block_starts(s, b)) heads.push_back(h + 1);
    out << s.to_string() << "  " << (is_levi_placement(s, b) ? "levi" : "non-levi") << "  heads "
        << format_list(heads) << "\n";
  }
  out << perms.size() << " admissible permutation(s)\n";
  return 0;
}

int singular(std::optional<int> n, const std::string& lambda, const std::string& weight, const std::string& content,
             int cutoff, std::ostream& out) {
  const Weight lam = read_lambda(lambda, n);
  const int rank = static_cast<int>(lam.size());
  if (weight.empty() == content.empty()) throw UsageError("give exactly one of --weight and --content");
  const RootSystem rs(rank);
  if (!weight.empty()) {
    if (weight.size() < 3 || weight.substr(0, 2) != "+e") throw UsageError("--weight must look like +e3");
    const std::vector<int> idx = parse_int_list(weight.substr(2));
    if (idx.size() != 1 || idx[0] < 1 || idx[0] > rank) throw UsageError("--weight index out of range");
    const int l = idx[0] - 1;
    const int d = std::max(cutoff > 0 ? cutoff : 0, l);
    const auto t = tensor_with_natural(build_verma(lam, d));
    const Content c = rs.eps_content(l);
    const auto ker = singular_space(*t, c);
    out << "singular vectors of weight lambda+e" << idx[0] << " in C^n (x) M(" << format_list(lam)
        << "): dimension " << ker.size() << "\n";
    for (const auto& v : ker) print_vector(out, t->at(c), v.coords);
    const WeightVector u = u_hat(*t, l);
    Subspace k(u.coords.size());
    for (const auto& v : ker) k.insert(v.coords);
    out << "u_hat:\n";
    print_vector(out, t->at(c), u.coords);
    out << "u_hat in kernel: " << (k.contains(u.coords) ? "yes" : "no") << "\n";
    return 0;
  }
  const Content c = parse_int_list(content);
  if (static_cast<int>(c.size()) != rank - 1 || !non_negative(c)) throw UsageError("--content needs n-1 entries >= 0");
  const auto v = build_verma(lam, std::max(cutoff, total(c)));
  const auto ker = singular_space(*v, c);
  out << "singular vectors at content " << format_list(c) << " in M(" << format_list(lam) << "): dimension "
      << ker.size() << "\n";
  for (const auto& x : ker) print_vector(out, v->at(c), x.coords);
  return 0;
}

int dynroot(std::optional<int> n, const std::string& alpha, const std::string& lambda, std::ostream& out) {
  const std::vector<int> a = parse_int_list(alpha);
  if (a.size() != 2) throw UsageError("--alpha must be i,j");
  std::optional<Weight> lam;
  if (!lambda.empty()) lam = read_lambda(lambda, n);
  const int rank = lam ? static_cast<int>(lam->size()) : n.value_or(0);
  if (rank < 2) throw UsageError("give --n or --lambda");
  if (a[0] < 1 || a[1] > rank || a[0] >= a[1]) throw UsageError("--alpha needs 1 <= i < j <= n");
  const int i = a[0] - 1;
  const int j = a[1] - 1;
  out << (lam ? dyn_root_at(rank, i, j, *lam) : dyn_root(rank, i, j)).to_string() << "\n";
  return 0;
}

int spectrum(std::optional<int> n, const std::string& lambda, int cutoff, std::ostream& out) {
  const Weight lam = read_lambda(lambda, n);
  const int rank = static_cast<int>(lam.size());
  std::vector<Scalar> xs;
  std::string set;
  for (int l = 0; l < rank; ++l) {
    xs.push_back(hat_x(lam, l));
    set += (l ? ", " : "") + monomial(2 * (lam[static_cast<std::size_t>(l)] - l));
  }
  out << "{" << set << "}\n";
  for (int l = 0; l < rank; ++l) out << "x" << l + 1 << " = " << xs[static_cast<std::size_t>(l)].to_string() << "\n";
  const int d = cutoff > 0 ? cutoff : default_cutoff(rank);
  QAction qa(tensor_with_natural(build_verma(lam, d)), build_Q(rank));
  const ScalarPoly mp = min_poly(qa, d);
  const bool ok = mp == ScalarPoly::from_roots(xs);
  out << "minimal polynomial of Q on C^n (x) M, contents <= " << d << ":";
  for (const auto& c : mp.to_strings()) out << " [" << c << "]";
  out << "\n" << (ok ? "equals" : "differs from") << " prod_i (X - x_i)\n";
  return ok ? 0 : 1;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw InvalidArgument("not an integer list: " + text);
    }
    if (used != item.size()) throw InvalidArgument("not an integer list: " + text);
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument("empty integer list");
  return out;
}

int default_cutoff(int n) { return n <= 3 ? 4 : 3; }

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of quantized conjugacy classes of GL(n)", "qconj"};
  app.require_subcommand(1);

  bool json_out = false;
  bool fault = false;
  auto* sc = app.add_subcommand("selfcheck", "Run the invariant suites at n = 2, 3");
  sc->add_flag("--json", json_out, "Emit a JSON summary");
  sc->add_flag("--inject-fault", fault)->group("");

  OrbitArgs oa;
  auto* ov = app.add_subcommand("orbit-verify", "Verify the orbit relations on M_{sigma.lambda}");
  ov->add_option("--mult", oa.mult, "Block sizes n_1,...,n_k")->required();
  ov->add_option("--exps", oa.exps, "Exponents a_1,...,a_k of x_i = q^(2(a_i - m_i + 1))")->required();
  ov->add_option("--sigma", oa.sigma, "One-based images or 'all'");
  ov->add_option("--cutoff", oa.cutoff, "Degree cutoff D (default 4 for n <= 3, 3 otherwise)");
  ov->add_option("--re-cutoff", oa.re_cutoff, "Content bound for the reflection equation");
  ov->add_option("--out", oa.out, "Write certificates to this file");
  ov->add_flag("--json", oa.json, "Print certificates instead of a summary");

  std::string mult;
  auto* es = app.add_subcommand("enumerate-sigma", "List admissible permutations");
  es->add_option("--mult", mult, "Block sizes")->required();

  std::optional<int> n;
  std::string lambda, weight, content, alpha;
  int cutoff = 0;
  auto* sg = app.add_subcommand("singular", "Singular vectors by the kernel of the E_i");
  sg->add_option("--n", n);
  sg->add_option("--lambda", lambda)->required();
  sg->add_option("--weight", weight, "+eK: weight lambda + e_K in C^n (x) M");
  sg->add_option("--content", content, "Content d of a Verma weight space");
  sg->add_option("--cutoff", cutoff);

  auto* dr = app.add_subcommand("dynroot", "Dynamical root vector");
  dr->add_option("--n", n);
  dr->add_option("--alpha", alpha, "i,j for e_i - e_j")->required();
  dr->add_option("--lambda", lambda, "Evaluate the Cartan letters at this weight");

  auto* sp = app.add_subcommand("spectrum", "Eigenvalues of Q on C^n (x) M_lambda");
  sp->add_option("--n", n);
  sp->add_option("--lambda", lambda)->required();
  sp->add_option("--cutoff", cutoff);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*sc) return selfcheck(json_out, fault, out);
    if (*ov) return orbit_verify(oa, out);
    if (*es) return enumerate_sigma(mult, out);
    if (*sg) return singular(n, lambda, weight, content, cutoff, out);
    if (*dr) return dynroot(n, alpha, lambda, out);
    if (*sp) return spectrum(n, lambda, cutoff, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}

}  // namespace qconj::cli
