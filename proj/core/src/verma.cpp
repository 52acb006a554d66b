#include "qconj/verma.hpp"

#include <string>

#include "qconj/error.hpp"

namespace qconj {

namespace {

Vector column_of(const Matrix& a, std::size_t k) { return a.column(k); }

}  // namespace

std::shared_ptr<const WeightModule> build_verma(const Weight& lam, int cutoff) {
  const int n = static_cast<int>(lam.size());
  auto m = std::make_shared<WeightModule>(n, lam, cutoff);
  const RootSystem rs(n);
  const Scalar q2 = Scalar::q_int(2);

  auto apply_f = [&m](int i, const Content& c, const Vector& x) {
    return m->at(c).F[static_cast<std::size_t>(i)]->apply(x);
  };

  for (const Content& d : enumerate_contents(n, cutoff)) {
    if (total(d) == 0) {
      m->add_space(d, 1).labels = {"v"};
      continue;
    }
    // Coordinates of sum_i F_i (x) U_{d - delta_i}.
    std::vector<std::size_t> offset(static_cast<std::size_t>(n - 1), 0);
    std::vector<std::size_t> block_dim(static_cast<std::size_t>(n - 1), 0);
    std::size_t ambient = 0;
    for (int i = 0; i < n - 1; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      offset[ui] = ambient;
      if (d[ui] > 0) block_dim[ui] = m->dim(d - unit_content(n, i));
      ambient += block_dim[ui];
    }
    Subspace relations(ambient);
    auto place = [&](Vector& rel, int i, const Vector& x, const Scalar& c) {
      const std::size_t o = offset[static_cast<std::size_t>(i)];
      for (std::size_t k = 0; k < x.size(); ++k)
        if (!x[k].is_zero()) rel[o + k] += c * x[k];
    };
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n - 1; ++j) {
        if (i == j) continue;
        const Content di = unit_content(n, i);
        const Content dj = unit_content(n, j);
        if (std::abs(i - j) == 1) {
          const Content base = d - di - di - dj;
          if (!non_negative(base)) continue;
          for (std::size_t k = 0; k < m->dim(base); ++k) {
            Vector x(m->dim(base));
            x[k] = Scalar(1);
            const Vector fj = apply_f(j, base, x);
            const Vector fi = apply_f(i, base, x);
            const Vector fifj = apply_f(i, base + dj, fj);
            const Vector fjfi = apply_f(j, base + di, fi);
            const Vector fifi = apply_f(i, base + di, fi);
            Vector rel(ambient);
            place(rel, i, fifj, Scalar(1));
            place(rel, i, fjfi, -q2);
            place(rel, j, fifi, Scalar(1));
            relations.insert(rel);
          }
        } else if (i < j) {
          const Content base = d - di - dj;
          if (!non_negative(base)) continue;
          for (std::size_t k = 0; k < m->dim(base); ++k) {
            Vector x(m->dim(base));
            x[k] = Scalar(1);
            Vector rel(ambient);
            place(rel, i, apply_f(j, base, x), Scalar(1));
            place(rel, j, apply_f(i, base, x), Scalar(-1));
            relations.insert(rel);
          }
        }
      }

    const std::vector<std::size_t> free = relations.free_coordinates();
    const std::uint64_t expected = kostant_partition_count(n, d);
    if (free.size() != expected)
      throw ValidationFailure("Verma weight space " + format_list(d) + " has dimension " + std::to_string(free.size()) +
                              ", expected " + std::to_string(expected));
    std::vector<long> position(ambient, -1);
    for (std::size_t c = 0; c < free.size(); ++c) position[free[c]] = static_cast<long>(c);
    std::vector<long> pivot_row(ambient, -1);
    for (std::size_t r = 0; r < relations.dim(); ++r) pivot_row[relations.pivots()[r]] = static_cast<long>(r);

    auto block_of = [&](std::size_t p) {
      int i = 0;
      while (p >= offset[static_cast<std::size_t>(i)] + block_dim[static_cast<std::size_t>(i)]) ++i;
      return i;
    };

    {
      WeightSpace& s = m->add_space(d, free.size());
      for (std::size_t p : free) {
        const int i = block_of(p);
        const Content lower = d - unit_content(n, i);
        s.labels.push_back("F" + std::to_string(i + 1) + " " +
                           m->at(lower).labels[p - offset[static_cast<std::size_t>(i)]]);
      }
    }

    // F_i : U_{d - delta_i} -> U_d.
    for (int i = 0; i < n - 1; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (d[ui] == 0) continue;
      Matrix f(free.size(), block_dim[ui]);
      for (std::size_t k = 0; k < block_dim[ui]; ++k) {
        const std::size_t p = offset[ui] + k;
        if (position[p] >= 0) {
          f(static_cast<std::size_t>(position[p]), k) = Scalar(1);
        } else {
          const Vector& rel = relations.basis()[static_cast<std::size_t>(pivot_row[p])];
          for (std::size_t c = 0; c < free.size(); ++c)
            if (!rel[free[c]].is_zero()) f(c, k) = -rel[free[c]];
        }
      }
      m->mutable_at(d - unit_content(n, i)).F[ui] = std::move(f);
    }

    // E_i (F_j b) = F_j (E_i b) + delta_ij [(wt b, alpha_i)] b.
    for (int i = 0; i < n - 1; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (d[ui] == 0) continue;
      const Content target = d - unit_content(n, i);
      Matrix e(m->dim(target), free.size());
      for (std::size_t c = 0; c < free.size(); ++c) {
        const std::size_t p = free[c];
        const int j = block_of(p);
        const std::size_t k = p - offset[static_cast<std::size_t>(j)];
        const Content lower = d - unit_content(n, j);
        Vector res(m->dim(target));
        if (lower[ui] > 0) {
          const Vector eb = column_of(*m->at(lower).E[ui], k);
          res = apply_f(j, lower - unit_content(n, i), eb);
        }
        if (i == j) res[k] += Scalar::q_int(pairing(m->weight(lower), rs.simple_root(i)));
        for (std::size_t r = 0; r < res.size(); ++r) e(r, c) = res[r];
      }
      m->mutable_at(d).E[ui] = std::move(e);
    }
  }
  return m;
}

WeightVector top_vector(const WeightModule& m) {
  return m.basis_vector(Content(static_cast<std::size_t>(m.n() - 1), 0), 0);
}

UqElement dyn_root(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw InvalidArgument("root index out of range");
  if (i == j) return UqElement::one(n);
  if (i > j) return UqElement(n);
  if (j == i + 1) return UqElement::F(n, i);
  const RootSystem rs(n);
  const Weight beta = rs.root_weight({i + 1, j});
  const int rb = pairing(rs.rho(), beta);
  const UqElement fb = dyn_root(n, i + 1, j);
  const UqElement fi = UqElement::F(n, i);
  return fi * fb * UqElement::cartan_bracket(n, beta, rb) - fb * fi * UqElement::cartan_bracket(n, beta, rb - 1);
}

UqElement dyn_root_at(int n, int i, int j, const Weight& lam) {
  UqElement out(n);
  const UqElement f = dyn_root(n, i, j);
  for (const auto& [m, c] : f.terms())
    out.add_term({m.word, Weight(static_cast<std::size_t>(n), 0)}, c * Scalar::q_pow(pairing(m.cartan, lam)));
  return out;
}

Scalar principal_coefficient(int n, int i, int j, const Weight& lam) {
  Monomial word{{}, Weight(static_cast<std::size_t>(n), 0)};
  for (int t = i; t < j; ++t) word.word.push_back(f_letter(t));
  const UqElement f = dyn_root_at(n, i, j, lam);
  auto it = f.terms().find(word);
  return it == f.terms().end() ? Scalar() : it->second;
}

std::vector<BasicDynCheck> check_basic_dyn(const WeightModule& verma, const Root& alpha, int m) {
  const int n = verma.n();
  if (m < 1) throw InvalidArgument("power must be positive");
  const Weight& lam = verma.top();
  const RootSystem rs(n);
  const UqElement fa = dyn_root(n, alpha.i, alpha.j);
  const UqElement fb = dyn_root(n, alpha.i + 1, alpha.j);
  WeightVector lower = top_vector(verma);
  for (int t = 0; t < m - 1; ++t) lower = act(fa, verma, lower);
  const WeightVector x = act(fa, verma, lower);
  const int shifted = pairing(lam, rs.root_weight(alpha)) + pairing(rs.rho(), rs.root_weight(alpha));
  const Scalar coeff = Scalar::q_int(m) * Scalar::q_int(shifted - m);
  std::vector<BasicDynCheck> out;
  for (int s = 0; s < n - 1; ++s) {
    BasicDynCheck c;
    c.simple = s;
    c.lhs = verma.apply_E(s, x);
    if (s == alpha.i) {
      c.rhs = act(fb, verma, lower);
      for (auto& v : c.rhs.coords) v *= coeff;
    } else {
      c.rhs = {c.lhs.content, Vector(c.lhs.coords.size())};
    }
    c.equal = c.lhs.content == c.rhs.content && c.lhs.coords == c.rhs.coords;
    out.push_back(std::move(c));
  }
  return out;
}

WeightVector u_hat(const WeightModule& tensor, int l) {
  if (!tensor.layout()) throw InvalidArgument("u_hat needs a tensor module C^n (x) M");
  const int n = tensor.n();
  if (l < 0 || l >= n) throw InvalidArgument("index out of range");
  const WeightModule& base = *tensor.layout()->base;
  const Weight& lam = base.top();
  const WeightVector v = top_vector(base);
  const Scalar mq = -Scalar::q_pow(1);
  WeightVector out = tensor.zero(RootSystem(n).eps_content(l));
  for (int i = 0; i <= l; ++i) {
    Scalar coeff = mq.pow(i);
    for (int j = 0; j < i; ++j) coeff *= Scalar::q_int(lam[static_cast<std::size_t>(j)] - lam[static_cast<std::size_t>(l)] + l - j - 1);
    if (coeff.is_zero()) continue;
    const WeightVector term = embed(tensor, i, act(dyn_root(n, i, l), base, v));
    for (std::size_t k = 0; k < term.coords.size(); ++k)
      if (!term.coords[k].is_zero()) out.coords[k] += coeff * term.coords[k];
  }
  return out;
}

Scalar c_hat(const Weight& lam, int l) {
  Scalar c(1);
  for (int j = 0; j < l; ++j) c *= Scalar::q_int(lam[static_cast<std::size_t>(j)] - lam[static_cast<std::size_t>(l)] + l - j);
  return c;
}

SubmoduleSpans filtration_V(const WeightModule& tensor, int j, int max_total) {
  const WeightVector v = top_vector(*tensor.layout()->base);
  std::vector<WeightVector> gens;
  for (int i = 0; i < j; ++i) gens.push_back(embed(tensor, i, v));
  return f_span(tensor, gens, max_total);
}

SubmoduleSpans filtration_W(const WeightModule& tensor, int j, int max_total) {
  std::vector<WeightVector> gens;
  for (int i = 0; i < j; ++i) gens.push_back(u_hat(tensor, i));
  return f_span(tensor, gens, max_total);
}

Quotient quotient_by_singulars(std::shared_ptr<const WeightModule> m, const std::vector<WeightVector>& gens) {
  for (const auto& g : gens)
    if (!is_singular(*m, g)) throw InvalidArgument("generator at content " + format_list(g.content) + " is not singular");
  SubmoduleSpans spans = f_span(*m, gens, m->cutoff());
  if (!is_e_closed(*m, spans)) throw ValidationFailure("generated submodule is not stable under E");
  return quotient_module(std::move(m), std::move(spans));
}

SigmaModule build_M_sigma(const Weight& lam, const BlockStructure& blocks, const Permutation& sigma, int cutoff) {
  if (!is_admissible(sigma, blocks)) throw InvalidArgument("permutation " + sigma.to_string() + " is not admissible");
  if (!is_block_constant(lam, blocks)) throw InvalidArgument("weight is not constant on blocks");
  if (!is_levi_regular(lam, blocks)) throw InvalidArgument("block values of the weight are not distinct");
  SigmaModule out;
  out.lambda = lam;
  out.sigma_lambda = shifted_action(sigma, lam);
  out.verma = build_verma(out.sigma_lambda, cutoff);
  const WeightVector v = top_vector(*out.verma);
  for (int a : blocks.levi_simple_roots()) {
    const Root r = sigma.apply(Root{a, a + 1});
    out.generator_roots.push_back(r);
    out.generators.push_back(act(dyn_root(blocks.n(), r.i, r.j), *out.verma, v));
  }
  out.quotient = quotient_by_singulars(out.verma, out.generators);
  return out;
}

}  // namespace qconj
