#include "qconj/braiding.hpp"

#include <sstream>

#include "qconj/error.hpp"

namespace qconj {

std::string to_string(SOrientation o) { return o == SOrientation::FlipTimesR ? "S = P R" : "S = R P"; }

Matrix natural_R(int n) {
  const auto un = static_cast<std::size_t>(n);
  Matrix r(un * un, un * un);
  const Scalar q = Scalar::q_pow(1);
  const Scalar d = q - q.inverse();
  for (std::size_t a = 0; a < un; ++a)
    for (std::size_t b = 0; b < un; ++b) {
      r(a * un + b, a * un + b) = a == b ? q : Scalar(1);
      if (a > b) r(a * un + b, b * un + a) = d;
    }
  return r;
}

Matrix flip(int n) {
  const auto un = static_cast<std::size_t>(n);
  Matrix p(un * un, un * un);
  for (std::size_t a = 0; a < un; ++a)
    for (std::size_t b = 0; b < un; ++b) p(b * un + a, a * un + b) = Scalar(1);
  return p;
}

Matrix hecke_S(int n, SOrientation orientation) {
  return orientation == SOrientation::FlipTimesR ? flip(n) * natural_R(n) : natural_R(n) * flip(n);
}

Matrix QMatrix::natural_image() const {
  const auto un = static_cast<std::size_t>(n);
  Matrix out(un * un, un * un);
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j) {
      const Matrix p = natural_rep(Q[i][j]);
      for (std::size_t k = 0; k < un; ++k)
        for (std::size_t l = 0; l < un; ++l) out(i * un + k, j * un + l) = p(k, l);
    }
  return out;
}

QMatrix build_Q(int n) {
  const RootSystem rs(n);
  const auto un = static_cast<std::size_t>(n);
  const Scalar qinv = Scalar::q_pow(-1);
  QMatrix m;
  m.n = n;
  m.L.assign(un, std::vector<UqElement>(un, UqElement(n)));
  m.U.assign(un, std::vector<UqElement>(un, UqElement(n)));
  m.Q.assign(un, std::vector<UqElement>(un, UqElement(n)));
  for (int a = 0; a < n; ++a) {
    const auto ua = static_cast<std::size_t>(a);
    m.L[ua][ua] = UqElement::K(n, rs.eps(a));
    for (int b = a - 1; b >= 0; --b) {
      const auto ub = static_cast<std::size_t>(b);
      const UqElement e = UqElement::E(n, b);
      m.L[ua][ub] = e * m.L[ua][ub + 1] - qinv * (m.L[ua][ub + 1] * e);
    }
    m.U[ua][ua] = UqElement::K(n, rs.eps(a));
    for (int b = a; b + 1 < n; ++b) {
      const auto ub = static_cast<std::size_t>(b);
      const UqElement f = UqElement::F(n, b);
      m.U[ua][ub + 1] = f * m.U[ua][ub] - qinv * (m.U[ua][ub] * f);
    }
  }
  for (std::size_t i = 0; i < un; ++i)
    for (std::size_t j = 0; j < un; ++j)
      for (std::size_t k = std::max(i, j); k < un; ++k) m.Q[i][j] += m.U[i][k] * m.L[k][j];

  const Matrix image = m.natural_image();
  for (SOrientation o : {SOrientation::FlipTimesR, SOrientation::RTimesFlip}) {
    const Matrix s = hecke_S(n, o);
    if (s * s == image) {
      m.orientation = o;
      return m;
    }
  }
  throw ValidationFailure("S^2 does not match the natural image of Q in either orientation");
}

QAction::QAction(std::shared_ptr<const WeightModule> tensor, const QMatrix& q) : tensor_(std::move(tensor)), q_(q) {
  if (!tensor_->layout()) throw InvalidArgument("Q acts on tensor modules C^n (x) M");
  if (q_.n != tensor_->n()) throw InvalidArgument("rank mismatch between Q and module");
}

const Matrix& QAction::entry(int i, int j, const Content& b) {
  auto key = std::make_tuple(i, j, b);
  auto it = entries_.find(key);
  if (it != entries_.end()) return it->second;
  Matrix m = act_matrix(q_.Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], base(), b);
  return entries_.emplace(std::move(key), std::move(m)).first->second;
}

const Matrix& QAction::on_tensor(const Content& c) {
  auto it = tensor_ops_.find(c);
  if (it != tensor_ops_.end()) return it->second;
  const auto& comps = tensor_->layout()->components.at(c);
  const std::size_t dim = tensor_->dim(c);
  Matrix out(dim, dim);
  for (const auto& src : comps)
    for (const auto& dst : comps) {
      const Matrix& block = entry(dst.j, src.j, src.base_content);
      for (std::size_t r = 0; r < block.rows(); ++r)
        for (std::size_t k = 0; k < block.cols(); ++k) out(dst.offset + r, src.offset + k) = block(r, k);
    }
  return tensor_ops_.emplace(c, std::move(out)).first->second;
}

Matrix QAction::qtrace_power(int m, const Content& d) {
  if (m < 1) throw InvalidArgument("power must be positive");
  const int n = tensor_->n();
  const RootSystem rs(n);
  const std::size_t dim = base().dim(d);
  Matrix out(dim, dim);
  for (int i = 0; i < n; ++i) {
    const Content c = d + rs.eps_content(i);
    if (total(c) > tensor_->cutoff()) throw CutoffExceeded("q-trace needs tensor content " + format_list(c));
    auto key = std::make_pair(c, m);
    auto it = powers_.find(key);
    if (it == powers_.end()) {
      Matrix p = on_tensor(c);
      for (int t = 1; t < m; ++t) p = p * on_tensor(c);
      it = powers_.emplace(key, std::move(p)).first;
    }
    const auto* comp = tensor_->layout()->find(c, i);
    const Scalar w = Scalar::q_pow(n - 1 - 2 * i);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t k = 0; k < dim; ++k) {
        const Scalar& x = it->second(comp->offset + r, comp->offset + k);
        if (!x.is_zero()) out(r, k) += w * x;
      }
  }
  return out;
}

ScalarPoly min_poly(QAction& qa, int max_total) {
  ScalarPoly p({Scalar(1)});
  for (const auto& c : enumerate_contents(qa.tensor().n(), std::min(max_total, qa.tensor().cutoff()))) {
    if (qa.tensor().dim(c) == 0) continue;
    p = lcm(p, minimal_polynomial(qa.on_tensor(c)));
  }
  return p;
}

TraceResult qtrace_power(QAction& qa, int m) {
  TraceResult res;
  const int n = qa.tensor().n();
  const int depth = qa.tensor().cutoff() - (n - 1);
  if (depth < 0) throw CutoffExceeded("q-trace needs cutoff at least n - 1");
  bool first = true;
  for (const auto& d : enumerate_contents(n, depth)) {
    if (qa.base().dim(d) == 0) continue;
    const Matrix t = qa.qtrace_power(m, d);
    res.probed.push_back(d);
    const Scalar s = t.rows() ? t(0, 0) : Scalar();
    for (std::size_t r = 0; r < t.rows(); ++r)
      for (std::size_t k = 0; k < t.cols(); ++k)
        if (!(t(r, k) == (r == k ? s : Scalar()))) {
          res.scalar = false;
          if (res.detail.empty()) res.detail = "non-scalar entry at content " + format_list(d);
        }
    if (first) {
      res.value = s;
      first = false;
    } else if (!(s == res.value)) {
      res.consistent = false;
      if (res.detail.empty()) res.detail = "value differs at content " + format_list(d) + ": " + s.to_string();
    }
  }
  return res;
}

ReflectionResult re_check(QAction& qa, const Matrix& s, int max_total) {
  const WeightModule& t = qa.tensor();
  const int n = t.n();
  const auto un = static_cast<std::size_t>(n);
  const RootSystem rs(n);
  if (s.rows() != un * un || s.cols() != un * un) throw InvalidArgument("S has wrong size");
  ReflectionResult res;
  for (const auto& c : enumerate_contents(n, std::min(max_total, t.cutoff()))) {
    // Triple space = sum_a w_a (x) T_{c - e(a)}.
    struct Block {
      int a;
      Content tc;
      std::size_t offset;
    };
    std::vector<Block> blocks;
    std::size_t dim = 0;
    for (int a = 0; a < n; ++a) {
      const Content tc = c - rs.eps_content(a);
      if (!non_negative(tc)) continue;
      blocks.push_back({a, tc, dim});
      dim += t.dim(tc);
    }
    if (dim == 0) continue;
    Matrix q2(dim, dim);
    Matrix s12(dim, dim);
    auto locate = [&](int a, int b) -> std::pair<std::size_t, std::size_t> {
      for (const auto& blk : blocks)
        if (blk.a == a) {
          const auto* comp = t.layout()->find(blk.tc, b);
          if (!comp) return {0, 0};
          return {blk.offset + comp->offset, comp->dim};
        }
      return {0, 0};
    };
    for (const auto& blk : blocks) {
      const Matrix& qt = qa.on_tensor(blk.tc);
      for (std::size_t r = 0; r < qt.rows(); ++r)
        for (std::size_t k = 0; k < qt.cols(); ++k) q2(blk.offset + r, blk.offset + k) = qt(r, k);
      for (const auto& comp : t.layout()->components.at(blk.tc)) {
        const int b = comp.j;
        for (int a2 = 0; a2 < n; ++a2)
          for (int b2 = 0; b2 < n; ++b2) {
            const Scalar& x = s(static_cast<std::size_t>(a2) * un + static_cast<std::size_t>(b2),
                                static_cast<std::size_t>(blk.a) * un + static_cast<std::size_t>(b));
            if (x.is_zero()) continue;
            auto [off, d] = locate(a2, b2);
            if (d != comp.dim) throw ValidationFailure("S does not preserve weights");
            for (std::size_t k = 0; k < d; ++k) s12(off + k, blk.offset + comp.offset + k) = x;
          }
      }
    }
    const Matrix lhs = s12 * q2 * s12 * q2;
    const Matrix rhs = q2 * s12 * q2 * s12;
    ++res.spaces;
    if (lhs == rhs) continue;
    res.holds = false;
    for (std::size_t r = 0; r < dim && res.witness.empty(); ++r)
      for (std::size_t k = 0; k < dim; ++k)
        if (!(lhs(r, k) == rhs(r, k))) {
          std::ostringstream os;
          os << "content " << format_list(c) << " entry (" << r << "," << k << "): " << lhs(r, k).to_string()
             << " vs " << rhs(r, k).to_string();
          res.witness = os.str();
          break;
        }
    break;
  }
  return res;
}

bool q_equivariant(QAction& qa, int max_total, std::string* witness) {
  const WeightModule& t = qa.tensor();
  const int n = t.n();
  const int top = std::min(max_total, t.cutoff());
  for (const auto& c : enumerate_contents(n, top)) {
    const WeightSpace& s = t.at(c);
    for (int i = 0; i < n - 1; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (s.F[ui] && total(c) + 1 <= top) {
        const Content up = c + unit_content(n, i);
        if (!(qa.on_tensor(up) * *s.F[ui] == *s.F[ui] * qa.on_tensor(c))) {
          if (witness) *witness = "[Q, F" + std::to_string(i + 1) + "] != 0 at content " + format_list(c);
          return false;
        }
      }
      if (s.E[ui]) {
        const Content down = c - unit_content(n, i);
        if (!(qa.on_tensor(down) * *s.E[ui] == *s.E[ui] * qa.on_tensor(c))) {
          if (witness) *witness = "[Q, E" + std::to_string(i + 1) + "] != 0 at content " + format_list(c);
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace qconj
