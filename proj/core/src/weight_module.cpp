#include "qconj/weight_module.hpp"

#include <cstdlib>

#include "qconj/error.hpp"

namespace qconj {

namespace {

void contents_rec(int pos, int remaining, Content& cur, std::vector<Content>& out) {
  if (pos == static_cast<int>(cur.size())) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    cur[static_cast<std::size_t>(pos)] = v;
    contents_rec(pos + 1, remaining - v, cur, out);
  }
  cur[static_cast<std::size_t>(pos)] = 0;
}

Vector scaled(const Vector& v, const Scalar& s) {
  Vector r = v;
  for (auto& x : r)
    if (!x.is_zero()) x *= s;
  return r;
}

}  // namespace

std::vector<Content> enumerate_contents(int n, int max_total) {
  std::vector<Content> out;
  if (n == 1) {
    out.emplace_back();
    return out;
  }
  Content cur(static_cast<std::size_t>(n - 1), 0);
  for (int t = 0; t <= max_total; ++t) contents_rec(0, t, cur, out);
  return out;
}

const TensorLayout::Component* TensorLayout::find(const Content& c, int j) const {
  auto it = components.find(c);
  if (it == components.end()) return nullptr;
  for (const auto& comp : it->second)
    if (comp.j == j) return &comp;
  return nullptr;
}

WeightModule::WeightModule(int n, Weight top, int cutoff) : n_(n), top_(std::move(top)), cutoff_(cutoff) {
  if (n < 1) throw InvalidArgument("rank must be positive");
  if (static_cast<int>(top_.size()) != n) throw InvalidArgument("top weight has wrong size");
  if (cutoff < 0) throw InvalidArgument("cutoff must be non-negative");
}

const WeightSpace* WeightModule::find(const Content& d) const {
  auto it = index_.find(d);
  return it == index_.end() ? nullptr : &spaces_[it->second];
}

const WeightSpace& WeightModule::at(const Content& d) const {
  if (const WeightSpace* s = find(d)) return *s;
  if (!non_negative(d)) throw InvalidArgument("negative content " + format_list(d));
  throw CutoffExceeded("content " + format_list(d) + " beyond cutoff " + std::to_string(cutoff_));
}

std::size_t WeightModule::dim(const Content& d) const {
  if (!non_negative(d)) return 0;
  return at(d).dim;
}

WeightSpace& WeightModule::add_space(const Content& d, std::size_t dim) {
  if (static_cast<int>(d.size()) != n_ - 1 || !non_negative(d)) throw InvalidArgument("bad content");
  if (index_.count(d)) throw InvalidArgument("weight space added twice");
  index_[d] = spaces_.size();
  WeightSpace s;
  s.content = d;
  s.dim = dim;
  s.F.resize(static_cast<std::size_t>(n_ - 1));
  s.E.resize(static_cast<std::size_t>(n_ - 1));
  spaces_.push_back(std::move(s));
  return spaces_.back();
}

WeightSpace& WeightModule::mutable_at(const Content& d) {
  auto it = index_.find(d);
  if (it == index_.end()) throw InvalidArgument("no weight space " + format_list(d));
  return spaces_[it->second];
}

WeightVector WeightModule::basis_vector(const Content& d, std::size_t k) const {
  WeightVector v = zero(d);
  v.coords.at(k) = Scalar(1);
  return v;
}

WeightVector WeightModule::apply_F(int i, const WeightVector& v) const {
  const WeightSpace& s = at(v.content);
  const Content target = v.content + unit_content(n_, i);
  if (!s.F[static_cast<std::size_t>(i)]) {
    if (total(target) > cutoff_) throw CutoffExceeded("F" + std::to_string(i + 1) + " beyond cutoff");
    throw InvalidArgument("missing F matrix");
  }
  return {target, s.F[static_cast<std::size_t>(i)]->apply(v.coords)};
}

WeightVector WeightModule::apply_E(int i, const WeightVector& v) const {
  const WeightSpace& s = at(v.content);
  const Content target = v.content - unit_content(n_, i);
  if (!non_negative(target)) return {target, {}};
  if (!s.E[static_cast<std::size_t>(i)]) throw InvalidArgument("missing E matrix");
  return {target, s.E[static_cast<std::size_t>(i)]->apply(v.coords)};
}

Content content_shift(const UqElement& g) {
  Content shift;
  if (!g.homogeneous(&shift)) throw InvalidArgument("element is not weight-homogeneous");
  return shift;
}

WeightVector act(const UqElement& g, const WeightModule& m, const WeightVector& v) {
  const Content target = v.content + content_shift(g);
  WeightVector out{target, Vector(non_negative(target) && total(target) <= m.cutoff() ? m.dim(target) : 0)};
  const Weight wt = m.weight(v.content);
  for (const auto& [mono, c] : g.terms()) {
    WeightVector w{v.content, scaled(v.coords, c * Scalar::q_pow(pairing(mono.cartan, wt)))};
    bool vanished = false;
    for (auto it = mono.word.rbegin(); it != mono.word.rend() && !vanished; ++it) {
      const int i = std::abs(*it) - 1;
      if (*it > 0) {
        w = m.apply_E(i, w);
        vanished = !non_negative(w.content);
      } else {
        w = m.apply_F(i, w);
      }
    }
    if (vanished) continue;
    if (out.coords.size() != w.coords.size()) throw CutoffExceeded("result beyond cutoff");
    for (std::size_t k = 0; k < w.coords.size(); ++k)
      if (!w.coords[k].is_zero()) out.coords[k] += w.coords[k];
  }
  return out;
}

Matrix act_matrix(const UqElement& g, const WeightModule& m, const Content& d) {
  const Content target = d + content_shift(g);
  const std::size_t src_dim = m.dim(d);
  const std::size_t dst_dim = non_negative(target) ? m.dim(target) : 0;
  Matrix out(dst_dim, src_dim);
  const Weight wt = m.weight(d);
  // Suffix products shared between monomials.
  std::map<std::vector<int>, std::optional<Matrix>> memo;
  std::function<const std::optional<Matrix>&(const std::vector<int>&)> suffix =
      [&](const std::vector<int>& word) -> const std::optional<Matrix>& {
    auto it = memo.find(word);
    if (it != memo.end()) return it->second;
    std::optional<Matrix> result;
    if (word.empty()) {
      result = Matrix::identity(src_dim);
    } else {
      const std::vector<int> rest(word.begin() + 1, word.end());
      const std::optional<Matrix>& inner = suffix(rest);
      if (inner) {
        Content c = d;
        for (int l : rest) c = c + (l < 0 ? unit_content(m.n(), -l - 1) : Content(d.size(), 0) - unit_content(m.n(), l - 1));
        const int l = word.front();
        const int i = std::abs(l) - 1;
        const WeightSpace& s = m.at(c);
        if (l > 0) {
          if (c[static_cast<std::size_t>(i)] > 0) result = *s.E[static_cast<std::size_t>(i)] * *inner;
        } else {
          if (!s.F[static_cast<std::size_t>(i)])
            throw CutoffExceeded("F" + std::to_string(i + 1) + " beyond cutoff at content " + format_list(c));
          result = *s.F[static_cast<std::size_t>(i)] * *inner;
        }
      }
    }
    return memo.emplace(word, std::move(result)).first->second;
  };
  for (const auto& [mono, c] : g.terms()) {
    const std::optional<Matrix>& p = suffix(mono.word);
    if (!p) continue;
    out += *p * (c * Scalar::q_pow(pairing(mono.cartan, wt)));
  }
  return out;
}

std::vector<WeightVector> singular_space(const WeightModule& m, const Content& d) {
  const WeightSpace& s = m.at(d);
  std::size_t rows = 0;
  for (int i = 0; i < m.n() - 1; ++i)
    if (d[static_cast<std::size_t>(i)] > 0) rows += m.dim(d - unit_content(m.n(), i));
  Matrix stacked(rows, s.dim);
  std::size_t r0 = 0;
  for (int i = 0; i < m.n() - 1; ++i) {
    if (d[static_cast<std::size_t>(i)] == 0) continue;
    const Matrix& e = *s.E[static_cast<std::size_t>(i)];
    for (std::size_t r = 0; r < e.rows(); ++r)
      for (std::size_t c = 0; c < e.cols(); ++c) stacked(r0 + r, c) = e(r, c);
    r0 += e.rows();
  }
  std::vector<WeightVector> out;
  for (auto& k : kernel(stacked)) out.push_back({d, std::move(k)});
  return out;
}

bool is_singular(const WeightModule& m, const WeightVector& v) {
  for (int i = 0; i < m.n() - 1; ++i) {
    const WeightVector e = m.apply_E(i, v);
    if (!e.is_zero()) return false;
  }
  return true;
}

SubmoduleSpans zero_spans(const WeightModule& m, int max_total) {
  SubmoduleSpans spans;
  for (const auto& d : enumerate_contents(m.n(), std::min(max_total, m.cutoff()))) spans.emplace(d, Subspace(m.dim(d)));
  return spans;
}

SubmoduleSpans f_span(const WeightModule& m, const std::vector<WeightVector>& gens, int max_total) {
  SubmoduleSpans spans;
  for (const auto& d : enumerate_contents(m.n(), std::min(max_total, m.cutoff()))) {
    Subspace s(m.dim(d));
    for (const auto& g : gens)
      if (g.content == d) s.insert(g.coords);
    for (int i = 0; i < m.n() - 1; ++i) {
      if (d[static_cast<std::size_t>(i)] == 0) continue;
      const Content lower = d - unit_content(m.n(), i);
      for (const auto& b : spans.at(lower).basis()) {
        if (s.dim() == s.ambient()) break;
        s.insert(m.apply_F(i, {lower, b}).coords);
      }
    }
    spans.emplace(d, std::move(s));
  }
  return spans;
}

bool is_e_closed(const WeightModule& m, const SubmoduleSpans& spans) {
  for (const auto& [d, s] : spans)
    for (int i = 0; i < m.n() - 1; ++i) {
      if (d[static_cast<std::size_t>(i)] == 0) continue;
      auto lower = spans.find(d - unit_content(m.n(), i));
      if (lower == spans.end()) continue;
      for (const auto& b : s.basis())
        if (!lower->second.contains(m.apply_E(i, {d, b}).coords)) return false;
    }
  return true;
}

SubmoduleSpans sum_spans(const SubmoduleSpans& a, const SubmoduleSpans& b) {
  SubmoduleSpans out = a;
  for (const auto& [d, s] : b) {
    auto it = out.find(d);
    if (it == out.end()) {
      out.emplace(d, s);
      continue;
    }
    for (const auto& v : s.basis()) it->second.insert(v);
  }
  return out;
}

WeightVector Quotient::project(const WeightVector& v) const {
  auto it = sub.find(v.content);
  if (it == sub.end()) throw CutoffExceeded("projection beyond stored spans");
  return {v.content, it->second.quotient_coords(v.coords)};
}

Quotient quotient_module(std::shared_ptr<const WeightModule> m, SubmoduleSpans spans) {
  auto q = std::make_shared<WeightModule>(m->n(), m->top(), m->cutoff());
  for (const auto& ws : m->spaces())
    if (!spans.count(ws.content)) spans.emplace(ws.content, Subspace(ws.dim));
  std::map<Content, std::vector<std::size_t>> free;
  for (const auto& ws : m->spaces()) {
    auto f = spans.at(ws.content).free_coordinates();
    WeightSpace& s = q->add_space(ws.content, f.size());
    for (auto k : f) s.labels.push_back(k < ws.labels.size() ? ws.labels[k] : std::string());
    free.emplace(ws.content, std::move(f));
  }
  for (const auto& ws : m->spaces()) {
    const auto& src_free = free.at(ws.content);
    for (int i = 0; i < m->n() - 1; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      for (int dir = 0; dir < 2; ++dir) {
        const std::optional<Matrix>& a = dir == 0 ? ws.F[ui] : ws.E[ui];
        if (!a) continue;
        const Content tgt = dir == 0 ? ws.content + unit_content(m->n(), i) : ws.content - unit_content(m->n(), i);
        const Subspace& tsub = spans.at(tgt);
        Matrix induced(free.at(tgt).size(), src_free.size());
        for (std::size_t c = 0; c < src_free.size(); ++c) {
          const Vector col = tsub.quotient_coords(a->column(src_free[c]));
          for (std::size_t r = 0; r < col.size(); ++r) induced(r, c) = col[r];
        }
        WeightSpace& s = q->mutable_at(ws.content);
        (dir == 0 ? s.F[ui] : s.E[ui]) = std::move(induced);
      }
    }
  }
  return {std::move(m), std::move(spans), std::move(q)};
}

std::shared_ptr<const WeightModule> tensor_with_natural(std::shared_ptr<const WeightModule> m) {
  const int n = m->n();
  const RootSystem rs(n);
  Weight top = m->top();
  top[0] += 1;
  auto t = std::make_shared<WeightModule>(n, top, m->cutoff());
  TensorLayout layout;
  layout.base = m;
  const auto contents = enumerate_contents(n, m->cutoff());
  for (const auto& c : contents) {
    std::vector<TensorLayout::Component> comps;
    std::size_t offset = 0;
    for (int j = 0; j < n; ++j) {
      const Content b = c - rs.eps_content(j);
      if (!non_negative(b)) continue;
      const std::size_t d = m->dim(b);
      comps.push_back({j, b, offset, d});
      offset += d;
    }
    WeightSpace& s = t->add_space(c, offset);
    for (const auto& comp : comps) {
      const WeightSpace& bs = m->at(comp.base_content);
      for (std::size_t k = 0; k < comp.dim; ++k)
        s.labels.push_back("w" + std::to_string(comp.j + 1) + "*" + (k < bs.labels.size() ? bs.labels[k] : std::to_string(k)));
    }
    layout.components.emplace(c, std::move(comps));
  }
  for (const auto& c : contents) {
    const auto& comps = layout.components.at(c);
    const std::size_t dim_c = t->dim(c);
    for (int i = 0; i < n - 1; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const Content up = c + unit_content(n, i);
      if (total(up) <= m->cutoff()) {
        Matrix f(t->dim(up), dim_c);
        for (const auto& comp : comps) {
          const WeightSpace& bs = m->at(comp.base_content);
          const auto* same = layout.find(up, comp.j);
          const Matrix& bf = *bs.F[ui];
          for (std::size_t r = 0; r < bf.rows(); ++r)
            for (std::size_t k = 0; k < bf.cols(); ++k) f(same->offset + r, comp.offset + k) = bf(r, k);
          if (comp.j == i) {
            const auto* next = layout.find(up, i + 1);
            const Scalar coeff = Scalar::q_pow(-pairing(rs.simple_root(i), m->weight(comp.base_content)));
            for (std::size_t k = 0; k < comp.dim; ++k) f(next->offset + k, comp.offset + k) += coeff;
          }
        }
        t->mutable_at(c).F[ui] = std::move(f);
      }
      if (c[ui] > 0) {
        const Content down = c - unit_content(n, i);
        Matrix e(t->dim(down), dim_c);
        for (const auto& comp : comps) {
          if (comp.j == i + 1) {
            const auto* prev = layout.find(down, i);
            for (std::size_t k = 0; k < comp.dim; ++k) e(prev->offset + k, comp.offset + k) += Scalar(1);
          }
          if (comp.base_content[ui] > 0) {
            const WeightSpace& bs = m->at(comp.base_content);
            const auto* same = layout.find(down, comp.j);
            const Matrix& be = *bs.E[ui];
            const Scalar coeff = Scalar::q_pow(pairing(rs.simple_root(i), rs.eps(comp.j)));
            for (std::size_t r = 0; r < be.rows(); ++r)
              for (std::size_t k = 0; k < be.cols(); ++k)
                if (!be(r, k).is_zero()) e(same->offset + r, comp.offset + k) += coeff * be(r, k);
          }
        }
        t->mutable_at(c).E[ui] = std::move(e);
      }
    }
  }
  t->set_layout(std::move(layout));
  return t;
}

namespace {

const TensorLayout& layout_of(const WeightModule& t) {
  if (!t.layout()) throw InvalidArgument("module is not a tensor product with C^n");
  return *t.layout();
}

}  // namespace

WeightVector embed(const WeightModule& t, int j, const WeightVector& x) {
  const TensorLayout& l = layout_of(t);
  const Content c = x.content + RootSystem(t.n()).eps_content(j);
  const auto* comp = l.find(c, j);
  if (!comp) throw CutoffExceeded("tensor component beyond cutoff");
  WeightVector v = t.zero(c);
  for (std::size_t k = 0; k < comp->dim; ++k) v.coords[comp->offset + k] = x.coords.at(k);
  return v;
}

WeightVector component(const WeightModule& t, const WeightVector& v, int j) {
  const TensorLayout& l = layout_of(t);
  const Content b = v.content - RootSystem(t.n()).eps_content(j);
  const auto* comp = l.find(v.content, j);
  if (!comp) return {b, {}};
  WeightVector x{b, Vector(comp->dim)};
  for (std::size_t k = 0; k < comp->dim; ++k) x.coords[k] = v.coords.at(comp->offset + k);
  return x;
}

WeightVector map_components(const WeightModule& source, const WeightModule& target, const WeightVector& v,
                            const std::function<WeightVector(const WeightVector&)>& f) {
  WeightVector out = target.zero(v.content);
  for (int j = 0; j < source.n(); ++j) {
    const WeightVector x = component(source, v, j);
    if (!non_negative(x.content) || x.coords.empty()) continue;
    const WeightVector y = embed(target, j, f(x));
    for (std::size_t k = 0; k < y.coords.size(); ++k) out.coords[k] += y.coords[k];
  }
  return out;
}

}  // namespace qconj
