#include "qconj/uq.hpp"

#include <cstdlib>
#include <sstream>

#include "qconj/error.hpp"

namespace qconj {

namespace {

Weight zero_weight(int n) { return Weight(static_cast<std::size_t>(n), 0); }

Weight add(Weight a, const Weight& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Weight negate(Weight a) {
  for (auto& x : a) x = -x;
  return a;
}

Weight letter_weight(int n, int letter) {
  const int i = std::abs(letter) - 1;
  if (i < 0 || i >= n - 1) throw InvalidArgument("generator index out of range");
  Weight w = zero_weight(n);
  const int s = letter > 0 ? 1 : -1;
  w[static_cast<std::size_t>(i)] = s;
  w[static_cast<std::size_t>(i + 1)] = -s;
  return w;
}

Monomial cartan_monomial(const Weight& mu) { return {{}, mu}; }

UqElement from_monomial(int n, Monomial m) {
  UqElement x(n);
  x.add_term(m, Scalar(1));
  return x;
}

}  // namespace

Weight word_weight(int n, const std::vector<int>& word) {
  Weight w = zero_weight(n);
  for (int l : word) w = add(w, letter_weight(n, l));
  return w;
}

std::pair<Monomial, Scalar> multiply(const Monomial& a, const Monomial& b) {
  const int n = static_cast<int>(a.cartan.size());
  Monomial m;
  m.word = a.word;
  m.word.insert(m.word.end(), b.word.begin(), b.word.end());
  m.cartan = add(a.cartan, b.cartan);
  return {std::move(m), Scalar::q_pow(pairing(a.cartan, word_weight(n, b.word)))};
}

UqElement UqElement::scalar(int n, const Scalar& c) {
  UqElement x(n);
  x.add_term(cartan_monomial(zero_weight(n)), c);
  return x;
}

UqElement UqElement::E(int n, int i) {
  letter_weight(n, e_letter(i));
  return from_monomial(n, {{e_letter(i)}, zero_weight(n)});
}

UqElement UqElement::F(int n, int i) {
  letter_weight(n, f_letter(i));
  return from_monomial(n, {{f_letter(i)}, zero_weight(n)});
}

UqElement UqElement::K(int n, const Weight& mu) {
  if (static_cast<int>(mu.size()) != n) throw InvalidArgument("Cartan weight size mismatch");
  return from_monomial(n, cartan_monomial(mu));
}

UqElement UqElement::cartan_bracket(int n, const Weight& beta, int c) {
  const Scalar q = Scalar::q_pow(1);
  const Scalar inv = (q - q.inverse()).inverse();
  UqElement x(n);
  x.add_term(cartan_monomial(beta), Scalar::q_pow(c) * inv);
  x.add_term(cartan_monomial(negate(beta)), -Scalar::q_pow(-c) * inv);
  return x;
}

void UqElement::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool UqElement::homogeneous(Content* shift) const {
  bool first = true;
  Content ref;
  for (const auto& [m, c] : terms_) {
    Content d(static_cast<std::size_t>(n_ - 1), 0);
    for (int l : m.word) d[static_cast<std::size_t>(std::abs(l) - 1)] += l < 0 ? 1 : -1;
    if (first) {
      ref = d;
      first = false;
    } else if (d != ref) {
      return false;
    }
  }
  if (shift) *shift = first ? Content(static_cast<std::size_t>(n_ - 1), 0) : ref;
  return true;
}

UqElement UqElement::operator-() const {
  UqElement r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

UqElement& UqElement::operator+=(const UqElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

UqElement& UqElement::operator-=(const UqElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

UqElement& UqElement::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, x] : terms_) x *= c;
  return *this;
}

UqElement operator*(const UqElement& a, const UqElement& b) {
  if (a.n_ != b.n_) throw InvalidArgument("rank mismatch in product");
  UqElement r(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      auto [m, f] = multiply(ma, mb);
      r.add_term(m, ca * cb * f);
    }
  return r;
}

std::string UqElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << '(' << c.to_string() << ')';
    for (int l : m.word) os << ' ' << (l > 0 ? 'E' : 'F') << std::abs(l);
    bool trivial = true;
    for (int x : m.cartan) trivial = trivial && x == 0;
    if (!trivial) os << " K(" << format_list(m.cartan) << ')';
    if (m.word.empty() && trivial) os << " 1";
  }
  return os.str();
}

TensorElement TensorElement::pure(const UqElement& a, const UqElement& b) {
  TensorElement t(a.n());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) t.add_term(ma, mb, ca * cb);
  return t;
}

void TensorElement::add_term(const Monomial& a, const Monomial& b, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b) {
  TensorElement r(a.n_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      auto [m1, f1] = multiply(ka.first, kb.first);
      auto [m2, f2] = multiply(ka.second, kb.second);
      r.add_term(m1, m2, ca * cb * f1 * f2);
    }
  return r;
}

namespace {

TensorElement letter_coproduct(int n, int letter) {
  const Weight a = letter_weight(n, letter);
  const Weight z = zero_weight(n);
  const Monomial x{{letter}, z};
  const Monomial one{{}, z};
  TensorElement t(n);
  if (letter > 0) {
    t.add_term(x, one, Scalar(1));
    t.add_term({{}, a}, x, Scalar(1));
  } else {
    // F_i has weight -alpha_i, so K_-alpha is K of its weight.
    t.add_term(one, x, Scalar(1));
    t.add_term(x, {{}, a}, Scalar(1));
  }
  return t;
}

}  // namespace

TensorElement coproduct(const UqElement& x) {
  const int n = x.n();
  TensorElement r(n);
  for (const auto& [m, c] : x.terms()) {
    TensorElement t(n);
    t.add_term({{}, zero_weight(n)}, {{}, zero_weight(n)}, c);
    for (int l : m.word) t = t * letter_coproduct(n, l);
    TensorElement k(n);
    k.add_term({{}, m.cartan}, {{}, m.cartan}, Scalar(1));
    r += t * k;
  }
  return r;
}

UqElement antipode(const UqElement& x) {
  const int n = x.n();
  UqElement r(n);
  for (const auto& [m, c] : x.terms()) {
    UqElement t = UqElement::K(n, negate(m.cartan));
    for (auto it = m.word.rbegin(); it != m.word.rend(); ++it) {
      const int l = *it;
      const int i = std::abs(l) - 1;
      const Weight alpha = letter_weight(n, e_letter(i));
      UqElement g = l > 0 ? -(UqElement::K(n, negate(alpha)) * UqElement::E(n, i))
                          : -(UqElement::F(n, i) * UqElement::K(n, alpha));
      t = t * g;
    }
    r += t * c;
  }
  return r;
}

Scalar counit(const UqElement& x) {
  Scalar s;
  for (const auto& [m, c] : x.terms())
    if (m.word.empty()) s += c;
  return s;
}

namespace {

Matrix monomial_rep(int n, const Monomial& m) {
  const auto un = static_cast<std::size_t>(n);
  Matrix r = Matrix::identity(un);
  for (int l : m.word) {
    const std::size_t i = static_cast<std::size_t>(std::abs(l) - 1);
    Matrix g(un, un);
    if (l > 0)
      g(i, i + 1) = Scalar(1);
    else
      g(i + 1, i) = Scalar(1);
    r = r * g;
  }
  Matrix k(un, un);
  for (std::size_t j = 0; j < un; ++j) k(j, j) = Scalar::q_pow(m.cartan[j]);
  return r * k;
}

}  // namespace

Matrix natural_rep(const UqElement& x) {
  const auto un = static_cast<std::size_t>(x.n());
  Matrix r(un, un);
  for (const auto& [m, c] : x.terms()) r += monomial_rep(x.n(), m) * c;
  return r;
}

Matrix natural_rep(const TensorElement& x) {
  const auto un = static_cast<std::size_t>(x.n());
  Matrix r(un * un, un * un);
  for (const auto& [k, c] : x.terms()) r += kron(monomial_rep(x.n(), k.first), monomial_rep(x.n(), k.second)) * c;
  return r;
}

}  // namespace qconj
