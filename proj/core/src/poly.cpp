#include "qconj/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qconj/error.hpp"

namespace qconj {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const mpz_class& c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(c);
  return p;
}

IntPoly IntPoly::monomial(const mpz_class& c, int degree) {
  IntPoly p;
  if (c == 0) return p;
  p.c_.resize(static_cast<std::size_t>(degree) + 1);
  p.c_.back() = c;
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int IntPoly::low_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

IntPoly IntPoly::shifted_up(int k) const {
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  r.c_.resize(c_.size() + static_cast<std::size_t>(k));
  std::copy(c_.begin(), c_.end(), r.c_.begin() + k);
  return r;
}

IntPoly IntPoly::shifted_down(int k) const {
  if (is_zero() || k == 0) return *this;
  IntPoly r;
  r.c_.assign(c_.begin() + k, c_.end());
  return r;
}

mpz_class IntPoly::content() const {
  mpz_class g = 0;
  for (const auto& a : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

mpz_class IntPoly::eval(const mpz_class& x) const {
  mpz_class r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

mpz_class IntPoly::max_norm() const {
  mpz_class m = 0;
  for (const auto& a : c_)
    if (mpz_cmpabs(a.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(a);
  return m;
}

std::size_t IntPoly::bit_size() const {
  std::size_t bits = 0;
  for (const auto& a : c_) bits += mpz_sizeinbase(a.get_mpz_t(), 2);
  return bits;
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& a : r.c_) mpz_neg(a.get_mpz_t(), a.get_mpz_t());
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    mpz_add(c_[i].get_mpz_t(), c_[i].get_mpz_t(), o.c_[i].get_mpz_t());
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    mpz_sub(c_[i].get_mpz_t(), c_[i].get_mpz_t(), o.c_[i].get_mpz_t());
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& a : c_) mpz_mul(a.get_mpz_t(), a.get_mpz_t(), c.get_mpz_t());
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c_.resize(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  }
  r.trim();
  return r;
}

std::optional<IntPoly> divide_if_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = b.degree();
  std::vector<mpz_class> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  mpz_class t;
  for (int k = a.degree(); k >= db; --k) {
    mpz_class& top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.lc().get_mpz_t())) return std::nullopt;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), b.lc().get_mpz_t());
    const std::size_t shift = static_cast<std::size_t>(k - db);
    quot[shift] = t;
    for (std::size_t j = 0; j < bc.size(); ++j)
      mpz_submul(r[shift + j].get_mpz_t(), t.get_mpz_t(), bc[j].get_mpz_t());
  }
  for (int k = 0; k < db; ++k)
    if (r[static_cast<std::size_t>(k)] != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

IntPoly divexact(const IntPoly& a, const IntPoly& b) {
  auto q = divide_if_exact(a, b);
  if (!q) throw ValidationFailure("inexact polynomial division");
  return *std::move(q);
}

IntPoly divexact(const IntPoly& a, const mpz_class& c) {
  if (c == 0) throw DivisionByZero();
  std::vector<mpz_class> r = a.coeffs();
  for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(r));
}

namespace {

IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  mpz_class c = p.content();
  if (p.lc() < 0) c = -c;
  return c == 1 ? p : divexact(p, c);
}

// Pseudo-remainder of a by b.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const int db = b.degree();
  std::vector<mpz_class> r = a.coeffs();
  const auto& bc = b.coeffs();
  int dr = a.degree();
  while (dr >= db) {
    mpz_class lead = r[static_cast<std::size_t>(dr)];
    for (auto& x : r) x *= b.lc();
    const std::size_t shift = static_cast<std::size_t>(dr - db);
    for (std::size_t j = 0; j < bc.size(); ++j)
      mpz_submul(r[shift + j].get_mpz_t(), lead.get_mpz_t(), bc[j].get_mpz_t());
    while (dr >= 0 && r[static_cast<std::size_t>(dr)] == 0) --dr;
    r.resize(static_cast<std::size_t>(dr + 1));
  }
  return IntPoly(std::move(r));
}

IntPoly primitive_prs_gcd(IntPoly a, IntPoly b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return primitive_part(a);
}

// Balanced base-x digits of h, ascending.
IntPoly interpolate(mpz_class h, const mpz_class& x) {
  std::vector<mpz_class> digits;
  const mpz_class half = x / 2;
  mpz_class g;
  while (h != 0) {
    mpz_fdiv_r(g.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    if (g > half) g -= x;
    digits.push_back(g);
    h -= g;
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
  }
  return IntPoly(std::move(digits));
}

// Heuristic gcd of primitive polynomials by evaluation at a large integer;
// falls back to the primitive remainder sequence.
IntPoly primitive_gcd(const IntPoly& a, const IntPoly& b) {
  if (a.degree() == 0 || b.degree() == 0) return IntPoly::constant(1);
  const mpz_class na = a.max_norm();
  const mpz_class nb = b.max_norm();
  const mpz_class bound = 2 * (na < nb ? na : nb) + 29;
  mpz_class x = 2 * std::min<mpz_class>(na / abs(a.lc()), nb / abs(b.lc())) + 4;
  {
    mpz_class s = sqrt(bound);
    mpz_class cand = std::min<mpz_class>(bound, 99 * s);
    if (cand > x) x = cand;
  }
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class va = a.eval(x);
    mpz_class vb = b.eval(x);
    if (va != 0 && vb != 0) {
      mpz_class h;
      mpz_gcd(h.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
      IntPoly g = primitive_part(interpolate(h, x));
      if (!g.is_zero() && divide_if_exact(a, g) && divide_if_exact(b, g)) return g;
    }
    mpz_class s = sqrt(sqrt(x));
    x = 73794 * x * s / 27011;
  }
  return primitive_prs_gcd(a, b);
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.is_zero() ? b : (b.lc() < 0 ? -b : b);
  if (b.is_zero()) return a.lc() < 0 ? -a : a;
  mpz_class ca = a.content();
  mpz_class cb = b.content();
  mpz_class c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (a.degree() == 0 || b.degree() == 0) return IntPoly::constant(c);
  // Common power of q.
  const int low = std::min(a.low_degree(), b.low_degree());
  IntPoly pa = primitive_part(a.shifted_down(a.low_degree()));
  IntPoly pb = primitive_part(b.shifted_down(b.low_degree()));
  IntPoly g;
  if (pa == pb) {
    g = pa;
  } else if (pa.degree() == 0 || pb.degree() == 0) {
    g = IntPoly::constant(1);
  } else {
    g = primitive_gcd(pa, pb);
  }
  return (g * c).shifted_up(low);
}

LaurentPoly::LaurentPoly(int low, IntPoly body) {
  if (body.is_zero()) return;
  const int k = body.low_degree();
  low_ = low + k;
  body_ = k == 0 ? std::move(body) : body.shifted_down(k);
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int exponent) {
  return {exponent, IntPoly::constant(c)};
}

std::map<int, mpz_class> LaurentPoly::terms() const {
  std::map<int, mpz_class> t;
  const auto& c = body_.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) t.emplace(low_ + static_cast<int>(i), c[i]);
  return t;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int low = std::min(a.low_, b.low_);
  return {low, a.body_.shifted_up(a.low_ - low) + b.body_.shifted_up(b.low_ - low)};
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.low_ + b.low_, a.body_ * b.body_};
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms()) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str() << "*q^" << e;
  }
  return os.str();
}

}  // namespace qconj
