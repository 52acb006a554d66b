#include "qconj/scalar_poly.hpp"

#include "qconj/error.hpp"

namespace qconj {

ScalarPoly::ScalarPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

void ScalarPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ScalarPoly ScalarPoly::X_minus(const Scalar& root) { return ScalarPoly({-root, Scalar(1)}); }

ScalarPoly ScalarPoly::from_roots(const std::vector<Scalar>& roots) {
  ScalarPoly p({Scalar(1)});
  for (const auto& r : roots) p = p * X_minus(r);
  return p;
}

ScalarPoly ScalarPoly::monic() const {
  if (is_zero()) return *this;
  const Scalar inv = lc().inverse();
  ScalarPoly r = *this;
  for (auto& x : r.c_) x *= inv;
  return r;
}

Scalar ScalarPoly::eval(const Scalar& x) const {
  Scalar r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Matrix ScalarPoly::eval(const Matrix& a) const {
  if (a.rows() != a.cols()) throw InvalidArgument("polynomial evaluation needs a square matrix");
  Matrix r(a.rows(), a.cols());
  const Matrix id = Matrix::identity(a.rows());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * a + id * *it;
  return r;
}

ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return ScalarPoly(std::move(r));
}

ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b) {
  std::vector<Scalar> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return ScalarPoly(std::move(r));
}

std::pair<ScalarPoly, ScalarPoly> divmod(const ScalarPoly& a, const ScalarPoly& b) {
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Scalar> rem = a.c_;
  if (a.degree() < b.degree()) return {ScalarPoly(), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Scalar inv = b.lc().inverse();
  for (int k = a.degree(); k >= b.degree(); --k) {
    const Scalar t = rem[static_cast<std::size_t>(k)] * inv;
    if (t.is_zero()) continue;
    const std::size_t shift = static_cast<std::size_t>(k - b.degree());
    quot[shift] = t;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[shift + j] -= t * b.c_[j];
  }
  return {ScalarPoly(std::move(quot)), ScalarPoly(std::move(rem))};
}

ScalarPoly gcd(const ScalarPoly& a, const ScalarPoly& b) {
  ScalarPoly x = a;
  ScalarPoly y = b;
  while (!y.is_zero()) {
    ScalarPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ScalarPoly lcm(const ScalarPoly& a, const ScalarPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return divmod(a * b, gcd(a, b)).first.monic();
}

std::vector<std::string> ScalarPoly::to_strings() const {
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.to_string());
  return out;
}

ScalarPoly minimal_polynomial(const Matrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("minimal polynomial needs a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return ScalarPoly({Scalar(1)});
  auto flatten = [n](const Matrix& m) {
    Vector v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = m(i, j);
    return v;
  };
  std::vector<Vector> powers;
  Subspace span(n * n);
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vector v = flatten(p);
    if (!span.insert(v)) {
      auto x = solve(Matrix::from_columns(powers, n * n), v);
      if (!x) throw ValidationFailure("minimal polynomial: dependent power not solvable");
      std::vector<Scalar> c(k + 1);
      for (std::size_t i = 0; i < k; ++i) c[i] = -(*x)[i];
      c[k] = Scalar(1);
      return ScalarPoly(std::move(c));
    }
    powers.push_back(std::move(v));
    p = p * a;
  }
  throw ValidationFailure("minimal polynomial exceeds matrix size");
}

}  // namespace qconj
