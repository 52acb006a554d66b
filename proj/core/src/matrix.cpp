#include "qconj/matrix.hpp"

#include "qconj/error.hpp"

namespace qconj {

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw InvalidArgument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw InvalidArgument("matrix-vector size mismatch");
  Vector r(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = (*this)(i, j);
      if (!a.is_zero()) r[i] += a * v[j];
    }
  }
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw InvalidArgument("matrix size mismatch");
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : a_)
    if (!x.is_zero()) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product size mismatch");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  return r;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l)
          if (!b(k, l).is_zero()) r(i * b.rows_ + k, j * b.cols_ + l) = x * b(k, l);
    }
  return r;
}

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw InvalidArgument("vector length does not match subspace");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Scalar c = v[pivots_[k]];
    if (c.is_zero()) continue;
    const Vector& b = basis_[k];
    for (std::size_t i = 0; i < ambient_; ++i)
      if (!b[i].is_zero()) v[i] -= c * b[i];
  }
  return v;
}

bool Subspace::insert(const Vector& v) {
  Vector r = reduce(v);
  std::size_t pivot = ambient_;
  std::size_t best = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (r[i].is_zero()) continue;
    const std::size_t c = r[i].complexity();
    if (pivot == ambient_ || c < best) {
      pivot = i;
      best = c;
    }
  }
  if (pivot == ambient_) return false;
  const Scalar inv = r[pivot].inverse();
  for (auto& x : r)
    if (!x.is_zero()) x *= inv;
  for (auto& b : basis_) {
    const Scalar c = b[pivot];
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i < ambient_; ++i)
      if (!r[i].is_zero()) b[i] -= c * r[i];
  }
  basis_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& b : other.basis_)
    if (!contains(b)) return false;
  return true;
}

std::vector<std::size_t> Subspace::free_coordinates() const {
  std::vector<bool> is_pivot(ambient_, false);
  for (auto p : pivots_) is_pivot[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!is_pivot[i]) out.push_back(i);
  return out;
}

Vector Subspace::quotient_coords(const Vector& v) const {
  Vector r = reduce(v);
  Vector out;
  out.reserve(ambient_ - basis_.size());
  for (auto i : free_coordinates()) out.push_back(std::move(r[i]));
  return out;
}

namespace {

Subspace row_space(const Matrix& m) {
  Subspace s(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    s.insert(row);
    if (s.dim() == m.cols()) break;
  }
  return s;
}

}  // namespace

std::size_t rank(const Matrix& m) { return row_space(m).dim(); }

std::vector<Vector> kernel(const Matrix& m) {
  const Subspace s = row_space(m);
  std::vector<Vector> out;
  for (auto f : s.free_coordinates()) {
    Vector x(m.cols());
    x[f] = Scalar(1);
    for (std::size_t k = 0; k < s.dim(); ++k) x[s.pivots()[k]] = -s.basis()[k][f];
    out.push_back(std::move(x));
  }
  return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw InvalidArgument("right-hand side length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  for (auto& k : kernel(aug)) {
    const Scalar last = k.back();
    if (last.is_zero()) continue;
    k.pop_back();
    const Scalar s = -last.inverse();
    for (auto& x : k) x *= s;
    return k;
  }
  return std::nullopt;
}

}  // namespace qconj
