#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qconj/scalar.hpp"

namespace qconj {

using Vector = std::vector<Scalar>;

bool is_zero(const Vector& v);

/// Dense row-major matrix over Q(q).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;
  Matrix transposed() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  /// Kronecker product.
  friend Matrix kron(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> a_;
};

/// Subspace of Q(q)^dim kept in reduced row echelon form: every basis vector
/// has a 1 in its pivot coordinate and 0 in the pivot coordinates of the
/// others. Pivots are chosen among the simplest nonzero entries.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v; returns false when v was already contained.
  bool insert(const Vector& v);
  /// v minus its component along the pivots (zero iff v is contained).
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates that are not pivots, ascending; they index a complement.
  std::vector<std::size_t> free_coordinates() const;
  /// Coordinates of reduce(v) on the free coordinates.
  Vector quotient_coords(const Vector& v) const;

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank(const Matrix& m);
/// Basis of the right kernel {x : m x = 0}.
std::vector<Vector> kernel(const Matrix& m);
/// Solution x of m x = b if one exists.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

}  // namespace qconj
