#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qconj/matrix.hpp"

namespace qconj {

/// Univariate polynomial in X over Q(q), ascending coefficients, trimmed.
class ScalarPoly {
 public:
  ScalarPoly() = default;
  explicit ScalarPoly(std::vector<Scalar> coeffs);

  static ScalarPoly X_minus(const Scalar& root);
  static ScalarPoly from_roots(const std::vector<Scalar>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const& { return c_; }
  std::vector<Scalar> coeffs() && { return std::move(c_); }
  const Scalar& lc() const { return c_.back(); }

  ScalarPoly monic() const;
  Scalar eval(const Scalar& x) const;
  Matrix eval(const Matrix& a) const;

  friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b);
  friend ScalarPoly operator-(const ScalarPoly& a, const ScalarPoly& b);
  friend bool operator==(const ScalarPoly& a, const ScalarPoly& b) { return a.c_ == b.c_; }

  /// Quotient and remainder.
  friend std::pair<ScalarPoly, ScalarPoly> divmod(const ScalarPoly& a, const ScalarPoly& b);
  /// Monic gcd and lcm.
  friend ScalarPoly gcd(const ScalarPoly& a, const ScalarPoly& b);
  friend ScalarPoly lcm(const ScalarPoly& a, const ScalarPoly& b);

  /// Coefficients in ascending degree, as serialized scalars.
  std::vector<std::string> to_strings() const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Monic minimal polynomial of a square matrix.
ScalarPoly minimal_polynomial(const Matrix& a);

}  // namespace qconj
