#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qconj {

/// Dense univariate polynomial in q with arbitrary-precision integer
/// coefficients, stored in ascending order without trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, int degree);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  int low_degree() const;
  const mpz_class& lc() const { return c_.back(); }
  const mpz_class& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<mpz_class>& coeffs() const { return c_; }

  IntPoly shifted_up(int k) const;
  IntPoly shifted_down(int k) const;

  mpz_class content() const;
  mpz_class eval(const mpz_class& x) const;
  mpz_class max_norm() const;
  std::size_t bit_size() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const mpz_class& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const mpz_class& c) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Exact quotient a / b; throws ValidationFailure when b does not divide a.
IntPoly divexact(const IntPoly& a, const IntPoly& b);
IntPoly divexact(const IntPoly& a, const mpz_class& c);
std::optional<IntPoly> divide_if_exact(const IntPoly& a, const IntPoly& b);

/// gcd in Z[q], normalized to a positive leading coefficient; includes the
/// gcd of the integer contents.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Laurent polynomial in q with integer coefficients. The stored body has a
/// nonzero constant term, so the value is q^low * body(q).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(int low, IntPoly body);

  static LaurentPoly monomial(const mpz_class& c, int exponent);

  bool is_zero() const { return body_.is_zero(); }
  int low() const { return low_; }
  int high() const { return low_ + body_.degree(); }
  const IntPoly& body() const { return body_; }

  /// exponent -> coefficient, zero coefficients omitted.
  std::map<int, mpz_class> terms() const;

  LaurentPoly operator-() const { return {low_, -body_}; }
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.body_ == b.body_;
  }

  /// Terms "c*q^e" in ascending exponent order joined by " + "; "0" if zero.
  std::string to_string() const;

 private:
  int low_ = 0;
  IntPoly body_;
};

}  // namespace qconj
