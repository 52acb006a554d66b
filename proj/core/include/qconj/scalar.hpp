#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "qconj/poly.hpp"

namespace qconj {

/// Element of Q(q), stored as q^shift * num(q) / den(q) in canonical form:
/// num(0) != 0 and den(0) != 0, gcd(num, den) = 1 in Z[q] (integer content
/// included), lc(den) > 0. A denominator equal to 1 is stored as an empty
/// polynomial. Zero has shift 0 and empty num.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long c);  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpz_class& c);
  /// Canonicalizes num / den; throws DivisionByZero when den is zero.
  Scalar(const LaurentPoly& num, const LaurentPoly& den);

  static Scalar q_pow(int z);
  /// (q^z - q^-z) / (q - q^-1).
  static Scalar q_int(int z);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_zero(); }

  /// Numerator as a Laurent polynomial and denominator as a polynomial with
  /// nonzero constant term (the pair is the canonical form).
  LaurentPoly numerator() const { return {shift_, num_}; }
  LaurentPoly denominator() const {
    return {0, den_.is_zero() ? IntPoly::constant(1) : den_};
  }

  Scalar inverse() const;
  Scalar pow(int k) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Rough size used to prefer simple pivots during elimination.
  std::size_t complexity() const;
  std::size_t hash() const;

  /// "num / den", each a sum of "c*q^e" terms in ascending order.
  std::string to_string() const;
  /// Inverse of to_string; also accepts rational coefficients "p/r".
  static Scalar parse(std::string_view text);

 private:
  Scalar(int shift, IntPoly num, IntPoly den) : shift_(shift), num_(std::move(num)), den_(std::move(den)) {}
  static Scalar canonical(int shift, IntPoly num, IntPoly den);

  int shift_ = 0;
  IntPoly num_;
  IntPoly den_;
};

}  // namespace qconj
