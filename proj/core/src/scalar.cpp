#include "qconj/scalar.hpp"

#include <cstdlib>
#include <functional>
#include <utility>

#include "qconj/error.hpp"

namespace qconj {

namespace {

bool is_unit_den(const IntPoly& d) { return d.is_zero() || d.is_one(); }

const IntPoly& den_or_one(const IntPoly& d) {
  static const IntPoly one = IntPoly::constant(1);
  return d.is_zero() ? one : d;
}

}  // namespace

Scalar::Scalar(long c) {
  if (c != 0) num_ = IntPoly::constant(mpz_class(c));
}

Scalar::Scalar(const mpz_class& c) {
  if (c != 0) num_ = IntPoly::constant(c);
}

Scalar::Scalar(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw DivisionByZero();
  *this = canonical(num.low() - den.low(), num.body(), den.body());
}

Scalar Scalar::canonical(int shift, IntPoly num, IntPoly den) {
  if (num.is_zero()) return {};
  if (!den.is_zero()) {
    const int kd = den.low_degree();
    if (kd > 0) {
      den = den.shifted_down(kd);
      shift -= kd;
    }
    if (!den.is_one()) {
      IntPoly g = gcd(num, den);
      if (!g.is_one()) {
        num = divexact(num, g);
        den = divexact(den, g);
      }
      if (den.lc() < 0) {
        num = -num;
        den = -den;
      }
    }
    if (den.is_one()) den = IntPoly{};
  }
  const int k = num.low_degree();
  if (k > 0) {
    num = num.shifted_down(k);
    shift += k;
  }
  return {shift, std::move(num), std::move(den)};
}

Scalar Scalar::q_pow(int z) { return {z, IntPoly::constant(1), IntPoly{}}; }

Scalar Scalar::q_int(int z) {
  if (z == 0) return {};
  const int a = std::abs(z);
  std::vector<mpz_class> c(static_cast<std::size_t>(2 * (a - 1) + 1));
  for (int i = 0; i < a; ++i) c[static_cast<std::size_t>(2 * i)] = z > 0 ? 1 : -1;
  return {-(a - 1), IntPoly(std::move(c)), IntPoly{}};
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  IntPoly num = den_or_one(den_);
  IntPoly den = num_;
  if (den.lc() < 0) {
    num = -num;
    den = -den;
  }
  if (den.is_one()) den = IntPoly{};
  return {-shift_, std::move(num), std::move(den)};
}

Scalar Scalar::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar result(1);
  Scalar base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Scalar Scalar::operator-() const { return {shift_, -num_, den_}; }

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int s = std::min(shift_, o.shift_);
  IntPoly a = num_.shifted_up(shift_ - s);
  IntPoly b = o.num_.shifted_up(o.shift_ - s);
  if (den_ == o.den_) {
    a += b;
    return *this = canonical(s, std::move(a), den_);
  }
  const IntPoly& d1 = den_or_one(den_);
  const IntPoly& d2 = den_or_one(o.den_);
  IntPoly g = (is_unit_den(den_) || is_unit_den(o.den_)) ? IntPoly::constant(1) : gcd(d1, d2);
  if (g.is_one()) {
    IntPoly num = a * d2 + b * d1;
    IntPoly den = d1 * d2;
    const int k = num.low_degree();
    if (num.is_zero()) return *this = Scalar();
    *this = Scalar(s + k, num.shifted_down(k), std::move(den));
    return *this;
  }
  IntPoly d2g = divexact(d2, g);
  IntPoly d1g = divexact(d1, g);
  IntPoly num = a * d2g + b * d1g;
  if (num.is_zero()) return *this = Scalar();
  IntPoly h = gcd(num, g);
  IntPoly den = d1 * d2g;
  if (!h.is_one()) {
    num = divexact(num, h);
    den = divexact(den, h);
  }
  if (den.is_one()) den = IntPoly{};
  const int k = num.low_degree();
  *this = Scalar(s + k, num.shifted_down(k), std::move(den));
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  const int s = shift_ + o.shift_;
  if (den_.is_zero() && o.den_.is_zero()) {
    num_ = num_ * o.num_;
    shift_ = s;
    return *this;
  }
  IntPoly n1 = num_;
  IntPoly n2 = o.num_;
  IntPoly d1 = den_or_one(den_);
  IntPoly d2 = den_or_one(o.den_);
  if (!o.den_.is_zero()) {
    IntPoly g = gcd(n1, d2);
    if (!g.is_one()) {
      n1 = divexact(n1, g);
      d2 = divexact(d2, g);
    }
  }
  if (!den_.is_zero()) {
    IntPoly g = gcd(n2, d1);
    if (!g.is_one()) {
      n2 = divexact(n2, g);
      d1 = divexact(d1, g);
    }
  }
  IntPoly den = d1 * d2;
  if (den.is_one()) den = IntPoly{};
  *this = Scalar(s, n1 * n2, std::move(den));
  return *this;
}

std::size_t Scalar::complexity() const {
  return num_.bit_size() + den_.bit_size() + 8 * static_cast<std::size_t>(num_.degree() + 1 + den_.degree() + 1);
}

std::size_t Scalar::hash() const {
  std::size_t h = std::hash<int>{}(shift_);
  auto mix = [&h](const IntPoly& p) {
    for (const auto& c : p.coeffs()) {
      const std::size_t v = mpz_get_ui(c.get_mpz_t()) ^ (static_cast<std::size_t>(mpz_sgn(c.get_mpz_t()) + 1) << 1);
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    h ^= 0x51ed27ULL + (h << 6) + (h >> 2);
  };
  mix(num_);
  mix(den_);
  return h;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0 / 1*q^0";
  return numerator().to_string() + " / " + denominator().to_string();
}

namespace {

Scalar parse_side(std::string_view text) {
  if (text == "0") return {};
  Scalar sum;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(" + ", pos);
    std::string_view term = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    const std::size_t star = term.find("*q^");
    if (star == std::string_view::npos) throw InvalidArgument("malformed scalar term: " + std::string(term));
    std::string coeff(term.substr(0, star));
    int exponent = 0;
    try {
      std::size_t used = 0;
      const std::string exp_text(term.substr(star + 3));
      exponent = std::stoi(exp_text, &used);
      if (used != exp_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InvalidArgument("malformed scalar exponent: " + std::string(term));
    }
    mpq_class c;
    if (c.set_str(coeff, 10) != 0) throw InvalidArgument("malformed scalar coefficient: " + coeff);
    c.canonicalize();
    sum += Scalar(c.get_num()) / Scalar(c.get_den()) * Scalar::q_pow(exponent);
    if (end == std::string_view::npos) break;
    pos = end + 3;
  }
  return sum;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  const std::size_t bar = text.find(" / ");
  if (bar == std::string_view::npos) return parse_side(text);
  return parse_side(text.substr(0, bar)) / parse_side(text.substr(bar + 3));
}

}  // namespace qconj
