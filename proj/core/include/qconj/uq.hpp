#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qconj/matrix.hpp"
#include "qconj/rootdata.hpp"

namespace qconj {

/// A word in E_i, F_i followed by one Cartan letter K_mu = q^{h_mu}.
/// Letter code c > 0 is E_{c-1}; c < 0 is F_{-c-1}.
struct Monomial {
  std::vector<int> word;
  Weight cartan;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

inline int e_letter(int i) { return i + 1; }
inline int f_letter(int i) { return -(i + 1); }

/// Element of U_q(gl(n)) as a combination of monomials with Cartan letters
/// gathered on the right. No normal form for the E/F part is attempted.
class UqElement {
 public:
  explicit UqElement(int n = 1) : n_(n) {}

  static UqElement one(int n) { return scalar(n, Scalar(1)); }
  static UqElement scalar(int n, const Scalar& c);
  static UqElement E(int n, int i);
  static UqElement F(int n, int i);
  static UqElement K(int n, const Weight& mu);
  /// (q^c K_beta - q^-c K_-beta) / (q - q^-1), i.e. [h_beta + c]_q.
  static UqElement cartan_bracket(int n, const Weight& beta, int c);

  int n() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Scalar>& terms() const& { return terms_; }
  std::map<Monomial, Scalar> terms() && { return std::move(terms_); }
  void add_term(const Monomial& m, const Scalar& c);

  /// Content change (+1 per F_i, -1 per E_i) if all monomials agree.
  bool homogeneous(Content* shift = nullptr) const;

  UqElement operator-() const;
  UqElement& operator+=(const UqElement& o);
  UqElement& operator-=(const UqElement& o);
  UqElement& operator*=(const Scalar& c);
  friend UqElement operator+(UqElement a, const UqElement& b) { return a += b; }
  friend UqElement operator-(UqElement a, const UqElement& b) { return a -= b; }
  friend UqElement operator*(UqElement a, const Scalar& c) { return a *= c; }
  friend UqElement operator*(const Scalar& c, UqElement a) { return a *= c; }
  friend UqElement operator*(const UqElement& a, const UqElement& b);
  friend bool operator==(const UqElement& a, const UqElement& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  /// Monomials like "(1*q^0 / 1*q^0) F1 F2 K(0,1,-1)" joined by " + ".
  std::string to_string() const;

 private:
  int n_;
  std::map<Monomial, Scalar> terms_;
};

/// Weight of a word: alpha_i per E_i, -alpha_i per F_i.
Weight word_weight(int n, const std::vector<int>& word);
/// Product of two monomials: (w1 K_mu)(w2 K_nu) = q^{(mu, wt w2)} w1 w2 K_{mu+nu}.
std::pair<Monomial, Scalar> multiply(const Monomial& a, const Monomial& b);

class TensorElement {
 public:
  explicit TensorElement(int n = 1) : n_(n) {}
  static TensorElement pure(const UqElement& a, const UqElement& b);

  int n() const { return n_; }
  const std::map<std::pair<Monomial, Monomial>, Scalar>& terms() const& { return terms_; }
  std::map<std::pair<Monomial, Monomial>, Scalar> terms() && { return std::move(terms_); }
  void add_term(const Monomial& a, const Monomial& b, const Scalar& c);
  bool is_zero() const { return terms_.empty(); }

  TensorElement& operator+=(const TensorElement& o);
  friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms_ == b.terms_; }

 private:
  int n_;
  std::map<std::pair<Monomial, Monomial>, Scalar> terms_;
};

/// Delta(E) = E (x) 1 + K_alpha (x) E, Delta(F) = 1 (x) F + F (x) K_-alpha,
/// Delta(K) = K (x) K, extended multiplicatively.
TensorElement coproduct(const UqElement& x);
/// gamma(E) = -K_-alpha E, gamma(F) = -F K_alpha, gamma(K_mu) = K_-mu;
/// anti-multiplicative.
UqElement antipode(const UqElement& x);
Scalar counit(const UqElement& x);

/// E_i -> e_{i,i+1}, F_i -> e_{i+1,i}, K_mu -> diag(q^{mu_j}).
Matrix natural_rep(const UqElement& x);
/// (pi (x) pi) of a tensor element as an n^2 x n^2 matrix, basis w_a (x) w_b
/// at index a * n + b.
Matrix natural_rep(const TensorElement& x);

}  // namespace qconj
