#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qconj/matrix.hpp"
#include "qconj/scalar_poly.hpp"
#include "qconj/uq.hpp"
#include "qconj/weight_module.hpp"

namespace qconj {

enum class SOrientation { FlipTimesR, RTimesFlip };

std::string to_string(SOrientation o);

/// (pi (x) pi)(R) = q sum e_aa (x) e_aa + sum_{a != b} e_aa (x) e_bb
///                  + (q - q^-1) sum_{a > b} e_ab (x) e_ba.
Matrix natural_R(int n);
/// The flip w_a (x) w_b -> w_b (x) w_a.
Matrix flip(int n);
/// P R or R P.
Matrix hecke_S(int n, SOrientation orientation);

/// Q = U L with U = (pi (x) id)(R_21) upper triangular (F-type) and
/// L = (pi (x) id)(R) lower triangular (E-type), both with diagonal K_{eps_a}:
///   L_{a,b} = E_b L_{a,b+1} - q^-1 L_{a,b+1} E_b        (a > b),
///   U_{a,b+1} = F_b U_{a,b} - q^-1 U_{a,b} F_b          (b >= a).
struct QMatrix {
  int n = 0;
  std::vector<std::vector<UqElement>> L;
  std::vector<std::vector<UqElement>> U;
  std::vector<std::vector<UqElement>> Q;
  SOrientation orientation = SOrientation::FlipTimesR;

  /// (id (x) pi)(Q): entry ((i,k),(j,l)) = pi(Q_ij)_{kl}.
  Matrix natural_image() const;
};

/// Builds Q and selects the orientation of S with S^2 = (pi (x) pi)(Q).
/// Throws ValidationFailure if neither orientation matches.
QMatrix build_Q(int n);

/// Caches the action of the entries Q_ij on a module M and assembles the
/// operator Q on the weight spaces of C^n (x) M.
class QAction {
 public:
  QAction(std::shared_ptr<const WeightModule> tensor, const QMatrix& q);

  const WeightModule& tensor() const { return *tensor_; }
  const WeightModule& base() const { return *tensor_->layout()->base; }
  const QMatrix& q() const { return q_; }

  /// Q_ij as a map M_b -> M_{b + e(j) - e(i)}.
  const Matrix& entry(int i, int j, const Content& b);
  /// Q on the tensor weight space c.
  const Matrix& on_tensor(const Content& c);
  /// Tr_q(Q^m) on the base weight space d: sum_i q^{n-1-2i} (Q^m)_ii.
  Matrix qtrace_power(int m, const Content& d);

 private:
  std::shared_ptr<const WeightModule> tensor_;
  QMatrix q_;
  std::map<std::tuple<int, int, Content>, Matrix> entries_;
  std::map<Content, Matrix> tensor_ops_;
  std::map<std::pair<Content, int>, Matrix> powers_;
};

/// lcm of the minimal polynomials of Q on the tensor weight spaces |c| <= max_total.
ScalarPoly min_poly(QAction& qa, int max_total);

struct TraceResult {
  Scalar value;
  std::vector<Content> probed;
  bool scalar = true;
  bool consistent = true;
  std::string detail;
};

/// Tr_q(Q^m) on every nonzero base weight space where it is computable within the
/// cutoff (|d| + n - 1 <= cutoff); checks scalarness and agreement.
TraceResult qtrace_power(QAction& qa, int m);

struct ReflectionResult {
  bool holds = true;
  std::size_t spaces = 0;
  std::string witness;
};

/// S_12 Q_2 S_12 Q_2 = Q_2 S_12 Q_2 S_12 on C^n (x) C^n (x) M, contents |c| <= max_total.
ReflectionResult re_check(QAction& qa, const Matrix& s, int max_total);

/// [Q, F_i] and [Q, E_i] on every tensor weight space |c| <= max_total.
bool q_equivariant(QAction& qa, int max_total, std::string* witness = nullptr);

}  // namespace qconj
