#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "qconj/rootdata.hpp"
#include "qconj/uq.hpp"
#include "qconj/weight_module.hpp"

namespace qconj {

/// Verma module with highest weight lam, weight spaces up to total content
/// cutoff. Each weight space is U_d = (sum_i F_i U_{d - delta_i}) modulo the
/// Serre and commutation relators placed in front; basis vectors are words.
/// The dimension of every space is checked against the Kostant partition count.
std::shared_ptr<const WeightModule> build_verma(const Weight& lam, int cutoff);

/// Highest weight vector of a module (content 0, first basis vector).
WeightVector top_vector(const WeightModule& m);

/// Dynamical root vector for eps_i - eps_j (0-based). For i == j it is 1 and
/// for i > j it is 0. Built by the recursion
///   f_{i,j} = F_i f_{i+1,j} [h_b + (rho,b)] - f_{i+1,j} F_i [h_b + (rho,b) - 1],
/// b = eps_{i+1} - eps_j, keeping the Cartan letters symbolic.
UqElement dyn_root(int n, int i, int j);
/// Cartan letters replaced by their values on the weight lam.
UqElement dyn_root_at(int n, int i, int j, const Weight& lam);
/// Coefficient of the word F_i F_{i+1} ... F_{j-1} in dyn_root_at(i, j, lam).
Scalar principal_coefficient(int n, int i, int j, const Weight& lam);

struct BasicDynCheck {
  int simple = 0;
  WeightVector lhs;
  WeightVector rhs;
  bool equal = false;
};

/// e_{alpha_s} f_alpha^m v = delta_{s,i} [m] [(lam + rho, alpha) - m] f_beta f_alpha^{m-1} v
/// for all simple s, with alpha = eps_i - eps_j, beta = alpha - alpha_i.
std::vector<BasicDynCheck> check_basic_dyn(const WeightModule& verma, const Root& alpha, int m);

/// sum_{i<=l} (-q)^i prod_{j<i} [lam_j - lam_l + l - j - 1] w_i (x) f_{i,l} v in
/// a tensor module C^n (x) M where M has highest weight lam (0-based l).
WeightVector u_hat(const WeightModule& tensor, int l);
/// prod_{j<l} [lam_j - lam_l + l - j] (0-based l).
Scalar c_hat(const Weight& lam, int l);
/// Span of F-words applied to w_0 (x) v, ..., w_{j-1} (x) v.
SubmoduleSpans filtration_V(const WeightModule& tensor, int j, int max_total);
/// Sum of the submodules generated by u_hat(0..j-1).
SubmoduleSpans filtration_W(const WeightModule& tensor, int j, int max_total);

/// Quotient by the submodule generated by singular weight vectors. Throws
/// InvalidArgument for a non-singular generator and ValidationFailure if the
/// generated F-span is not stable under the E_i.
Quotient quotient_by_singulars(std::shared_ptr<const WeightModule> m, const std::vector<WeightVector>& gens);

struct SigmaModule {
  Weight lambda;
  Weight sigma_lambda;
  std::vector<Root> generator_roots;
  std::vector<WeightVector> generators;
  std::shared_ptr<const WeightModule> verma;
  Quotient quotient;
};

/// M_{sigma.lam}: the Verma module of sigma.lam divided by the vectors
/// f_{sigma(alpha)} v for the simple roots alpha inside the blocks.
SigmaModule build_M_sigma(const Weight& lam, const BlockStructure& blocks, const Permutation& sigma, int cutoff);

}  // namespace qconj
