#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qconj/matrix.hpp"
#include "qconj/rootdata.hpp"
#include "qconj/uq.hpp"

namespace qconj {

/// Contents d >= 0 with |d| <= max_total, ordered by |d| then lexicographically.
std::vector<Content> enumerate_contents(int n, int max_total);

struct WeightSpace {
  Content content;
  std::size_t dim = 0;
  /// Human-readable description of each basis vector (words for Verma modules).
  std::vector<std::string> labels;
  /// F[i] maps this space to content + delta_i; absent at the cutoff.
  std::vector<std::optional<Matrix>> F;
  /// E[i] maps this space to content - delta_i; absent when that is negative.
  std::vector<std::optional<Matrix>> E;
};

class WeightModule;

/// Bookkeeping for C^n (x) M: at each content c, the summands w_j (x) M_{c - e(j)}.
struct TensorLayout {
  struct Component {
    int j = 0;
    Content base_content;
    std::size_t offset = 0;
    std::size_t dim = 0;
  };
  std::shared_ptr<const WeightModule> base;
  std::map<Content, std::vector<Component>> components;

  const Component* find(const Content& c, int j) const;
};

struct WeightVector {
  Content content;
  Vector coords;

  bool is_zero() const { return qconj::is_zero(coords); }
};

/// Weight-graded module with U_q(gl(n)) action stored as matrices between the
/// weight spaces top - sum d_i alpha_i, |d| <= cutoff.
class WeightModule {
 public:
  WeightModule(int n, Weight top, int cutoff);

  int n() const { return n_; }
  const Weight& top() const { return top_; }
  int cutoff() const { return cutoff_; }
  Weight weight(const Content& d) const { return weight_at(top_, d); }

  /// nullptr if the content is negative or beyond the cutoff.
  const WeightSpace* find(const Content& d) const;
  /// Throws CutoffExceeded beyond the cutoff; negative contents are invalid.
  const WeightSpace& at(const Content& d) const;
  /// 0 for negative contents.
  std::size_t dim(const Content& d) const;
  const std::vector<WeightSpace>& spaces() const { return spaces_; }

  WeightSpace& add_space(const Content& d, std::size_t dim);
  WeightSpace& mutable_at(const Content& d);

  const std::optional<TensorLayout>& layout() const { return layout_; }
  void set_layout(TensorLayout layout) { layout_ = std::move(layout); }

  WeightVector zero(const Content& d) const { return {d, Vector(dim(d))}; }
  WeightVector basis_vector(const Content& d, std::size_t k) const;

  /// Single generator actions; the E action on the top space gives zero.
  WeightVector apply_F(int i, const WeightVector& v) const;
  WeightVector apply_E(int i, const WeightVector& v) const;

 private:
  int n_;
  Weight top_;
  int cutoff_;
  std::vector<WeightSpace> spaces_;
  std::map<Content, std::size_t> index_;
  std::optional<TensorLayout> layout_;
};

/// Action of a homogeneous element; letters act right to left, K_mu by
/// q^{(mu, weight)}. Throws CutoffExceeded if an F would leave the stored range.
WeightVector act(const UqElement& g, const WeightModule& m, const WeightVector& v);
/// Matrix of g from content d to d + shift(g).
Matrix act_matrix(const UqElement& g, const WeightModule& m, const Content& d);
/// Content change of a homogeneous element; throws for inhomogeneous ones.
Content content_shift(const UqElement& g);

/// Kernel of all E_i on the weight space d.
std::vector<WeightVector> singular_space(const WeightModule& m, const Content& d);
bool is_singular(const WeightModule& m, const WeightVector& v);

/// Per content, the span of the generators plus F_i of the lower pieces.
using SubmoduleSpans = std::map<Content, Subspace>;
SubmoduleSpans f_span(const WeightModule& m, const std::vector<WeightVector>& gens, int max_total);
/// Checks E_i S_d subset S_{d - delta_i} for every stored d.
bool is_e_closed(const WeightModule& m, const SubmoduleSpans& spans);
/// Zero-dimensional spans for every content up to max_total.
SubmoduleSpans zero_spans(const WeightModule& m, int max_total);
SubmoduleSpans sum_spans(const SubmoduleSpans& a, const SubmoduleSpans& b);

/// M / N together with the projection.
struct Quotient {
  std::shared_ptr<const WeightModule> parent;
  SubmoduleSpans sub;
  std::shared_ptr<const WeightModule> module;

  WeightVector project(const WeightVector& v) const;
};

/// Requires spans stable under every E_i and F_i within the cutoff.
Quotient quotient_module(std::shared_ptr<const WeightModule> m, SubmoduleSpans spans);

/// C^n (x) M with Delta(E) = E (x) 1 + K_alpha (x) E, Delta(F) = 1 (x) F + F (x) K_-alpha.
/// Top weight top(M) + eps_1; same cutoff as M.
std::shared_ptr<const WeightModule> tensor_with_natural(std::shared_ptr<const WeightModule> m);
/// w_j (x) x as a vector of the tensor module.
WeightVector embed(const WeightModule& t, int j, const WeightVector& x);
/// The M-component of a tensor vector along w_j.
WeightVector component(const WeightModule& t, const WeightVector& v, int j);
/// (id (x) f) for a per-content linear map f on the base (e.g. a projection).
WeightVector map_components(const WeightModule& source, const WeightModule& target, const WeightVector& v,
                            const std::function<WeightVector(const WeightVector&)>& f);

}  // namespace qconj
