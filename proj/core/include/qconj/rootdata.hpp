#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qconj {

/// Integer weight in epsilon coordinates, lambda_i = (lambda, eps_i).
using Weight = std::vector<int>;
/// Multiplicities d_i of the simple roots alpha_i subtracted from a top weight.
using Content = std::vector<int>;

/// Positive root eps_i - eps_j, 0-based, i < j.
struct Root {
  int i = 0;
  int j = 0;
  int height() const { return j - i; }
  friend bool operator==(const Root&, const Root&) = default;
};

int pairing(const Weight& a, const Weight& b);

class RootSystem {
 public:
  explicit RootSystem(int n);

  int n() const { return n_; }
  /// rho_i = n - 1 - i (0-based), i.e. n - i in 1-based indexing.
  const Weight& rho() const { return rho_; }
  Weight simple_root(int i) const;
  Weight root_weight(const Root& r) const;
  /// Ordered by (i, j).
  const std::vector<Root>& positive_roots() const& { return positive_; }
  std::vector<Root> positive_roots() && { return std::move(positive_); }
  /// Content of a positive root: ones at positions i..j-1.
  Content root_content(const Root& r) const;
  /// Content of eps_0 - eps_j: ones at positions < j.
  Content eps_content(int j) const;
  Weight eps(int j) const;

 private:
  int n_;
  Weight rho_;
  std::vector<Root> positive_;
};

int total(const Content& d);
Content operator+(Content a, const Content& b);
Content operator-(Content a, const Content& b);
bool non_negative(const Content& d);
Content unit_content(int n, int i);
/// top - sum d_i alpha_i.
Weight weight_at(const Weight& top, const Content& d);
std::string format_list(const std::vector<int>& v, int offset = 0);

/// Partition of n into k consecutive blocks of sizes n_1..n_k.
class BlockStructure {
 public:
  explicit BlockStructure(std::vector<int> mult);

  int n() const { return n_; }
  int k() const { return static_cast<int>(mult_.size()); }
  const std::vector<int>& mult() const& { return mult_; }
  std::vector<int> mult() && { return std::move(mult_); }
  /// 0-based first index of each block (m_i - 1).
  const std::vector<int>& starts() const& { return starts_; }
  std::vector<int> starts() && { return std::move(starts_); }
  int block_of(int index) const;
  /// i precedes j iff both lie in one block and i < j.
  bool precedes(int i, int j) const { return i < j && block_of(i) == block_of(j); }
  /// Simple roots alpha_i with i, i+1 in one block.
  std::vector<int> levi_simple_roots() const;
  /// Weight constant on blocks with the given values.
  Weight block_weight(const std::vector<int>& values) const;

 private:
  int n_ = 0;
  std::vector<int> mult_;
  std::vector<int> starts_;
  std::vector<int> block_;
};

/// Bijection of {0..n-1}; printed 1-based.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int n);
  static Permutation from_one_based(const std::vector<int>& images);

  int n() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const& { return images_; }
  std::vector<int> images() && { return std::move(images_); }
  std::vector<int> one_based() const;
  Permutation inverse() const;
  bool is_identity() const;
  /// (this * other)(i) = this(other(i)).
  Permutation operator*(const Permutation& other) const;
  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// sigma(eps_i - eps_j) = eps_sigma(i) - eps_sigma(j); returns the positive
  /// root and whether the image was negative.
  Root apply(const Root& r, bool* negative = nullptr) const;
  /// Plain action on weights: (sigma lambda)_i = lambda_{sigma^-1(i)}.
  Weight apply(const Weight& lam) const;
  std::string to_string() const;

 private:
  std::vector<int> images_;
};

/// sigma(i) < sigma(j) whenever i precedes j; cross-checked against the
/// root-system form sigma(R+_l) in R+.
bool is_admissible(const Permutation& sigma, const BlockStructure& blocks);
/// All admissible permutations in lexicographic order of image tuples.
std::vector<Permutation> enumerate_admissible(const BlockStructure& blocks);
/// n! / (n_1! ... n_k!).
std::uint64_t multinomial(const BlockStructure& blocks);

/// sigma . lambda = sigma(lambda + rho) - rho.
Weight shifted_action(const Permutation& sigma, const Weight& lam);
/// Sorted images of the block starts, 0-based (m_i^sigma - 1).
std::vector<int> sorted_block_starts(const Permutation& sigma, const BlockStructure& blocks);
/// True iff sigma maps every simple root of the Levi block to a simple root.
bool is_levi_placement(const Permutation& sigma, const BlockStructure& blocks);

bool is_block_constant(const Weight& lam, const BlockStructure& blocks);
/// Block values pairwise distinct.
bool is_levi_regular(const Weight& lam, const BlockStructure& blocks);
/// The integers lambda_{m_i} - m_i + 1 pairwise distinct.
bool is_orbit_regular(const Weight& lam, const BlockStructure& blocks);
/// For every Levi simple root alpha and every split sigma(alpha) = mu + nu into
/// positive roots, (sigma(lambda), mu) and (sigma(lambda), nu) are nonzero.
bool splits_are_nonvanishing(const Permutation& sigma, const Weight& lam, const BlockStructure& blocks);

/// Number of multisets of positive roots with the given content.
std::uint64_t kostant_partition_count(int n, const Content& d);

}  // namespace qconj
