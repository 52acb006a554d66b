#include "qconj/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qconj/error.hpp"

namespace qconj {

int pairing(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw InvalidArgument("weight size mismatch");
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RootSystem::RootSystem(int n) : n_(n) {
  if (n < 1) throw InvalidArgument("rank must be positive");
  rho_.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) rho_[static_cast<std::size_t>(i)] = n - 1 - i;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) positive_.push_back({i, j});
}

Weight RootSystem::simple_root(int i) const { return root_weight({i, i + 1}); }

Weight RootSystem::root_weight(const Root& r) const {
  if (r.i < 0 || r.j >= n_ || r.i >= r.j) throw InvalidArgument("not a positive root");
  Weight w(static_cast<std::size_t>(n_), 0);
  w[static_cast<std::size_t>(r.i)] = 1;
  w[static_cast<std::size_t>(r.j)] = -1;
  return w;
}

Content RootSystem::root_content(const Root& r) const {
  if (r.i < 0 || r.j >= n_ || r.i >= r.j) throw InvalidArgument("not a positive root");
  Content d(static_cast<std::size_t>(n_ - 1), 0);
  for (int t = r.i; t < r.j; ++t) d[static_cast<std::size_t>(t)] = 1;
  return d;
}

Content RootSystem::eps_content(int j) const {
  Content d(static_cast<std::size_t>(n_ - 1), 0);
  for (int t = 0; t < j; ++t) d[static_cast<std::size_t>(t)] = 1;
  return d;
}

Weight RootSystem::eps(int j) const {
  Weight w(static_cast<std::size_t>(n_), 0);
  w[static_cast<std::size_t>(j)] = 1;
  return w;
}

int total(const Content& d) { return std::accumulate(d.begin(), d.end(), 0); }

Content operator+(Content a, const Content& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Content operator-(Content a, const Content& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

bool non_negative(const Content& d) {
  return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

Content unit_content(int n, int i) {
  Content d(static_cast<std::size_t>(n - 1), 0);
  d[static_cast<std::size_t>(i)] = 1;
  return d;
}

Weight weight_at(const Weight& top, const Content& d) {
  Weight w = top;
  for (std::size_t i = 0; i < d.size(); ++i) {
    w[i] -= d[i];
    w[i + 1] += d[i];
  }
  return w;
}

std::string format_list(const std::vector<int>& v, int offset) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i] + offset;
  }
  return os.str();
}

BlockStructure::BlockStructure(std::vector<int> mult) : mult_(std::move(mult)) {
  if (mult_.size() < 2) throw InvalidArgument("need at least two blocks");
  for (int m : mult_) {
    if (m < 1) throw InvalidArgument("block multiplicities must be positive");
    starts_.push_back(n_);
    for (int t = 0; t < m; ++t) block_.push_back(static_cast<int>(starts_.size()) - 1);
    n_ += m;
  }
}

int BlockStructure::block_of(int index) const {
  if (index < 0 || index >= n_) throw InvalidArgument("index outside blocks");
  return block_[static_cast<std::size_t>(index)];
}

std::vector<int> BlockStructure::levi_simple_roots() const {
  std::vector<int> out;
  for (int i = 0; i + 1 < n_; ++i)
    if (block_of(i) == block_of(i + 1)) out.push_back(i);
  return out;
}

Weight BlockStructure::block_weight(const std::vector<int>& values) const {
  if (static_cast<int>(values.size()) != k()) throw InvalidArgument("need one value per block");
  Weight w(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) w[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(block_of(i))];
  return w;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || x >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(x)])
      throw InvalidArgument("not a permutation");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  std::iota(id.begin(), id.end(), 0);
  return Permutation(std::move(id));
}

Permutation Permutation::from_one_based(const std::vector<int>& images) {
  std::vector<int> z = images;
  for (auto& x : z) --x;
  return Permutation(std::move(z));
}

std::vector<int> Permutation::one_based() const {
  std::vector<int> out = images_;
  for (auto& x : out) ++x;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.n() != n()) throw InvalidArgument("permutation size mismatch");
  std::vector<int> r(images_.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = (*this)(other(static_cast<int>(i)));
  return Permutation(std::move(r));
}

Root Permutation::apply(const Root& r, bool* negative) const {
  const int a = (*this)(r.i);
  const int b = (*this)(r.j);
  if (negative) *negative = a > b;
  return a < b ? Root{a, b} : Root{b, a};
}

Weight Permutation::apply(const Weight& lam) const {
  if (static_cast<int>(lam.size()) != n()) throw InvalidArgument("weight size mismatch");
  Weight out(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) out[static_cast<std::size_t>(images_[i])] = lam[i];
  return out;
}

std::string Permutation::to_string() const { return "(" + format_list(images_, 1) + ")"; }

bool is_admissible(const Permutation& sigma, const BlockStructure& blocks) {
  if (sigma.n() != blocks.n()) throw InvalidArgument("permutation and blocks differ in size");
  bool by_order = true;
  for (int i = 0; i < blocks.n(); ++i)
    for (int j = i + 1; j < blocks.n(); ++j)
      if (blocks.precedes(i, j) && sigma(i) > sigma(j)) by_order = false;
  bool by_roots = true;
  const RootSystem rs(blocks.n());
  for (const auto& r : rs.positive_roots()) {
    if (blocks.block_of(r.i) != blocks.block_of(r.j)) continue;
    bool negative = false;
    sigma.apply(r, &negative);
    if (negative) by_roots = false;
  }
  if (by_order != by_roots) throw ValidationFailure("admissibility characterizations disagree");
  return by_order;
}

std::vector<Permutation> enumerate_admissible(const BlockStructure& blocks) {
  std::vector<int> images(static_cast<std::size_t>(blocks.n()));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    Permutation p(images);
    if (is_admissible(p, blocks)) out.push_back(std::move(p));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::uint64_t multinomial(const BlockStructure& blocks) {
  std::uint64_t r = 1;
  int placed = 0;
  for (int m : blocks.mult())
    for (int t = 1; t <= m; ++t) {
      ++placed;
      r = r * static_cast<std::uint64_t>(placed) / static_cast<std::uint64_t>(t);
    }
  return r;
}

Weight shifted_action(const Permutation& sigma, const Weight& lam) {
  const RootSystem rs(static_cast<int>(lam.size()));
  if (sigma.n() != rs.n()) throw InvalidArgument("permutation and weight differ in size");
  const Permutation inv = sigma.inverse();
  Weight out(lam.size());
  for (int i = 0; i < rs.n(); ++i) {
    const int j = inv(i);
    out[static_cast<std::size_t>(i)] =
        lam[static_cast<std::size_t>(j)] + rs.rho()[static_cast<std::size_t>(j)] - rs.rho()[static_cast<std::size_t>(i)];
  }
  return out;
}

std::vector<int> sorted_block_starts(const Permutation& sigma, const BlockStructure& blocks) {
  std::vector<int> out;
  for (int m : blocks.starts()) out.push_back(sigma(m));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_levi_placement(const Permutation& sigma, const BlockStructure& blocks) {
  for (int i : blocks.levi_simple_roots()) {
    const Root r = sigma.apply(Root{i, i + 1});
    if (r.height() != 1) return false;
  }
  return true;
}

bool is_block_constant(const Weight& lam, const BlockStructure& blocks) {
  if (static_cast<int>(lam.size()) != blocks.n()) return false;
  for (int i : blocks.levi_simple_roots())
    if (lam[static_cast<std::size_t>(i)] != lam[static_cast<std::size_t>(i + 1)]) return false;
  return true;
}

namespace {

bool pairwise_distinct(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

bool is_levi_regular(const Weight& lam, const BlockStructure& blocks) {
  std::vector<int> vals;
  for (int m : blocks.starts()) vals.push_back(lam[static_cast<std::size_t>(m)]);
  return pairwise_distinct(vals);
}

bool is_orbit_regular(const Weight& lam, const BlockStructure& blocks) {
  std::vector<int> vals;
  for (int m : blocks.starts()) vals.push_back(lam[static_cast<std::size_t>(m)] - m);
  return pairwise_distinct(vals);
}

bool splits_are_nonvanishing(const Permutation& sigma, const Weight& lam, const BlockStructure& blocks) {
  const RootSystem rs(blocks.n());
  const Weight sl = sigma.apply(lam);
  for (int a : blocks.levi_simple_roots()) {
    const Root img = sigma.apply(Root{a, a + 1});
    for (int mid = img.i + 1; mid < img.j; ++mid) {
      const int p1 = pairing(sl, rs.root_weight({img.i, mid}));
      const int p2 = pairing(sl, rs.root_weight({mid, img.j}));
      if (p1 == 0 || p2 == 0) return false;
    }
  }
  return true;
}

std::uint64_t kostant_partition_count(int n, const Content& d) {
  if (static_cast<int>(d.size()) != n - 1) throw InvalidArgument("content size mismatch");
  if (!non_negative(d)) return 0;
  std::vector<std::size_t> stride(d.size() + 1, 1);
  for (std::size_t i = 0; i < d.size(); ++i) stride[i + 1] = stride[i] * static_cast<std::size_t>(d[i] + 1);
  std::vector<std::uint64_t> ways(stride.back(), 0);
  ways[0] = 1;
  const RootSystem rs(n);
  for (const auto& r : rs.positive_roots()) {
    std::size_t shift = 0;
    for (int t = r.i; t < r.j; ++t) shift += stride[static_cast<std::size_t>(t)];
    // Unbounded knapsack: ascending order lets a root be reused.
    for (std::size_t idx = 0; idx < ways.size(); ++idx) {
      bool fits = true;
      for (int t = r.i; t < r.j; ++t) {
        const std::size_t digit = (idx / stride[static_cast<std::size_t>(t)]) % static_cast<std::size_t>(d[static_cast<std::size_t>(t)] + 1);
        if (digit == 0) fits = false;
      }
      if (fits) ways[idx] += ways[idx - shift];
    }
  }
  return ways.back();
}

}  // namespace qconj
