#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "qconj/rootdata.hpp"

namespace oracle {

using qconj::Content;
using qconj::Root;

/// Positive roots of gl(n) as contents: e_i - e_j has ones at positions i..j-1.
inline std::vector<Content> root_contents(int n) {
  std::vector<Content> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Content c(static_cast<std::size_t>(n - 1), 0);
      for (int t = i; t < j; ++t) c[static_cast<std::size_t>(t)] = 1;
      out.push_back(c);
    }
  return out;
}

namespace detail {
inline std::uint64_t count(const std::vector<Content>& roots, std::size_t from, Content rest) {
  if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) return 1;
  if (from == roots.size()) return 0;
  std::uint64_t total = 0;
  Content r = rest;
  while (true) {
    total += count(roots, from + 1, r);
    for (std::size_t k = 0; k < r.size(); ++k) r[k] -= roots[from][k];
    if (std::any_of(r.begin(), r.end(), [](int x) { return x < 0; })) break;
  }
  return total;
}
}  // namespace detail

/// Number of multisets drawn from `roots` summing to d, by explicit enumeration.
inline std::uint64_t multiset_count(const std::vector<Content>& roots, const Content& d) {
  return detail::count(roots, 0, d);
}

inline std::uint64_t kostant(int n, const Content& d) { return multiset_count(root_contents(n), d); }

/// Admissible permutations by scanning all of S_n.
inline std::vector<std::vector<int>> admissible_by_scan(const std::vector<int>& mult) {
  int n = std::accumulate(mult.begin(), mult.end(), 0);
  std::vector<int> block;
  for (std::size_t b = 0; b < mult.size(); ++b)
    for (int t = 0; t < mult[b]; ++t) block.push_back(static_cast<int>(b));
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i + 1 < n; ++i)
      if (block[static_cast<std::size_t>(i)] == block[static_cast<std::size_t>(i + 1)] &&
          p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(i + 1)])
        ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Integer weight with entries in [-10, 10] and (lam + rho, alpha) outside
/// [0, bound] for every positive root, so no singular vectors appear below
/// the cutoff and all q-integers in play are nonzero.
inline qconj::Weight generic_lambda(std::mt19937& rng, int n, int bound) {
  std::uniform_int_distribution<int> dist(-10, 10);
  while (true) {
    qconj::Weight lam(static_cast<std::size_t>(n));
    for (auto& x : lam) x = dist(rng);
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j) {
        const int p = lam[static_cast<std::size_t>(i)] - lam[static_cast<std::size_t>(j)] + j - i;
        if (p >= 0 && p <= bound) ok = false;
      }
    if (ok) return lam;
  }
}

}  // namespace oracle
