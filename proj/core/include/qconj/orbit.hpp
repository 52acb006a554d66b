#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qconj/certificate.hpp"
#include "qconj/rootdata.hpp"
#include "qconj/scalar.hpp"
#include "qconj/scalar_poly.hpp"

namespace qconj {

/// Semisimple class with eigenvalues x_i = q^{2(a_i - m_i + 1)} of multiplicities
/// n_i (m_i the 1-based block start), realized on the block-constant weight with
/// value a_i on block i.
struct OrbitData {
  int n = 0;
  BlockStructure blocks;
  std::vector<int> exps;
  std::vector<Scalar> x;
  Weight lambda;

  int k() const { return blocks.k(); }
  std::string describe() const;
};

/// Throws InvalidArgument unless sum n_i = n, 2 <= k <= n and the integers
/// a_i - m_i + 1 are pairwise distinct.
OrbitData make_orbit(const std::vector<int>& mult, const std::vector<int>& exps);

/// q^{2(lam_l - l)} for 0-based l: the eigenvalue of Q on the submodule of
/// C^n (x) M_lam generated by the singular vector of weight lam + eps_l.
Scalar hat_x(const Weight& lam, int l);

/// prod_i (X - x_i).
ScalarPoly orbit_polynomial(const OrbitData& o);

/// sum_i x_i^m [n_i] prod_{j != i} (q^{n_j} x_i - q^{-n_j} x_j) / (x_i - x_j).
Scalar qtrace_target(int m, const OrbitData& o);

struct VerifyOptions {
  int cutoff = 4;
  /// Reflection equation is checked on triple contents up to this total.
  int re_cutoff = 2;
  /// Trace identities for m = k+1 .. k+extra_traces, recorded as extended checks.
  int extra_traces = 1;
};

/// Builds M_{sigma.lam} and records: generator singularity, minimal
/// polynomial, q-traces, reflection equation, filtration and direct sum.
/// Failures are recorded in the certificate, never thrown.
Certificate verify_orbit(const OrbitData& o, const Permutation& sigma, const VerifyOptions& opts = {});

struct SweepResult {
  std::vector<Certificate> certificates;
  /// Minimal polynomial and traces agree across all sigma.
  bool agreement = false;
  std::string detail;

  bool passed() const;
};

/// verify_orbit over every admissible sigma in enumeration order; up to
/// `threads` instances run concurrently (0 reads QCONJ_THREADS, default 1).
SweepResult sigma_sweep(const OrbitData& o, const VerifyOptions& opts = {}, unsigned threads = 0);

/// Thread count from QCONJ_THREADS, at least 1.
unsigned env_threads();

}  // namespace qconj
