// Copyright 2026 The Choilab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "choilab/predicates.hpp"

#include <cmath>
#include <limits>

namespace choilab {

PredicateReport is_hermitian(const CMat& m, double tol) {
  const double dev = herm_deviation(m);
  PredicateReport r;
  r.tol = tol;
  r.witness_value = -dev;
  r.verdict = dev <= tol ? Verdict::Holds : Verdict::Fails;
  return r;
}

PredicateReport is_psd(const CMat& m, double tol) {
  if (herm_deviation(m) > kHermTol)
    throw precondition_error("is_psd: matrix not Hermitian");
  HermEigen eig = hermitian_eigensystem(m);
  const double lo = eig.values(0);
  const double hi = eig.values(eig.values.size() - 1);
  const double scale = std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  PredicateReport r;
  r.tol = tol * scale;
  r.witness_value = lo;
  r.witness_x = CVec(eig.vectors.col(0));
  r.verdict = lo >= -r.tol ? Verdict::Holds : Verdict::Fails;
  return r;
}

//==========================================================================
// See-saw block-positivity search
//==========================================================================

// Contraction of rho against the B-side vector: M_y(i,j) = sum_{k,l}
// conj(y_k) rho[(i,k),(j,l)] y_l, a d_a x d_a Hermitian matrix (and the
// A-side mirror image).
static CMat contract_b(const CMat& rho, const BipartiteIndex& idx, const CVec& y) {
  CMat m = CMat::Zero(idx.d_a, idx.d_a);
  for (int i = 0; i < idx.d_a; ++i)
    for (int j = 0; j < idx.d_a; ++j)
      for (int k = 0; k < idx.d_b; ++k)
        for (int l = 0; l < idx.d_b; ++l)
          m(i, j) += std::conj(y(k)) * rho(idx.flat(i, k), idx.flat(j, l)) * y(l);
  return m;
}

static CMat contract_a(const CMat& rho, const BipartiteIndex& idx, const CVec& x) {
  CMat m = CMat::Zero(idx.d_b, idx.d_b);
  for (int k = 0; k < idx.d_b; ++k)
    for (int l = 0; l < idx.d_b; ++l)
      for (int i = 0; i < idx.d_a; ++i)
        for (int j = 0; j < idx.d_a; ++j)
          m(k, l) += std::conj(x(i)) * rho(idx.flat(i, k), idx.flat(j, l)) * x(j);
  return m;
}

// Lowest eigenvector with the phase fixed so the first non-negligible
// component is real positive; keeps restart reduction reproducible.
static CVec ground_vector(const CMat& m) {
  HermEigen eig = hermitian_eigensystem(m, 1e-8);
  CVec v = eig.vectors.col(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > 1e-12) {
      v *= std::conj(v(i)) / a;
      break;
    }
  }
  return v;
}

double product_expectation(const CMat& rho, const BipartiteIndex& idx, const CVec& x,
                           const CVec& y) {
  if (x.size() != idx.d_a || y.size() != idx.d_b)
    throw dim_error("product_expectation: vector dims mismatch");
  complexd acc = 0.0;
  for (int i = 0; i < idx.d_a; ++i)
    for (int k = 0; k < idx.d_b; ++k)
      for (int j = 0; j < idx.d_a; ++j)
        for (int l = 0; l < idx.d_b; ++l)
          acc += std::conj(x(i) * y(k)) * rho(idx.flat(i, k), idx.flat(j, l)) * x(j) * y(l);
  return acc.real();
}

PredicateReport is_popt(const DualityState& rho, const PoptConfig& cfg) {
  if (cfg.restarts < 1 || cfg.max_iters < 1 || cfg.convergence_eps <= 0.0 ||
      cfg.tol_popt <= 0.0)
    throw precondition_error("is_popt: configuration values must be positive");
  if (herm_deviation(rho.matrix) > kHermTol)
    throw precondition_error("is_popt: matrix not Hermitian");
  const CMat m = 0.5 * (rho.matrix + rho.matrix.adjoint());
  const BipartiteIndex& idx = rho.idx;

  double best = std::numeric_limits<double>::infinity();
  CVec best_x, best_y;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    CVec y = random_unit_vector(idx.d_b, split_seed(cfg.seed, restart));
    CVec x;
    double f_prev = std::numeric_limits<double>::infinity();
    for (int it = 0; it < cfg.max_iters; ++it) {
      x = ground_vector(contract_b(m, idx, y));
      y = ground_vector(contract_a(m, idx, x));
      const double f = product_expectation(m, idx, x, y);
      if (std::abs(f - f_prev) <= cfg.convergence_eps) {
        f_prev = f;
        break;
      }
      f_prev = f;
    }
    // Strict improvement keeps the first-found witness on ties.
    if (f_prev < best) {
      best = f_prev;
      best_x = x;
      best_y = y;
    }
  }

  PredicateReport r;
  r.tol = cfg.tol_popt;
  r.witness_value = best;
  r.witness_x = best_x;
  r.witness_y = best_y;
  r.restarts_used = cfg.restarts;
  r.verdict = best < -cfg.tol_popt ? Verdict::Fails : Verdict::Holds;
  return r;
}

PredicateReport is_cp(const QuantumMap& phi, double tol) {
  const CMat choi = choi_forward(phi).matrix;
  const double dev = herm_deviation(choi);
  if (dev > kHermTol) {
    // Not Hermiticity-preserving, so certainly not CP.
    PredicateReport r;
    r.tol = tol;
    r.witness_value = -dev;
    r.verdict = Verdict::Fails;
    return r;
  }
  return is_psd(choi, tol);
}

PredicateReport is_co_cp(const QuantumMap& phi, double tol) {
  return is_cp(precompose_transpose(phi), tol);
}

PredicateReport is_trace_preserving(const QuantumMap& phi, double tol) {
  const DualityState j = j_forward(phi);
  const CMat marginal = partial_trace(j.matrix, j.idx, Factor::B);
  const double dev = max_abs(CMat(marginal - CMat::Identity(phi.d_a, phi.d_a)));
  PredicateReport r;
  r.tol = tol;
  r.witness_value = -dev;
  r.verdict = dev <= tol ? Verdict::Holds : Verdict::Fails;
  return r;
}

PredicateReport is_ppt_state(const CMat& rho, const BipartiteIndex& idx, double tol) {
  PredicateReport base = is_psd(rho, tol);
  if (base.verdict != Verdict::Holds)
    throw precondition_error("is_ppt_state: input state is not PSD");
  return is_psd(partial_transpose(rho, idx, Factor::A), tol);
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

}  // namespace choilab
