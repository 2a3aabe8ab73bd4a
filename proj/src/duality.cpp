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

#include "choilab/duality.hpp"

#include <cmath>

namespace choilab {

bool canonical_dual_a(Variant v) { return v == Variant::JstarC; }

DualityState make_state(CMat matrix, const BipartiteIndex& idx, Variant v) {
  if (matrix.rows() != matrix.cols() || matrix.rows() != idx.side())
    throw dim_error("make_state: matrix side does not match d_a * d_b");
  DualityState s{std::move(matrix), idx, v, canonical_dual_a(v), false};
  return s;
}

DualityState j_forward(const QuantumMap& phi, const OperatorBasis& basis) {
  if (basis.dim != phi.d_a) throw dim_error("j_forward: basis dimension mismatch");
  const BipartiteIndex idx(phi.d_a, phi.d_b);
  CMat rho = CMat::Zero(idx.side(), idx.side());
  for (const CMat& e : basis.elements) rho += kron(e.adjoint(), apply(phi, e));
  return make_state(std::move(rho), idx, Variant::J);
}

DualityState j_forward(const QuantumMap& phi) {
  return j_forward(phi, matrix_units(phi.d_a));
}

QuantumMap j_inverse(const DualityState& rho) {
  if (rho.variant != Variant::J) throw variant_error("j_inverse: state must carry variant J");
  const int d_a = rho.idx.d_a;
  const int d_b = rho.idx.d_b;
  const CMat id_b = CMat::Identity(d_b, d_b);
  std::vector<CMat> images;
  images.reserve(d_a * d_a);
  for (int i = 0; i < d_a; ++i)
    for (int j = 0; j < d_a; ++j)
      images.push_back(
          partial_trace(CMat(rho.matrix * kron(matrix_unit(d_a, i, j), id_b)), rho.idx,
                        Factor::A));
  return map_from_basis_action(images, matrix_units(d_a));
}

DualityState choi_forward(const QuantumMap& phi) {
  const BipartiteIndex idx(phi.d_a, phi.d_b);
  CMat rho = CMat::Zero(idx.side(), idx.side());
  for (int i = 0; i < phi.d_a; ++i)
    for (int j = 0; j < phi.d_a; ++j) {
      const CMat e = matrix_unit(phi.d_a, i, j);
      rho += kron(e, apply(phi, e));
    }
  return make_state(std::move(rho), idx, Variant::C);
}

QuantumMap choi_inverse(const DualityState& rho) {
  if (rho.variant != Variant::C)
    throw variant_error("choi_inverse: state must carry variant C");
  const int d_a = rho.idx.d_a;
  const int d_b = rho.idx.d_b;
  const CMat id_b = CMat::Identity(d_b, d_b);
  std::vector<CMat> images;
  images.reserve(d_a * d_a);
  for (int i = 0; i < d_a; ++i)
    for (int j = 0; j < d_a; ++j)
      images.push_back(
          partial_trace(CMat(rho.matrix * kron(matrix_unit(d_a, j, i), id_b)), rho.idx,
                        Factor::A));
  return map_from_basis_action(images, matrix_units(d_a));
}

// J and CJstar share one matrix; C and JstarC share the other; the two
// camps differ by a partial transposition on A.
static bool j_like(Variant v) { return v == Variant::J || v == Variant::CJstar; }

DualityState to_variant(const DualityState& rho, Variant target) {
  CMat m = j_like(rho.variant) == j_like(target)
               ? rho.matrix
               : partial_transpose(rho.matrix, rho.idx, Factor::A);
  return make_state(std::move(m), rho.idx, target);
}

DualityState state_from_inner_products(const QuantumMap& phi, Variant v) {
  const BipartiteIndex idx(phi.d_a, phi.d_b);
  CMat rho = CMat::Zero(idx.side(), idx.side());
  // Expansion coefficient of E_pq (x) E_rs, from the defining pairing of the
  // variant. The J/CJstar pairings evaluate phi on the adjoint of E_pq, the
  // C/JstarC pairings on its (dual-basis) conjugate, which for matrix units
  // is E_pq itself.
  for (int p = 0; p < phi.d_a; ++p)
    for (int q = 0; q < phi.d_a; ++q) {
      const CMat arg = j_like(v) ? matrix_unit(phi.d_a, q, p) : matrix_unit(phi.d_a, p, q);
      const CMat img = apply(phi, arg);
      for (int r = 0; r < phi.d_b; ++r)
        for (int s = 0; s < phi.d_b; ++s)
          rho += img(r, s) * kron(matrix_unit(phi.d_a, p, q), matrix_unit(phi.d_b, r, s));
    }
  return make_state(std::move(rho), idx, v);
}

std::vector<CMat> kraus_factorization(const QuantumMap& phi, double tol) {
  const CMat choi = choi_forward(phi).matrix;
  if (herm_deviation(choi) > kHermTol)
    throw precondition_error("kraus_factorization: map is not Hermiticity-preserving");
  HermEigen eig = hermitian_eigensystem(choi);
  const double top = std::max(std::abs(eig.values(0)),
                              std::abs(eig.values(eig.values.size() - 1)));
  const double floor = tol * std::max(1.0, top);
  if (eig.values(0) < -floor)
    throw precondition_error("kraus_factorization: Choi matrix not PSD (min eigenvalue " +
                             std::to_string(eig.values(0)) + ")");
  const BipartiteIndex idx(phi.d_a, phi.d_b);
  std::vector<CMat> kraus;
  for (Eigen::Index n = 0; n < eig.values.size(); ++n) {
    if (eig.values(n) <= floor) continue;
    const double root = std::sqrt(eig.values(n));
    CMat k(phi.d_b, phi.d_a);
    for (int i = 0; i < phi.d_a; ++i)
      for (int r = 0; r < phi.d_b; ++r) k(r, i) = root * eig.vectors(idx.flat(i, r), n);
    kraus.push_back(std::move(k));
  }
  if (kraus.empty()) kraus.push_back(CMat::Zero(phi.d_b, phi.d_a));
  return kraus;
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::J: return "J";
    case Variant::C: return "C";
    case Variant::CJstar: return "CJstar";
    case Variant::JstarC: return "JstarC";
  }
  return "?";
}

}  // namespace choilab
