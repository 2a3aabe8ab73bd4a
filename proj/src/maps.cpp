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

#include "choilab/maps.hpp"

#include <cmath>

namespace choilab {

QuantumMap map_from_transfer(CMat transfer, int d_a, int d_b) {
  if (d_a < 1 || d_b < 1) throw dim_error("map_from_transfer: dimensions must be >= 1");
  if (transfer.rows() != Eigen::Index(d_b) * d_b ||
      transfer.cols() != Eigen::Index(d_a) * d_a)
    throw dim_error("map_from_transfer: transfer must be d_b^2 x d_a^2");
  QuantumMap phi;
  phi.d_a = d_a;
  phi.d_b = d_b;
  phi.transfer = std::move(transfer);
  return phi;
}

QuantumMap map_from_basis_action(const std::vector<CMat>& images,
                                 const OperatorBasis& basis) {
  const int d_a = basis.dim;
  if (static_cast<int>(images.size()) != d_a * d_a)
    throw dim_error("map_from_basis_action: need d_a^2 images");
  const int d_b = static_cast<int>(images[0].rows());
  for (const CMat& img : images)
    if (img.rows() != d_b || img.cols() != d_b)
      throw dim_error("map_from_basis_action: images must all be d_b x d_b");

  // Linear extension: x = sum_k (x, e_k) e_k and (x, e_k) = vec(e_k)^† vec(x),
  // so transfer = sum_k vec(images[k]) vec(e_k)^†.
  CMat transfer = CMat::Zero(d_b * d_b, d_a * d_a);
  for (int k = 0; k < d_a * d_a; ++k)
    transfer += vec(images[k]) * vec(basis.elements[k]).adjoint();
  return map_from_transfer(std::move(transfer), d_a, d_b);
}

QuantumMap map_from_kraus(std::vector<CMat> kraus) {
  if (kraus.empty()) throw dim_error("map_from_kraus: need at least one operator");
  const int d_b = static_cast<int>(kraus[0].rows());
  const int d_a = static_cast<int>(kraus[0].cols());
  for (const CMat& k : kraus)
    if (k.rows() != d_b || k.cols() != d_a)
      throw dim_error("map_from_kraus: operators must share one d_b x d_a shape");

  CMat transfer = CMat::Zero(d_b * d_b, d_a * d_a);
  for (const CMat& k : kraus) transfer += kron(k.conjugate(), k);
  QuantumMap phi = map_from_transfer(std::move(transfer), d_a, d_b);
  phi.kraus = std::move(kraus);
  return phi;
}

QuantumMap map_from_stinespring(const CMat& v, int d_a, int r) {
  if (d_a < 1 || r < 1) throw dim_error("map_from_stinespring: d_a, r must be >= 1");
  if (v.rows() != Eigen::Index(d_a) * r)
    throw dim_error("map_from_stinespring: v must have d_a * r rows");
  const int d_b = static_cast<int>(v.cols());

  // K_i* rows live at composite indices (p, i) = p*r + i of v (A-major).
  std::vector<CMat> kraus;
  kraus.reserve(r);
  for (int i = 0; i < r; ++i) {
    CMat w(d_a, d_b);
    for (int p = 0; p < d_a; ++p) w.row(p) = v.row(p * r + i);
    kraus.push_back(w.adjoint());
  }
  return map_from_kraus(std::move(kraus));
}

QuantumMap identity_map(int d) {
  return map_from_kraus({CMat::Identity(d, d)});
}

QuantumMap transpose_map(int d) {
  if (d < 1) throw dim_error("transpose_map: d must be >= 1");
  return map_from_transfer(commutation_matrix(d), d, d);
}

CMat apply(const QuantumMap& phi, const CMat& x) {
  if (x.rows() != phi.d_a || x.cols() != phi.d_a)
    throw dim_error("apply: operand must be d_a x d_a");
  return unvec(CVec(phi.transfer * vec(x)), phi.d_b, phi.d_b);
}

QuantumMap compose(const QuantumMap& psi, const QuantumMap& phi) {
  if (psi.d_a != phi.d_b) throw dim_error("compose: signature mismatch");
  QuantumMap out = map_from_transfer(CMat(psi.transfer * phi.transfer), phi.d_a, psi.d_b);
  if (psi.kraus && phi.kraus) {
    std::vector<CMat> ks;
    ks.reserve(psi.kraus->size() * phi.kraus->size());
    for (const CMat& a : *psi.kraus)
      for (const CMat& b : *phi.kraus) ks.push_back(a * b);
    out.kraus = std::move(ks);
  }
  out.orientation_a = phi.orientation_a;
  out.orientation_b = psi.orientation_b;
  return out;
}

QuantumMap scaled(const QuantumMap& phi, double factor) {
  QuantumMap out = map_from_transfer(CMat(factor * phi.transfer), phi.d_a, phi.d_b);
  if (phi.kraus && factor >= 0.0) {
    std::vector<CMat> ks;
    ks.reserve(phi.kraus->size());
    for (const CMat& k : *phi.kraus) ks.push_back(std::sqrt(factor) * k);
    out.kraus = std::move(ks);
  }
  out.orientation_a = phi.orientation_a;
  out.orientation_b = phi.orientation_b;
  return out;
}

QuantumMap add(const QuantumMap& phi, const QuantumMap& psi) {
  if (phi.d_a != psi.d_a || phi.d_b != psi.d_b) throw dim_error("add: signature mismatch");
  QuantumMap out = map_from_transfer(CMat(phi.transfer + psi.transfer), phi.d_a, phi.d_b);
  if (phi.kraus && psi.kraus) {
    std::vector<CMat> ks = *phi.kraus;
    ks.insert(ks.end(), psi.kraus->begin(), psi.kraus->end());
    out.kraus = std::move(ks);
  }
  return out;
}

QuantumMap conjugate_map(const QuantumMap& phi) {
  // vec((phi(x*))*) = K_b conj(transfer) K_a vec(x).
  const CMat ka = commutation_matrix(phi.d_a);
  const CMat kb = commutation_matrix(phi.d_b);
  QuantumMap out =
      map_from_transfer(CMat(kb * phi.transfer.conjugate() * ka), phi.d_a, phi.d_b);
  // Kraus data certifies complete positivity, hence Hermiticity preservation,
  // hence phi# = phi; the data stays valid.
  out.kraus = phi.kraus;
  out.orientation_a = phi.orientation_a;
  out.orientation_b = phi.orientation_b;
  return out;
}

QuantumMap precompose_transpose(const QuantumMap& phi) {
  QuantumMap out = map_from_transfer(CMat(phi.transfer * commutation_matrix(phi.d_a)),
                                     phi.d_a, phi.d_b);
  out.orientation_a = flip(phi.orientation_a);
  out.orientation_b = phi.orientation_b;
  return out;
}

CMat DecomposableMap::apply(const CMat& x) const {
  return choilab::apply(cp_part, x) + choilab::apply(co_cp_part, x.transpose());
}

QuantumMap DecomposableMap::total() const {
  return add(cp_part, precompose_transpose(co_cp_part));
}

static std::vector<CMat> ginibre_kraus(int d_a, int d_b, int rank, std::uint64_t seed) {
  std::vector<CMat> ks;
  ks.reserve(rank);
  for (int j = 0; j < rank; ++j) ks.push_back(ginibre(d_b, d_a, split_seed(seed, j)));
  return ks;
}

QuantumMap random_map(MapClass cls, int d_a, int d_b, std::uint64_t seed, int kraus_rank) {
  if (d_a < 1 || d_b < 1) throw dim_error("random_map: dimensions must be >= 1");
  const int rank = kraus_rank > 0 ? kraus_rank : d_a * d_b;

  switch (cls) {
    case MapClass::Arbitrary:
      return map_from_transfer(ginibre(d_b * d_b, d_a * d_a, split_seed(seed, 0)), d_a, d_b);

    case MapClass::HermPreserving: {
      // Real mixed-sign combination of x -> A_j x A_j*.
      Rng rng(split_seed(seed, 1000));
      CMat transfer = CMat::Zero(d_b * d_b, d_a * d_a);
      for (int j = 0; j < rank; ++j) {
        double c = rng.normal();
        if (j == 0) c = std::abs(c);
        if (j == 1) c = -std::abs(c);
        const CMat a = ginibre(d_b, d_a, split_seed(seed, j));
        transfer += c * kron(a.conjugate(), a);
      }
      return map_from_transfer(std::move(transfer), d_a, d_b);
    }

    case MapClass::CP:
      return map_from_kraus(ginibre_kraus(d_a, d_b, rank, seed));

    case MapClass::CoCP:
      return precompose_transpose(map_from_kraus(ginibre_kraus(d_a, d_b, rank, seed)));

    case MapClass::Decomposable:
      return random_decomposable(d_a, d_b, seed, kraus_rank).total();

    case MapClass::TracePreservingCP: {
      std::vector<CMat> ks = ginibre_kraus(d_a, d_b, rank, seed);
      CMat s = CMat::Zero(d_a, d_a);
      for (const CMat& k : ks) s += k.adjoint() * k;
      // s is PD for a generic Ginibre family; normalize to sum K*K = 1.
      HermEigen eig = hermitian_eigensystem(s);
      CVec inv_sqrt(eig.values.size());
      for (Eigen::Index i = 0; i < eig.values.size(); ++i)
        inv_sqrt(i) = 1.0 / std::sqrt(eig.values(i));
      const CMat s_inv_sqrt = eig.vectors * inv_sqrt.asDiagonal() * eig.vectors.adjoint();
      for (CMat& k : ks) k = CMat(k * s_inv_sqrt);
      return map_from_kraus(std::move(ks));
    }
  }
  throw precondition_error("random_map: unknown class");
}

DecomposableMap random_decomposable(int d_a, int d_b, std::uint64_t seed, int kraus_rank) {
  DecomposableMap m;
  m.cp_part = random_map(MapClass::CP, d_a, d_b, split_seed(seed, 101), kraus_rank);
  m.co_cp_part = random_map(MapClass::CP, d_a, d_b, split_seed(seed, 202), kraus_rank);
  return m;
}

}  // namespace choilab
