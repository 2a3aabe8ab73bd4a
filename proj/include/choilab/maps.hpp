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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "choilab/bases.hpp"
#include "choilab/jordan.hpp"
#include "choilab/linalg.hpp"

namespace choilab {

//==========================================================================
// QuantumMap
//==========================================================================

/// A linear map phi: L(H_A) -> L(H_B), stored as its transfer matrix acting
/// on column-stacked operators, vec(phi(x)) = transfer * vec(x), plus
/// optional Kraus data. With column stacking, a Kraus family {K_k} has
/// transfer = sum_k conj(K_k) (x) K_k.
///
/// The orientation tags record which factor algebras the map is read
/// against (forward = standard composition order, reverse = opposite);
/// they are bookkeeping for the duality variants and file formats and do
/// not change the numeric action.
struct QuantumMap {
  int d_a = 0;
  int d_b = 0;
  CMat transfer;                           // (d_b^2) x (d_a^2)
  std::optional<std::vector<CMat>> kraus;  // each d_b x d_a
  Orientation orientation_a = Orientation::Forward;
  Orientation orientation_b = Orientation::Forward;
};

QuantumMap map_from_transfer(CMat transfer, int d_a, int d_b);

/// Linear extension from images on an orthonormal basis: phi(e_k) = images[k].
QuantumMap map_from_basis_action(const std::vector<CMat>& images,
                                 const OperatorBasis& basis);

/// phi(x) = sum_k K_k x K_k*; completely positive by construction.
QuantumMap map_from_kraus(std::vector<CMat> kraus);

/// phi(a) = v* (a (x) 1_r) v for v: H_B -> H_A (x) C^r (shape (d_a r) x d_b).
/// Equals the Kraus map with K_i the adjoint of the rows of v at multiplicity
/// index i, i = 0..r-1.
QuantumMap map_from_stinespring(const CMat& v, int d_a, int r);

QuantumMap identity_map(int d);
QuantumMap transpose_map(int d);

CMat apply(const QuantumMap& phi, const CMat& x);

/// psi after phi. Kraus data composes when both operands carry it.
QuantumMap compose(const QuantumMap& psi, const QuantumMap& phi);

QuantumMap scaled(const QuantumMap& phi, double factor);

/// Sum of two maps with equal signatures (convex combinations of positive
/// maps stay positive).
QuantumMap add(const QuantumMap& phi, const QuantumMap& psi);

/// phi#(a) = (phi(a*))*, the linear conjugate. phi# = phi exactly when phi
/// is Hermiticity-preserving; an involution on all maps.
QuantumMap conjugate_map(const QuantumMap& phi);

/// phi o T, transposition taken in the standard basis. Involutive.
QuantumMap precompose_transpose(const QuantumMap& phi);

//==========================================================================
// Decomposable maps
//==========================================================================

/// A CP plus co-CP pair: total action x -> cp_part(x) + co_cp_part(x^T).
/// Both parts are CP by construction; the total is decomposable.
struct DecomposableMap {
  QuantumMap cp_part;
  QuantumMap co_cp_part;

  CMat apply(const CMat& x) const;
  QuantumMap total() const;
};

//==========================================================================
// Random map generators (deterministic per seed)
//==========================================================================

enum class MapClass {
  Arbitrary,          // Ginibre transfer matrix
  HermPreserving,     // sum_j c_j A_j x A_j* with real mixed-sign c_j
  CP,                 // Ginibre Kraus family
  CoCP,               // CP precomposed with transposition
  Decomposable,       // CP + co-CP pair (total map)
  TracePreservingCP,  // Kraus family normalized to sum K*K = 1
};

/// kraus_rank 0 means the generic full rank d_a * d_b.
QuantumMap random_map(MapClass cls, int d_a, int d_b, std::uint64_t seed,
                      int kraus_rank = 0);

DecomposableMap random_decomposable(int d_a, int d_b, std::uint64_t seed,
                                    int kraus_rank = 0);

}  // namespace choilab
