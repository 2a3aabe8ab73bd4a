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

#include "choilab/maps.hpp"

namespace choilab {

//==========================================================================
// Channel-state duality: the four transform variants
//==========================================================================
//
// J       rho = sum_k e_k* (x) phi(e_k)   basis-independent; Hermitian iff
//                                         phi preserves Hermiticity; POPT
//                                         iff phi is positive.
// C       rho = sum_ij E_ij (x) phi(E_ij) matrix-unit assembly; PSD iff phi
//                                         is completely positive.
// CJstar  the J-style pairing read against the order-reversed A algebra;
//         numerically the J matrix.
// JstarC  the C-style state carried by the dual space H_A*; numerically
//         the C matrix with the A factor flagged dual.
//
// Matrices always live in the standard (or dual-standard) product basis;
// the variant tag plus dual flags carry the remaining semantics. In that
// representation mat(C) = T_A(mat(J)), mat(CJstar) = mat(J) and
// mat(JstarC) = mat(C); state_from_inner_products rebuilds each variant
// from its defining pairing so these identifications are tested, not
// assumed.

enum class Variant { J, C, CJstar, JstarC };

struct DualityState {
  CMat matrix;  // side d_a * d_b
  BipartiteIndex idx;
  Variant variant = Variant::J;
  bool dual_a = false;
  bool dual_b = false;
};

/// Canonical dual flags of a variant: only JstarC reads factor A as a dual
/// space; dual_b is false for all four.
bool canonical_dual_a(Variant v);

/// Tags a matrix with a variant (and the variant's canonical flags).
DualityState make_state(CMat matrix, const BipartiteIndex& idx, Variant v);

/// rho = sum_k e_k* (x) phi(e_k). Independent of the basis argument.
DualityState j_forward(const QuantumMap& phi, const OperatorBasis& basis);
DualityState j_forward(const QuantumMap& phi);  // matrix-unit basis

/// J^-1(rho)(a) = tr_A[rho (a (x) 1_B)]. Requires variant J.
QuantumMap j_inverse(const DualityState& rho);

/// rho = sum_ij E_ij (x) phi(E_ij); equals T_A(j_forward(phi)) exactly.
DualityState choi_forward(const QuantumMap& phi);

/// C^-1(rho)(a) = tr_A[rho (a^T (x) 1_B)]. Requires variant C.
QuantumMap choi_inverse(const DualityState& rho);

/// Conversion ladder between the four variants. Trace-preserving,
/// involutive, and exact (partial transposition permutes entries).
DualityState to_variant(const DualityState& rho, Variant target);

/// Rebuilds the variant matrix from its defining inner-product pairing,
/// evaluated on the matrix-unit product basis. Agrees with the direct
/// constructions; this is the executable form of the variant ladder.
DualityState state_from_inner_products(const QuantumMap& phi, Variant v);

/// Kraus family recovered from the Choi eigendecomposition. Only defined
/// for completely positive maps; throws precondition_error when the Choi
/// matrix has an eigenvalue below -tol * max(1, ||choi||_2).
std::vector<CMat> kraus_factorization(const QuantumMap& phi, double tol = kPsdFloorTol);

const char* variant_name(Variant v);

}  // namespace choilab
