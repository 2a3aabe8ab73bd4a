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

#include <vector>

#include "choilab/linalg.hpp"

namespace choilab {

/// Hilbert-Schmidt inner product (a, b) = tr[b* a]. Linear in a,
/// antilinear in b.
complexd hs_inner(const CMat& a, const CMat& b);

/// A Hilbert-Schmidt-orthonormal family of d^2 operators spanning L(H).
struct OperatorBasis {
  enum class Kind { MatrixUnits, GellMann, Rotated };

  int dim = 0;
  Kind kind = Kind::MatrixUnits;
  std::vector<CMat> elements;  // d^2 matrices, each d x d

  int size() const { return static_cast<int>(elements.size()); }
};

/// The d^2 matrix units E_ij, enumerated row-major in (i, j).
OperatorBasis matrix_units(int d);

/// Hermitian orthonormal basis: I/sqrt(d), symmetric pairs
/// (E_ij + E_ji)/sqrt(2) for i < j, antisymmetric pairs
/// i(E_ji - E_ij)/sqrt(2) for i < j, then the diagonal traceless ladder.
OperatorBasis gell_mann(int d);

/// Rotation in coefficient space: f_l = sum_k u(k, l) e_k for a d^2 x d^2
/// unitary u. Preserves the Gram matrix; a generic complex u does NOT fix
/// Choi-style (conjugation-free) assemblies, only genuinely
/// basis-independent ones.
OperatorBasis rotated_basis(const OperatorBasis& base, const CMat& u);

/// Gram(e)_kl = tr[e_l* e_k]; identity for an orthonormal basis.
CMat gram_matrix(const OperatorBasis& basis);

/// Expansion coefficients (a, e_k) of a in the basis.
CVec coefficients(const OperatorBasis& basis, const CMat& a);

/// sum_k coeffs[k] e_k.
CMat reconstruct(const OperatorBasis& basis, const CVec& coeffs);

}  // namespace choilab
