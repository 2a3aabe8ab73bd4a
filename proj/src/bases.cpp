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

#include "choilab/bases.hpp"

#include <cmath>

namespace choilab {

complexd hs_inner(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
    throw dim_error("hs_inner: arguments must be square with equal dims");
  return (b.adjoint() * a).trace();
}

OperatorBasis matrix_units(int d) {
  if (d < 1) throw dim_error("matrix_units: d must be >= 1");
  OperatorBasis basis;
  basis.dim = d;
  basis.kind = OperatorBasis::Kind::MatrixUnits;
  basis.elements.reserve(d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) basis.elements.push_back(matrix_unit(d, i, j));
  return basis;
}

OperatorBasis gell_mann(int d) {
  if (d < 1) throw dim_error("gell_mann: d must be >= 1");
  OperatorBasis basis;
  basis.dim = d;
  basis.kind = OperatorBasis::Kind::GellMann;
  basis.elements.reserve(d * d);

  basis.elements.push_back(CMat::Identity(d, d) / std::sqrt(double(d)));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      basis.elements.push_back(inv_sqrt2 * (matrix_unit(d, i, j) + matrix_unit(d, j, i)));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      basis.elements.push_back(complexd(0.0, inv_sqrt2) *
                               (matrix_unit(d, j, i) - matrix_unit(d, i, j)));
  // Diagonal traceless ladder: diag(1,...,1,-k,0,...)/sqrt(k(k+1)).
  for (int k = 1; k < d; ++k) {
    CMat e = CMat::Zero(d, d);
    for (int i = 0; i < k; ++i) e(i, i) = 1.0;
    e(k, k) = -double(k);
    basis.elements.push_back(e / std::sqrt(double(k) * (k + 1)));
  }
  return basis;
}

OperatorBasis rotated_basis(const OperatorBasis& base, const CMat& u) {
  const int n = base.size();
  if (u.rows() != n || u.cols() != n)
    throw dim_error("rotated_basis: u must be d^2 x d^2");
  const double dev = max_abs(CMat(u.adjoint() * u - CMat::Identity(n, n)));
  if (dev > 1e-8)
    throw precondition_error("rotated_basis: u not unitary (deviation " +
                             std::to_string(dev) + ")");
  OperatorBasis out;
  out.dim = base.dim;
  out.kind = OperatorBasis::Kind::Rotated;
  out.elements.reserve(n);
  for (int l = 0; l < n; ++l) {
    CMat f = CMat::Zero(base.dim, base.dim);
    for (int k = 0; k < n; ++k) f += u(k, l) * base.elements[k];
    out.elements.push_back(std::move(f));
  }
  return out;
}

CMat gram_matrix(const OperatorBasis& basis) {
  const int n = basis.size();
  CMat g(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) g(k, l) = hs_inner(basis.elements[k], basis.elements[l]);
  return g;
}

CVec coefficients(const OperatorBasis& basis, const CMat& a) {
  if (a.rows() != basis.dim || a.cols() != basis.dim)
    throw dim_error("coefficients: operand dimension mismatch");
  CVec c(basis.size());
  for (int k = 0; k < basis.size(); ++k) c(k) = hs_inner(a, basis.elements[k]);
  return c;
}

CMat reconstruct(const OperatorBasis& basis, const CVec& coeffs) {
  if (coeffs.size() != basis.size())
    throw dim_error("reconstruct: coefficient count mismatch");
  CMat a = CMat::Zero(basis.dim, basis.dim);
  for (int k = 0; k < basis.size(); ++k) a += coeffs(k) * basis.elements[k];
  return a;
}

}  // namespace choilab
