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

#include "choilab/jordan.hpp"

namespace choilab {

static void check_same_square(const CMat& a, const CMat& b, const char* who) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw dim_error(std::string(who) + ": arguments must be square with equal dims");
}

CMat jordan_product(const CMat& a, const CMat& b) {
  check_same_square(a, b, "jordan_product");
  return 0.5 * (a * b + b * a);
}

CMat star_product(const CMat& a, const CMat& b) {
  check_same_square(a, b, "star_product");
  return complexd(0.0, 0.5) * (a * b - b * a);
}

CMat associative_product(const CMat& a, const CMat& b, Orientation o) {
  check_same_square(a, b, "associative_product");
  return o == Orientation::Forward ? CMat(a * b) : CMat(b * a);
}

CMat hermitian_phase_exp(double t, const CMat& a) {
  HermEigen eig = hermitian_eigensystem(a);
  CVec phases(eig.values.size());
  for (Eigen::Index k = 0; k < eig.values.size(); ++k)
    phases(k) = std::polar(1.0, t * eig.values(k));
  return eig.vectors * phases.asDiagonal() * eig.vectors.adjoint();
}

CMat evolve(double t, const CMat& a, const CMat& b) {
  check_same_square(a, b, "evolve");
  const CMat u = hermitian_phase_exp(t, a);  // throws if a is not Hermitian
  return u * b * u.adjoint();
}

CMat order_derivation(const CMat& a, const CMat& x) {
  check_same_square(a, x, "order_derivation");
  return 0.5 * (a * x + x * a.adjoint());
}

CMat order_derivation_superop(const CMat& a) {
  if (a.rows() != a.cols()) throw dim_error("order_derivation_superop: matrix not square");
  const Eigen::Index d = a.rows();
  const CMat id = CMat::Identity(d, d);
  return 0.5 * (kron(id, a) + kron(a.conjugate(), id));
}

CMat conjugation_superop(const CMat& u) {
  if (u.rows() != u.cols()) throw dim_error("conjugation_superop: matrix not square");
  return kron(u.conjugate(), u);
}

}  // namespace choilab
