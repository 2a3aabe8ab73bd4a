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

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "choilab/errors.hpp"

namespace choilab {

using complexd = std::complex<double>;
using CMat = Eigen::MatrixXcd;  // dense complex matrix, the universal carrier
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;

// Default tolerances. Matrix equality is always max-abs entry difference.
inline constexpr double kMatEqTol = 1e-10;
inline constexpr double kHermTol = 1e-10;
inline constexpr double kPsdFloorTol = 1e-9;

//==========================================================================
// Bipartite indexing
//==========================================================================

/// Composite index over H_A (x) H_B, A-major: (i, k) -> i * d_b + k.
/// All bipartite matrices in this library use this flattening, with A as
/// the left Kronecker factor.
struct BipartiteIndex {
  int d_a;
  int d_b;

  BipartiteIndex(int a, int b) : d_a(a), d_b(b) {
    if (a < 1 || b < 1) throw dim_error("BipartiteIndex: dimensions must be >= 1");
  }

  int side() const { return d_a * d_b; }
  int flat(int i, int k) const { return i * d_b + k; }
};

enum class Factor { A, B };

//==========================================================================
// Elementwise and structural helpers
//==========================================================================

inline double max_abs(const CMat& x) {
  return x.size() == 0 ? 0.0 : x.cwiseAbs().maxCoeff();
}

inline double max_abs_diff(const CMat& x, const CMat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols())
    throw dim_error("max_abs_diff: shape mismatch");
  return max_abs(x - y);
}

inline bool approx_equal(const CMat& x, const CMat& y, double tol = kMatEqTol) {
  return max_abs_diff(x, y) <= tol;
}

/// ||m - m*||_max, the Hermiticity deviation.
inline double herm_deviation(const CMat& m) {
  if (m.rows() != m.cols()) throw dim_error("herm_deviation: matrix not square");
  return max_abs(CMat(m - m.adjoint()));
}

bool all_finite(const CMat& m);

/// d x d matrix unit E_ij (single 1 at (i, j)).
CMat matrix_unit(int d, int i, int j);

//==========================================================================
// Tensor-product manipulations
//==========================================================================

/// Kronecker product: (x (x) y)[(i,k),(j,l)] = x(i,j) * y(k,l) under the
/// A-major composite index.
CMat kron(const CMat& x, const CMat& y);

/// Trace out one factor. partial_trace(x (x) y, idx, B) = x * tr(y) and
/// partial_trace(x (x) y, idx, A) = tr(x) * y, extended linearly.
CMat partial_trace(const CMat& rho, const BipartiteIndex& idx, Factor traced_out);

/// Transpose one factor. For factor A: out[(i,k),(j,l)] = rho[(j,k),(i,l)].
/// An exact entry permutation: involutive, trace- and Hermiticity-preserving.
CMat partial_transpose(const CMat& rho, const BipartiteIndex& idx, Factor factor);

//==========================================================================
// vec / unvec (column stacking)
//==========================================================================
//
// vec(X)[j * rows + i] = X(i, j), so vec(A X B) = (B^T (x) A) vec(X).
// Every transfer matrix in the library uses this convention.

CVec vec(const CMat& x);
CMat unvec(const CVec& v, int rows, int cols);

/// Commutation matrix K with K vec(X) = vec(X^T) for d x d matrices.
CMat commutation_matrix(int d);

//==========================================================================
// Hermitian spectra
//==========================================================================

struct HermEigen {
  RVec values;   // ascending
  CMat vectors;  // columns, matching order
};

/// Eigenvalues of a Hermitian matrix (ascending). The input must satisfy
/// ||m - m*||_max <= tol; the decomposition runs on (m + m*)/2.
std::vector<double> hermitian_eigenvalues(const CMat& m, double tol = kHermTol);

/// Full eigensystem, same contract as hermitian_eigenvalues.
HermEigen hermitian_eigensystem(const CMat& m, double tol = kHermTol);

/// Largest |eigenvalue| of a Hermitian matrix; used to scale PSD floors.
double spectral_norm_hermitian(const CMat& m, double tol = kHermTol);

/// Matrix exponential by scaling-and-squaring with a 1e-12 series target.
CMat expm(const CMat& m);

//==========================================================================
// Seeded randomness
//==========================================================================
//
// One 64-bit master seed; per-object seeds derive via split_seed(seed, k),
// a splitmix64 hash of the (seed, stream) pair. Serial and parallel runs
// that draw the same streams therefore see identical values.

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double normal() { return normal_(gen_); }
  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }
  /// Standard complex Gaussian: (N(0,1) + i N(0,1)) / sqrt(2).
  complexd complex_normal();

 private:
  std::mt19937_64 gen_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Matrix with iid standard complex Gaussian entries.
CMat ginibre(int rows, int cols, std::uint64_t seed);

/// (G + G*)/2 for Ginibre G.
CMat hermitian_ginibre(int d, std::uint64_t seed);

/// Haar-distributed unitary: QR of a complex Ginibre matrix with the R
/// diagonal phases folded into Q. Deterministic per seed.
CMat haar_unitary(int d, std::uint64_t seed);

/// Random unit vector (normalized complex Gaussian).
CVec random_unit_vector(int d, std::uint64_t seed);

}  // namespace choilab
