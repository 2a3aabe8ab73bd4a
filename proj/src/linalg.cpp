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

#include "choilab/linalg.hpp"

#include <cmath>

namespace choilab {

bool all_finite(const CMat& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

CMat matrix_unit(int d, int i, int j) {
  if (d < 1 || i < 0 || j < 0 || i >= d || j >= d)
    throw dim_error("matrix_unit: index out of range");
  CMat e = CMat::Zero(d, d);
  e(i, j) = 1.0;
  return e;
}

CMat kron(const CMat& x, const CMat& y) {
  CMat out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    for (Eigen::Index j = 0; j < x.cols(); ++j)
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
  return out;
}

static void check_bipartite(const CMat& rho, const BipartiteIndex& idx, const char* who) {
  if (rho.rows() != rho.cols() || rho.rows() != idx.side())
    throw dim_error(std::string(who) + ": matrix side does not match d_a * d_b");
}

CMat partial_trace(const CMat& rho, const BipartiteIndex& idx, Factor traced_out) {
  check_bipartite(rho, idx, "partial_trace");
  if (traced_out == Factor::B) {
    CMat out = CMat::Zero(idx.d_a, idx.d_a);
    for (int i = 0; i < idx.d_a; ++i)
      for (int j = 0; j < idx.d_a; ++j)
        for (int k = 0; k < idx.d_b; ++k) out(i, j) += rho(idx.flat(i, k), idx.flat(j, k));
    return out;
  }
  CMat out = CMat::Zero(idx.d_b, idx.d_b);
  for (int k = 0; k < idx.d_b; ++k)
    for (int l = 0; l < idx.d_b; ++l)
      for (int i = 0; i < idx.d_a; ++i) out(k, l) += rho(idx.flat(i, k), idx.flat(i, l));
  return out;
}

CMat partial_transpose(const CMat& rho, const BipartiteIndex& idx, Factor factor) {
  check_bipartite(rho, idx, "partial_transpose");
  CMat out(idx.side(), idx.side());
  for (int i = 0; i < idx.d_a; ++i)
    for (int j = 0; j < idx.d_a; ++j)
      for (int k = 0; k < idx.d_b; ++k)
        for (int l = 0; l < idx.d_b; ++l) {
          if (factor == Factor::A)
            out(idx.flat(i, k), idx.flat(j, l)) = rho(idx.flat(j, k), idx.flat(i, l));
          else
            out(idx.flat(i, k), idx.flat(j, l)) = rho(idx.flat(i, l), idx.flat(j, k));
        }
  return out;
}

CVec vec(const CMat& x) {
  CVec v(x.size());
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    for (Eigen::Index i = 0; i < x.rows(); ++i) v(j * x.rows() + i) = x(i, j);
  return v;
}

CMat unvec(const CVec& v, int rows, int cols) {
  if (v.size() != Eigen::Index(rows) * cols) throw dim_error("unvec: size mismatch");
  CMat x(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) x(i, j) = v(j * rows + i);
  return x;
}

CMat commutation_matrix(int d) {
  CMat k = CMat::Zero(d * d, d * d);
  // vec(E_ij) sits at j*d + i; vec(E_ij^T) at i*d + j.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) k(i * d + j, j * d + i) = 1.0;
  return k;
}

static void check_hermitian(const CMat& m, double tol, const char* who) {
  if (m.rows() != m.cols()) throw dim_error(std::string(who) + ": matrix not square");
  const double dev = herm_deviation(m);
  if (dev > tol)
    throw precondition_error(std::string(who) + ": input not Hermitian (deviation " +
                             std::to_string(dev) + " > tol)");
}

std::vector<double> hermitian_eigenvalues(const CMat& m, double tol) {
  check_hermitian(m, tol, "hermitian_eigenvalues");
  Eigen::SelfAdjointEigenSolver<CMat> es(CMat(0.5 * (m + m.adjoint())),
                                         Eigen::EigenvaluesOnly);
  const RVec& v = es.eigenvalues();
  return std::vector<double>(v.data(), v.data() + v.size());
}

HermEigen hermitian_eigensystem(const CMat& m, double tol) {
  check_hermitian(m, tol, "hermitian_eigensystem");
  Eigen::SelfAdjointEigenSolver<CMat> es(CMat(0.5 * (m + m.adjoint())));
  return HermEigen{es.eigenvalues(), es.eigenvectors()};
}

double spectral_norm_hermitian(const CMat& m, double tol) {
  auto ev = hermitian_eigenvalues(m, tol);
  double n = 0.0;
  for (double x : ev) n = std::max(n, std::abs(x));
  return n;
}

CMat expm(const CMat& m) {
  if (m.rows() != m.cols()) throw dim_error("expm: matrix not square");
  const Eigen::Index n = m.rows();
  double norm = 0.0;  // infinity norm
  for (Eigen::Index i = 0; i < n; ++i) norm = std::max(norm, m.row(i).cwiseAbs().sum());
  int s = 0;
  if (norm > 0.5) s = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const CMat a = m / std::pow(2.0, s);

  CMat term = CMat::Identity(n, n);
  CMat sum = term;
  for (int k = 1; k <= 64; ++k) {
    term = CMat(term * a) / static_cast<double>(k);
    sum += term;
    if (max_abs(term) <= 1e-15 * std::max(1.0, max_abs(sum))) break;
  }
  for (int i = 0; i < s; ++i) sum = CMat(sum * sum);
  return sum;
}

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 of the seed advanced by (stream + 1) golden-ratio increments.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

complexd Rng::complex_normal() {
  const double re = normal_(gen_);
  const double im = normal_(gen_);
  return complexd(re, im) / std::sqrt(2.0);
}

CMat ginibre(int rows, int cols, std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw dim_error("ginibre: dimensions must be >= 1");
  Rng rng(seed);
  CMat g(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = rng.complex_normal();
  return g;
}

CMat hermitian_ginibre(int d, std::uint64_t seed) {
  CMat g = ginibre(d, d, seed);
  return 0.5 * (g + g.adjoint());
}

CMat haar_unitary(int d, std::uint64_t seed) {
  CMat z = ginibre(d, d, seed);
  Eigen::HouseholderQR<CMat> qr(z);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const complexd rjj = r(j, j);
    const double a = std::abs(rjj);
    q.col(j) *= (a > 0.0) ? rjj / a : complexd(1.0, 0.0);
  }
  return q;
}

CVec random_unit_vector(int d, std::uint64_t seed) {
  Rng rng(seed);
  CVec v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.complex_normal();
  const double n = v.norm();
  if (n == 0.0) return CVec::Unit(d, 0);
  return v / n;
}

}  // namespace choilab
