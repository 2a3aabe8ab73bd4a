// Shared fixtures for the unit suites.
#pragma once

#include <doctest.h>

#include "choilab/linalg.hpp"

namespace choilab::testing {

inline CMat pauli_x() {
  CMat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline CMat pauli_y() {
  CMat m(2, 2);
  m << complexd(0, 0), complexd(0, -1), complexd(0, 1), complexd(0, 0);
  return m;
}

inline CMat pauli_z() {
  CMat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

/// SWAP on C^d (x) C^d assembled from its definition sum_ij E_ij (x) E_ji.
inline CMat swap_matrix(int d) {
  const BipartiteIndex idx(d, d);
  CMat s = CMat::Zero(idx.side(), idx.side());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) s(idx.flat(i, j), idx.flat(j, i)) = 1.0;
  return s;
}

/// Unnormalized maximally entangled projector |Phi><Phi|, Phi = sum_i |ii>.
inline CMat max_entangled_projector(int d) {
  const BipartiteIndex idx(d, d);
  CVec phi = CVec::Zero(idx.side());
  for (int i = 0; i < d; ++i) phi(idx.flat(i, i)) = 1.0;
  return phi * phi.adjoint();
}

}  // namespace choilab::testing
