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

#include "choilab/linalg.hpp"

namespace choilab {

/// The two associative products extending the anti-commutator on Hermitian
/// elements: Forward composes as a . b = ab, Reverse as a . b = ba.
enum class Orientation { Forward, Reverse };

inline Orientation flip(Orientation o) {
  return o == Orientation::Forward ? Orientation::Reverse : Orientation::Forward;
}

/// a o b = (ab + ba)/2. Commutative; closes on Hermitian elements.
CMat jordan_product(const CMat& a, const CMat& b);

/// a * b = (i/2)(ab - ba). Anti-commutative; also closes on Hermitian
/// elements (the commutator of Hermitians is skew, the i fixes that).
CMat star_product(const CMat& a, const CMat& b);

/// Forward: ab = (1/2){a,b} + (1/2)[a,b]; Reverse: ba.
CMat associative_product(const CMat& a, const CMat& b, Orientation o);

/// Unitary conjugation e^{ita} b e^{-ita} for Hermitian a, via spectral
/// calculus. Preserves trace, spectrum, positivity and Jordan products.
CMat evolve(double t, const CMat& a, const CMat& b);

/// e^{ita} for Hermitian a (spectral calculus).
CMat hermitian_phase_exp(double t, const CMat& a);

/// Order derivation d_a(x) = (ax + xa*)/2. For Hermitian a this is a o x;
/// for a = i h (h Hermitian) it is the skew part generating evolve:
/// evolve(t, h, .) = expm(2t d_{ih}) as superoperators.
CMat order_derivation(const CMat& a, const CMat& x);

/// Transfer matrix of x -> (ax + xa*)/2 in the column-stacking convention:
/// (I (x) a + conj(a) (x) I)/2.
CMat order_derivation_superop(const CMat& a);

/// Transfer matrix of b -> u b u^* (so of evolve when u = e^{ita}).
CMat conjugation_superop(const CMat& u);

}  // namespace choilab
