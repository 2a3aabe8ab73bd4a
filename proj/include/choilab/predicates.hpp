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

#include <optional>

#include "choilab/duality.hpp"

namespace choilab {

enum class Verdict { Holds, Fails, Inconclusive };

/// Outcome of a predicate check. witness_value is the decisive number:
/// the minimal eigenvalue (psd, cp, ppt), the minimal product-state
/// expectation (popt), or the negated max deviation (hermitian,
/// trace-preserving), so that Fails always means witness_value < -tol.
/// If witness vectors are present, re-evaluating them reproduces
/// witness_value within 1e-8.
struct PredicateReport {
  Verdict verdict = Verdict::Inconclusive;
  double witness_value = 0.0;
  std::optional<CVec> witness_x;
  std::optional<CVec> witness_y;
  double tol = 0.0;
  int restarts_used = 0;
};

/// See-saw search configuration. Block positivity is NP-hard in general:
/// a reported violation is sound (the witness certifies it); Holds means
/// no violation was found over the given restarts.
struct PoptConfig {
  int restarts = 24;
  int max_iters = 200;
  double convergence_eps = 1e-11;
  double tol_popt = 1e-8;
  std::uint64_t seed = 0;
};

/// ||m - m*||_max <= tol. witness_value = -deviation.
PredicateReport is_hermitian(const CMat& m, double tol = kHermTol);

/// Minimal eigenvalue >= -tol * max(1, ||m||_2); the floor scales with the
/// spectral norm since raw duality matrices grow with d_a. Requires a
/// Hermitian input (within tol of kHermTol... see implementation note).
PredicateReport is_psd(const CMat& m, double tol = kPsdFloorTol);

/// Block positivity (positivity on pure tensors) by alternating
/// eigenvector minimization of <x (x) y| rho |x (x) y> over the two
/// factors, best over seeded restarts.
PredicateReport is_popt(const DualityState& rho, const PoptConfig& cfg = {});

/// Complete positivity: the Choi matrix is PSD. A map with non-Hermitian
/// Choi matrix fails outright (it cannot be CP).
PredicateReport is_cp(const QuantumMap& phi, double tol = kPsdFloorTol);

/// Complete co-positivity: phi o T is CP, equivalently T_A(Choi) is PSD.
PredicateReport is_co_cp(const QuantumMap& phi, double tol = kPsdFloorTol);

/// ||tr_B[J(phi)] - 1_A||_max <= tol. witness_value = -deviation.
PredicateReport is_trace_preserving(const QuantumMap& phi, double tol = 1e-9);

/// Peres criterion: T_A(rho) PSD for a PSD input rho.
PredicateReport is_ppt_state(const CMat& rho, const BipartiteIndex& idx,
                             double tol = kPsdFloorTol);

/// <x (x) y| rho |x (x) y>; re-evaluation hook for POPT witnesses.
double product_expectation(const CMat& rho, const BipartiteIndex& idx, const CVec& x,
                           const CVec& y);

const char* verdict_name(Verdict v);

}  // namespace choilab
