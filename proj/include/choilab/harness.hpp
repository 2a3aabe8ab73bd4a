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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "choilab/predicates.hpp"

namespace choilab {

//==========================================================================
// Seeded verification suites
//==========================================================================
//
// Each suite draws maps or states of prescribed classes and asserts one
// duality statement in both directions, with built-in negative controls so
// a suite cannot pass vacuously. Every suite is deterministic under
// (dims, trials, seed); failures are recorded as reproducible
// counterexamples, not thrown.

enum class SuiteId {
  DePillis,            // Hermiticity preservation <-> Hermitian J matrix
  Jamiolkowski_a,      // positivity <-> block positivity of the J matrix
  Jamiolkowski_b,      // trace preservation <-> tr_B J = 1_A
  Choi,                // complete positivity <-> PSD Choi matrix
  ChoiReformulated,    // the adjoint-twisted J assembly equals the Choi matrix
  Lemma1_T,            // CP of phi <-> co-CP of phi o T
  BasisIndependenceJ,  // J agrees across operator bases
  BasisDependenceC,    // Choi-style assembly moves under a generic rotation
  VariantLadder,       // conversion ladder + pairing reconstructions
  JordanStructure,     // product decomposition, Jordan identity, closures
  TimeOrientation,     // evolution vs commutator and order derivations
};

struct TheoremSuite {
  SuiteId id = SuiteId::Choi;
  std::vector<std::pair<int, int>> dims = {{2, 2}};
  int trials = 100;
  std::uint64_t seed = 0;
  double tol = kMatEqTol;
  // Test hook: substitutes a Ginibre map where trial 0 requests a
  // structured class, so the suite must report failures.
  bool inject_corruption = false;
};

struct Counterexample {
  std::uint64_t seed = 0;    // per-trial derived seed
  std::string check;         // which assertion failed
  double witness = 0.0;      // measured value behind the failure
};

struct SuiteResult {
  SuiteId id = SuiteId::Choi;
  int passed = 0;
  int failed = 0;
  std::vector<Counterexample> counterexamples;
  double wallclock_s = 0.0;
};

SuiteResult run_suite(const TheoremSuite& suite);

std::vector<SuiteId> all_suites();
std::string suite_name(SuiteId id);
std::optional<SuiteId> suite_from_name(std::string_view name);

}  // namespace choilab
