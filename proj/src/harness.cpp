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

#include "choilab/harness.hpp"

#include <chrono>
#include <cmath>

namespace choilab {

namespace {

struct TrialRecorder {
  std::uint64_t trial_seed = 0;
  bool ok = true;
  std::vector<Counterexample>* sink = nullptr;

  void expect(bool cond, const char* check, double witness) {
    if (cond) return;
    ok = false;
    sink->push_back(Counterexample{trial_seed, check, witness});
  }
  void expect_le(double value, double bound, const char* check) {
    expect(value <= bound, check, value);
  }
};

// Certified positive-but-not-CP map x -> V x^T V*. For d_b >= d_a the slice
// V of a Haar unitary is an isometry and the Choi spectrum contains -1
// exactly; otherwise the compression keeps a negative direction generically.
QuantumMap transpose_isometry_map(int d_a, int d_b, std::uint64_t seed) {
  const CMat u = haar_unitary(std::max(d_a, d_b), seed);
  const CMat v = u.block(0, 0, d_b, d_a);
  return compose(map_from_kraus({v}), transpose_map(d_a));
}

// Hermitian matrix with a known block-positivity violation of exactly -c:
// |psi><psi| - c*1 for psi = sum_{i<min(d_a,d_b)} |ii>.
CMat shifted_entangled_projector(const BipartiteIndex& idx, double c) {
  CVec psi = CVec::Zero(idx.side());
  for (int i = 0; i < std::min(idx.d_a, idx.d_b); ++i) psi(idx.flat(i, i)) = 1.0;
  return CMat(psi * psi.adjoint()) - c * CMat::Identity(idx.side(), idx.side());
}

double tolerance_scale(const CMat& m) { return std::max(1.0, max_abs(m)); }

//--------------------------------------------------------------------------
// Per-suite trials
//--------------------------------------------------------------------------

void trial_de_pillis(int d_a, int d_b, std::uint64_t s, double tol, TrialRecorder& rec,
                     bool corrupt) {
  const MapClass cls = corrupt ? MapClass::Arbitrary : MapClass::HermPreserving;
  const QuantumMap hp = random_map(cls, d_a, d_b, split_seed(s, 0));
  rec.expect_le(max_abs_diff(conjugate_map(hp).transfer, hp.transfer),
                tol * tolerance_scale(hp.transfer), "herm_preserving.fixed_point");
  const PredicateReport fwd = is_hermitian(j_forward(hp).matrix);
  rec.expect(fwd.verdict == Verdict::Holds, "herm_preserving.j_hermitian",
             fwd.witness_value);

  const QuantumMap arb = random_map(MapClass::Arbitrary, d_a, d_b, split_seed(s, 1));
  const double self_dev = max_abs_diff(conjugate_map(arb).transfer, arb.transfer);
  rec.expect(self_dev > 1e-6, "negative_control.conjugate_distinct", self_dev);
  const PredicateReport bwd = is_hermitian(j_forward(arb).matrix);
  rec.expect(bwd.verdict == Verdict::Fails, "negative_control.j_not_hermitian",
             bwd.witness_value);
}

void trial_jamiolkowski_a(int d_a, int d_b, std::uint64_t s, int trial, TrialRecorder& rec,
                          bool corrupt) {
  // Forward direction over positive-by-construction classes.
  QuantumMap pos;
  const char* check = "positive.popt_holds";
  if (corrupt) {
    pos = random_map(MapClass::HermPreserving, d_a, d_b, split_seed(s, 0));
  } else {
    switch (trial % 3) {
      case 0: pos = random_map(MapClass::CP, d_a, d_b, split_seed(s, 0)); break;
      case 1: pos = random_map(MapClass::CoCP, d_a, d_b, split_seed(s, 0)); break;
      default: {
        Rng rng(split_seed(s, 1));
        const double lambda = rng.uniform(0.1, 0.9);
        pos = add(scaled(random_map(MapClass::CP, d_a, d_b, split_seed(s, 2)), lambda),
                  scaled(random_map(MapClass::CoCP, d_a, d_b, split_seed(s, 3)),
                         1.0 - lambda));
      }
    }
  }
  const DualityState j = j_forward(pos);
  PoptConfig cfg;
  cfg.seed = split_seed(s, 10);
  const PredicateReport rep = is_popt(j, cfg);
  rec.expect(rep.verdict == Verdict::Holds, check, rep.witness_value);

  // Quantifier form: non-negative pairing against random PSD pairs.
  if (rep.verdict == Verdict::Holds) {
    const CMat ga = ginibre(d_a, d_a, split_seed(s, 11));
    const CMat gb = ginibre(d_b, d_b, split_seed(s, 12));
    const CMat a = ga * ga.adjoint();
    const CMat b = gb * gb.adjoint();
    const double pairing = (j.matrix * kron(a, b)).trace().real();
    rec.expect(pairing >= -1e-6 * a.trace().real() * b.trace().real() *
                              tolerance_scale(j.matrix),
               "positive.psd_pair_nonnegative", pairing);
  }

  // Known violating instance: best value -0.6, witness must reproduce and
  // translate into a negative expectation of the inverse map on a pure state.
  const BipartiteIndex idx(d_a, d_b);
  const DualityState bad = make_state(shifted_entangled_projector(idx, 0.6), idx,
                                      Variant::J);
  PoptConfig cfg2;
  cfg2.seed = split_seed(s, 20);
  const PredicateReport vio = is_popt(bad, cfg2);
  rec.expect(vio.verdict == Verdict::Fails, "violation.detected", vio.witness_value);
  rec.expect_le(vio.witness_value, -0.6 + 1e-6, "violation.depth");
  if (vio.witness_x && vio.witness_y) {
    const double re_eval = product_expectation(bad.matrix, idx, *vio.witness_x,
                                               *vio.witness_y);
    rec.expect(std::abs(re_eval - vio.witness_value) <= 1e-8, "violation.reproduces",
               re_eval);
    const QuantumMap neg_map = j_inverse(bad);
    const CMat pure = CMat(*vio.witness_x * vio.witness_x->adjoint());
    const complexd exp_val =
        (vio.witness_y->adjoint() * apply(neg_map, pure) * (*vio.witness_y))(0, 0);
    rec.expect(std::abs(exp_val.real() - vio.witness_value) <= 1e-7 &&
                   exp_val.real() < 0.0,
               "violation.map_expectation", exp_val.real());
  }

  // Randomized probe: any violation found on a Hermiticity-preserving map
  // must be reproducible from its witness pair.
  const QuantumMap probe = random_map(MapClass::HermPreserving, d_a, d_b,
                                      split_seed(s, 30));
  PoptConfig cfg3;
  cfg3.seed = split_seed(s, 31);
  const DualityState jp = j_forward(probe);
  const PredicateReport prep = is_popt(jp, cfg3);
  if (prep.verdict == Verdict::Fails && prep.witness_x && prep.witness_y) {
    const double re_eval = product_expectation(jp.matrix, idx, *prep.witness_x,
                                               *prep.witness_y);
    rec.expect(std::abs(re_eval - prep.witness_value) <= 1e-8, "probe.reproduces",
               re_eval);
  }
}

void trial_jamiolkowski_b(int d_a, int d_b, std::uint64_t s, TrialRecorder& rec,
                          bool corrupt) {
  const MapClass cls = corrupt ? MapClass::Arbitrary : MapClass::TracePreservingCP;
  const QuantumMap tp = random_map(cls, d_a, d_b, split_seed(s, 0));
  const PredicateReport rep = is_trace_preserving(tp);
  rec.expect(rep.verdict == Verdict::Holds, "tp.marginal_identity", rep.witness_value);

  const CMat x = ginibre(d_a, d_a, split_seed(s, 1));
  const complexd t_in = x.trace();
  const complexd t_out = apply(tp, x).trace();
  rec.expect_le(std::abs(t_out - t_in), 1e-9 * std::max(1.0, std::abs(t_in)),
                "tp.trace_cross_check");

  const PredicateReport neg = is_trace_preserving(scaled(tp, 2.0));
  rec.expect(neg.verdict == Verdict::Fails, "negative_control.scaled_fails",
             neg.witness_value);
}

void trial_choi(int d_a, int d_b, std::uint64_t s, double tol, TrialRecorder& rec,
                bool corrupt) {
  const MapClass cls = corrupt ? MapClass::Arbitrary : MapClass::CP;
  const QuantumMap cp = random_map(cls, d_a, d_b, split_seed(s, 0));
  const PredicateReport fwd = is_cp(cp);
  rec.expect(fwd.verdict == Verdict::Holds, "cp.choi_psd", fwd.witness_value);

  // Reverse direction: a PSD matrix tagged C inverts to a CP map,
  // and the round trip restores the matrix.
  const BipartiteIndex idx(d_a, d_b);
  const CMat g = ginibre(idx.side(), idx.side(), split_seed(s, 1));
  const CMat rho = g * g.adjoint();
  const QuantumMap back = choi_inverse(make_state(rho, idx, Variant::C));
  const PredicateReport bwd = is_cp(back);
  rec.expect(bwd.verdict == Verdict::Holds, "psd.inverse_is_cp", bwd.witness_value);
  rec.expect_le(max_abs_diff(choi_forward(back).matrix, rho),
                tol * tolerance_scale(rho), "psd.round_trip");

  // Negative control: a positive map that is not completely positive.
  const QuantumMap neg = transpose_isometry_map(d_a, d_b, split_seed(s, 2));
  const PredicateReport nrep = is_cp(neg);
  rec.expect(nrep.verdict == Verdict::Fails, "negative_control.not_cp",
             nrep.witness_value);
  if (d_b >= d_a)
    rec.expect(std::abs(nrep.witness_value + 1.0) <= 1e-8,
               "negative_control.witness_minus_one", nrep.witness_value);
  PoptConfig cfg;
  cfg.seed = split_seed(s, 3);
  const PredicateReport prep = is_popt(j_forward(neg), cfg);
  rec.expect(prep.verdict == Verdict::Holds, "negative_control.still_positive",
             prep.witness_value);
}

void trial_choi_reformulated(int d_a, int d_b, std::uint64_t s, TrialRecorder& rec,
                             bool corrupt) {
  const auto twisted = [](const QuantumMap& phi) {
    // sum_k e_k* (x) phi(e_k*) over matrix units.
    CMat m = CMat::Zero(phi.d_a * phi.d_b, phi.d_a * phi.d_b);
    for (int i = 0; i < phi.d_a; ++i)
      for (int j = 0; j < phi.d_a; ++j) {
        const CMat u = matrix_unit(phi.d_a, j, i);  // adjoint of E_ij
        m += kron(u, apply(phi, u));
      }
    return m;
  };
  const auto psd_verdict = [](const CMat& m) {
    return herm_deviation(m) > kHermTol ? Verdict::Fails : is_psd(m).verdict;
  };

  const MapClass cls = corrupt ? MapClass::Arbitrary : MapClass::CP;
  const QuantumMap cp = random_map(cls, d_a, d_b, split_seed(s, 0));
  const CMat m_cp = twisted(cp);
  rec.expect_le(max_abs_diff(m_cp, choi_forward(cp).matrix), 1e-12,
                "identity.twisted_equals_choi");
  rec.expect(is_cp(cp).verdict == Verdict::Holds, "cp.psd", 0.0);
  rec.expect(psd_verdict(m_cp) == is_cp(cp).verdict, "equivalence.cp", 0.0);

  const QuantumMap hp = random_map(MapClass::HermPreserving, d_a, d_b, split_seed(s, 1));
  rec.expect_le(max_abs_diff(twisted(hp), choi_forward(hp).matrix), 1e-12,
                "identity.herm_preserving");
  rec.expect(psd_verdict(twisted(hp)) == is_cp(hp).verdict, "equivalence.herm", 0.0);

  const QuantumMap neg = transpose_isometry_map(d_a, d_b, split_seed(s, 2));
  rec.expect_le(max_abs_diff(twisted(neg), choi_forward(neg).matrix), 1e-12,
                "identity.negative_control");
  rec.expect(is_cp(neg).verdict == Verdict::Fails, "negative_control.not_cp", 0.0);
  rec.expect(psd_verdict(twisted(neg)) == Verdict::Fails, "negative_control.psd_fails",
             0.0);
}

void trial_lemma1_t(int d_a, int d_b, std::uint64_t s, TrialRecorder& rec, bool corrupt) {
  const auto both_sides = [&rec](const QuantumMap& phi, const char* label) {
    const PredicateReport lhs = is_cp(phi);
    const PredicateReport rhs = is_co_cp(precompose_transpose(phi));
    rec.expect(lhs.verdict == rhs.verdict, label, lhs.witness_value);
    rec.expect_le(std::abs(lhs.witness_value - rhs.witness_value), 1e-12,
                  "biconditional.witness_equal");
    return lhs.verdict;
  };

  const MapClass cls = corrupt ? MapClass::Arbitrary : MapClass::CP;
  const Verdict v_cp = both_sides(random_map(cls, d_a, d_b, split_seed(s, 0)),
                                  "biconditional.cp_class");
  rec.expect(v_cp == Verdict::Holds, "cp.holds_both", 0.0);

  both_sides(random_map(MapClass::CoCP, d_a, d_b, split_seed(s, 1)),
             "biconditional.cocp_class");
  both_sides(random_map(MapClass::HermPreserving, d_a, d_b, split_seed(s, 2)),
             "biconditional.herm_class");

  const Verdict v_neg = both_sides(transpose_isometry_map(d_a, d_b, split_seed(s, 3)),
                                   "biconditional.negative_control");
  rec.expect(v_neg == Verdict::Fails, "negative_control.fails_both", 0.0);
}

void trial_basis_independence_j(int d_a, int d_b, std::uint64_t s, int trial, double tol,
                                TrialRecorder& rec, bool corrupt) {
  const MapClass cls = trial % 2 == 0 ? MapClass::CP : MapClass::Arbitrary;
  const QuantumMap phi = random_map(cls, d_a, d_b, split_seed(s, 0));
  const CMat ref = j_forward(phi).matrix;
  const double scale = tolerance_scale(ref);

  rec.expect_le(max_abs_diff(j_forward(phi, gell_mann(d_a)).matrix, ref), tol * scale,
                "gell_mann.agrees");
  const OperatorBasis units = matrix_units(d_a);
  for (int r = 0; r < 5; ++r) {
    const OperatorBasis rb =
        rotated_basis(units, haar_unitary(d_a * d_a, split_seed(s, 20 + r)));
    if (corrupt && r == 0) {
      // Corrupted assembly: conjugation-free sum, which is basis-dependent.
      CMat broken = CMat::Zero(ref.rows(), ref.cols());
      for (const CMat& f : rb.elements) broken += kron(f, apply(phi, f));
      rec.expect_le(max_abs_diff(broken, ref), tol * scale, "rotated.agrees");
      continue;
    }
    rec.expect_le(max_abs_diff(j_forward(phi, rb).matrix, ref), tol * scale,
                  "rotated.agrees");
  }
}

void trial_basis_dependence_c(int d_a, int d_b, std::uint64_t s, TrialRecorder& rec,
                              bool corrupt) {
  const QuantumMap phi = random_map(MapClass::CP, d_a, d_b, split_seed(s, 0));
  const CMat choi = choi_forward(phi).matrix;
  const OperatorBasis units = matrix_units(d_a);

  const CMat u = corrupt ? CMat(CMat::Identity(d_a * d_a, d_a * d_a))
                         : haar_unitary(d_a * d_a, split_seed(s, 1));
  const OperatorBasis rot = rotated_basis(units, u);
  CMat assembly = CMat::Zero(choi.rows(), choi.cols());
  for (const CMat& f : rot.elements) assembly += kron(f, apply(phi, f));
  rec.expect(max_abs_diff(assembly, choi) > 1e-3, "generic_rotation.moves_choi",
             max_abs_diff(assembly, choi));

  // Control: in the matrix-unit basis the assembly is the Choi matrix.
  CMat fixed = CMat::Zero(choi.rows(), choi.cols());
  for (const CMat& e : units.elements) fixed += kron(e, apply(phi, e));
  rec.expect_le(max_abs_diff(fixed, choi), 1e-12, "matrix_units.fixed_point");
}

void trial_variant_ladder(int d_a, int d_b, std::uint64_t s, double tol,
                          TrialRecorder& rec, bool corrupt) {
  const QuantumMap phi = random_map(MapClass::CP, d_a, d_b, split_seed(s, 0));
  const DualityState j = j_forward(phi);
  const DualityState c = choi_forward(phi);
  const double scale = tolerance_scale(j.matrix);

  // Conversion cycles restore matrices exactly (entry permutations).
  rec.expect_le(max_abs_diff(to_variant(to_variant(j, Variant::C), Variant::J).matrix,
                             j.matrix),
                0.0, "cycle.j_c_j");
  const DualityState full = to_variant(
      to_variant(to_variant(to_variant(j, Variant::CJstar), Variant::JstarC), Variant::C),
      Variant::J);
  rec.expect_le(max_abs_diff(full.matrix, j.matrix), 0.0, "cycle.four_step");

  // The ladder's concrete matrices: CJ* carries the J matrix, J*C the C one.
  rec.expect_le(max_abs_diff(to_variant(j, Variant::CJstar).matrix, j.matrix), 0.0,
                "ladder.cjstar_is_j");
  rec.expect_le(max_abs_diff(to_variant(j, Variant::JstarC).matrix, c.matrix), 0.0,
                "ladder.jstarc_is_c");
  rec.expect(to_variant(j, Variant::JstarC).dual_a, "ladder.jstarc_dual_flag", 0.0);

  // Pairing reconstructions against the direct constructions.
  const Variant first = corrupt ? Variant::C : Variant::J;
  rec.expect_le(max_abs_diff(state_from_inner_products(phi, first).matrix, j.matrix),
                tol * scale, "pairing.j");
  rec.expect_le(max_abs_diff(state_from_inner_products(phi, Variant::C).matrix, c.matrix),
                tol * scale, "pairing.c");
  rec.expect_le(
      max_abs_diff(state_from_inner_products(phi, Variant::CJstar).matrix, j.matrix),
      tol * scale, "pairing.cjstar");
  rec.expect_le(
      max_abs_diff(state_from_inner_products(phi, Variant::JstarC).matrix, c.matrix),
      tol * scale, "pairing.jstarc");

  // Trace and Hermiticity ride through conversions; J and C genuinely differ.
  for (Variant v : {Variant::C, Variant::CJstar, Variant::JstarC})
    rec.expect_le(std::abs(to_variant(j, v).matrix.trace() - j.matrix.trace()), 0.0,
                  "invariant.trace");
  rec.expect_le(herm_deviation(to_variant(j, Variant::C).matrix), 1e-12 * scale,
                "invariant.hermiticity");
  rec.expect(max_abs_diff(j.matrix, c.matrix) > 1e-6, "non_degenerate.j_differs_from_c",
             max_abs_diff(j.matrix, c.matrix));
}

void trial_jordan_structure(int d, std::uint64_t s, TrialRecorder& rec, bool corrupt) {
  const CMat a = ginibre(d, d, split_seed(s, 0));
  const CMat b = ginibre(d, d, split_seed(s, 1));
  const double scale = std::max(1.0, max_abs(a) * max_abs(b) * d);
  const complexd im(0.0, 1.0);

  // Forward product: ab = a o b - i (a * b); reverse: ba = a o b + i (a * b).
  const CMat jp = jordan_product(a, b);
  const CMat sp = star_product(a, b);
  const double sign = corrupt ? -1.0 : 1.0;
  rec.expect_le(max_abs_diff(CMat(jp - sign * im * sp),
                             associative_product(a, b, Orientation::Forward)),
                1e-12 * scale, "decomposition.forward");
  rec.expect_le(max_abs_diff(CMat(jp + im * sp),
                             associative_product(a, b, Orientation::Reverse)),
                1e-12 * scale, "decomposition.reverse");
  rec.expect_le(max_abs_diff(CMat(associative_product(a, b, Orientation::Forward) -
                                  associative_product(a, b, Orientation::Reverse)),
                             CMat(a * b - b * a)),
                1e-12 * scale, "decomposition.commutator");
  rec.expect_le(max_abs_diff(associative_product(a, b, Orientation::Reverse),
                             associative_product(b, a, Orientation::Forward)),
                0.0, "orientation.reverse_is_swapped_forward");
  rec.expect(flip(flip(Orientation::Reverse)) == Orientation::Reverse,
             "orientation.flip_involution", 0.0);

  // Hermitian closure and the Jordan identity.
  const CMat h1 = hermitian_ginibre(d, split_seed(s, 2));
  const CMat h2 = hermitian_ginibre(d, split_seed(s, 3));
  rec.expect_le(herm_deviation(jordan_product(h1, h2)), 1e-12 * scale, "closure.jordan");
  rec.expect_le(herm_deviation(star_product(h1, h2)), 1e-12 * scale, "closure.star");
  const CMat sq = jordan_product(h1, h1);
  rec.expect_le(max_abs_diff(jordan_product(jordan_product(h1, h2), sq),
                             jordan_product(h1, jordan_product(h2, sq))),
                1e-9, "jordan_identity");
  rec.expect_le(max_abs(star_product(a, a)), 0.0, "star.alternating");

  // Order derivation restricted to Hermitian generators is the Jordan product.
  rec.expect_le(max_abs_diff(order_derivation(h1, h2), jordan_product(h1, h2)),
                1e-12 * scale, "order_derivation.jordan_part");
}

void trial_time_orientation(int d, std::uint64_t s, TrialRecorder& rec, bool corrupt) {
  // Unit spectral norm keeps the finite-difference constant small.
  const auto normalized = [](CMat m) {
    const double n = spectral_norm_hermitian(m);
    return n > 0.0 ? CMat(m / n) : m;
  };
  const CMat a = normalized(hermitian_ginibre(d, split_seed(s, 0)));
  const CMat b = normalized(hermitian_ginibre(d, split_seed(s, 1)));
  const complexd im(0.0, 1.0);

  rec.expect_le(max_abs_diff(evolve(0.0, a, b), b), 1e-13, "evolve.t_zero");

  // d/dt at 0 is i[a, .]; first-order error stays below 10h.
  const double sign = corrupt ? -1.0 : 1.0;
  for (double h : {1e-3, 1e-4, 1e-5}) {
    const CMat slope = (evolve(h, a, b) - b) / h;
    const CMat expected = sign * im * CMat(a * b - b * a);
    rec.expect_le(max_abs_diff(slope, expected), 10.0 * h, "commutator.slope");
  }

  // evolve(t, a) = expm(2t d_{ia}) as superoperators.
  Rng rng(split_seed(s, 2));
  const double t = rng.uniform(-2.0, 2.0);
  const CMat lhs = conjugation_superop(hermitian_phase_exp(t, a));
  const CMat rhs = expm(CMat(2.0 * t * order_derivation_superop(CMat(im * a))));
  rec.expect_le(max_abs_diff(lhs, rhs), 1e-8, "superop.exponential");

  // Order derivations generate positivity-preserving flows.
  CMat c = ginibre(d, d, split_seed(s, 3));
  c /= std::max(1.0, c.norm());
  const CMat g = ginibre(d, d, split_seed(s, 4));
  const CMat x = g * g.adjoint();
  const CMat e = expm(CMat(0.5 * t * c));
  const CMat y = e * x * e.adjoint();
  const auto ev = hermitian_eigenvalues(y, 1e-8);
  rec.expect(ev.front() >= -1e-10 * std::max(1.0, std::abs(ev.back())),
             "flow.preserves_cone", ev.front());

  // evolve is a Jordan homomorphism and preserves trace and spectrum.
  const CMat h2 = hermitian_ginibre(d, split_seed(s, 5));
  rec.expect_le(max_abs_diff(evolve(t, a, jordan_product(b, h2)),
                             jordan_product(evolve(t, a, b), evolve(t, a, h2))),
                1e-9, "homomorphism.jordan");
  rec.expect_le(std::abs(evolve(t, a, b).trace() - b.trace()), 1e-10, "preserves.trace");
  const auto sp_in = hermitian_eigenvalues(b);
  const auto sp_out = hermitian_eigenvalues(evolve(t, a, b), 1e-8);
  double worst = 0.0;
  for (std::size_t i = 0; i < sp_in.size(); ++i)
    worst = std::max(worst, std::abs(sp_in[i] - sp_out[i]));
  rec.expect_le(worst, 1e-8, "preserves.spectrum");
}

}  // namespace

SuiteResult run_suite(const TheoremSuite& suite) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteResult result;
  result.id = suite.id;
  const std::uint64_t base =
      split_seed(suite.seed, static_cast<std::uint64_t>(suite.id) + 0x100);

  for (std::size_t di = 0; di < suite.dims.size(); ++di) {
    const auto [d_a, d_b] = suite.dims[di];
    for (int trial = 0; trial < suite.trials; ++trial) {
      const std::uint64_t ts = split_seed(base, di * suite.trials + trial);
      const bool corrupt = suite.inject_corruption && di == 0 && trial == 0;
      TrialRecorder rec{ts, true, &result.counterexamples};
      switch (suite.id) {
        case SuiteId::DePillis:
          trial_de_pillis(d_a, d_b, ts, suite.tol, rec, corrupt);
          break;
        case SuiteId::Jamiolkowski_a:
          trial_jamiolkowski_a(d_a, d_b, ts, trial, rec, corrupt);
          break;
        case SuiteId::Jamiolkowski_b:
          trial_jamiolkowski_b(d_a, d_b, ts, rec, corrupt);
          break;
        case SuiteId::Choi:
          trial_choi(d_a, d_b, ts, suite.tol, rec, corrupt);
          break;
        case SuiteId::ChoiReformulated:
          trial_choi_reformulated(d_a, d_b, ts, rec, corrupt);
          break;
        case SuiteId::Lemma1_T:
          trial_lemma1_t(d_a, d_b, ts, rec, corrupt);
          break;
        case SuiteId::BasisIndependenceJ:
          trial_basis_independence_j(d_a, d_b, ts, trial, suite.tol, rec, corrupt);
          break;
        case SuiteId::BasisDependenceC:
          trial_basis_dependence_c(d_a, d_b, ts, rec, corrupt);
          break;
        case SuiteId::VariantLadder:
          trial_variant_ladder(d_a, d_b, ts, suite.tol, rec, corrupt);
          break;
        case SuiteId::JordanStructure:
          trial_jordan_structure(d_a, ts, rec, corrupt);
          break;
        case SuiteId::TimeOrientation:
          trial_time_orientation(d_a, ts, rec, corrupt);
          break;
      }
      if (rec.ok)
        ++result.passed;
      else
        ++result.failed;
    }
  }

  result.wallclock_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

std::vector<SuiteId> all_suites() {
  return {SuiteId::DePillis,         SuiteId::Jamiolkowski_a,
          SuiteId::Jamiolkowski_b,   SuiteId::Choi,
          SuiteId::ChoiReformulated, SuiteId::Lemma1_T,
          SuiteId::BasisIndependenceJ, SuiteId::BasisDependenceC,
          SuiteId::VariantLadder,    SuiteId::JordanStructure,
          SuiteId::TimeOrientation};
}

std::string suite_name(SuiteId id) {
  switch (id) {
    case SuiteId::DePillis: return "de_pillis";
    case SuiteId::Jamiolkowski_a: return "jamiolkowski_a";
    case SuiteId::Jamiolkowski_b: return "jamiolkowski_b";
    case SuiteId::Choi: return "choi";
    case SuiteId::ChoiReformulated: return "choi_reformulated";
    case SuiteId::Lemma1_T: return "lemma1_t";
    case SuiteId::BasisIndependenceJ: return "basis_independence_j";
    case SuiteId::BasisDependenceC: return "basis_dependence_c";
    case SuiteId::VariantLadder: return "variant_ladder";
    case SuiteId::JordanStructure: return "jordan_structure";
    case SuiteId::TimeOrientation: return "time_orientation";
  }
  return "?";
}

std::optional<SuiteId> suite_from_name(std::string_view name) {
  for (SuiteId id : all_suites())
    if (suite_name(id) == name) return id;
  return std::nullopt;
}

}  // namespace choilab
