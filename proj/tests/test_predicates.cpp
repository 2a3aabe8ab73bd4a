#include "choilab/predicates.hpp"

#include "test_helpers.hpp"

using namespace choilab;
using namespace choilab::testing;

namespace {

CMat random_psd(int d, std::uint64_t seed) {
  const CMat g = ginibre(d, d, seed);
  return g * g.adjoint();
}

}  // namespace

TEST_SUITE("predicates") {

TEST_CASE("is_hermitian") {
  CHECK(is_hermitian(CMat::Identity(3, 3)).verdict == Verdict::Holds);
  const PredicateReport bad = is_hermitian(matrix_unit(2, 0, 1));
  CHECK(bad.verdict == Verdict::Fails);
  CHECK(bad.witness_value < -bad.tol);

  for (int t = 0; t < 10; ++t) {
    const QuantumMap hp = random_map(MapClass::HermPreserving, 2, 3, split_seed(3, t));
    CHECK(is_hermitian(j_forward(hp).matrix).verdict == Verdict::Holds);
  }
}

TEST_CASE("is_psd fixtures") {
  const PredicateReport id = is_psd(CMat::Identity(4, 4));
  CHECK(id.verdict == Verdict::Holds);
  CHECK(id.witness_value == doctest::Approx(1.0));

  const PredicateReport sw = is_psd(swap_matrix(2));
  CHECK(sw.verdict == Verdict::Fails);
  CHECK(sw.witness_value == doctest::Approx(-1.0).epsilon(1e-12));
  // The eigenvector witness reproduces the reported value.
  REQUIRE(sw.witness_x.has_value());
  const CVec& v = *sw.witness_x;
  const double re_eval = (v.adjoint() * swap_matrix(2) * v)(0, 0).real();
  CHECK(std::abs(re_eval - sw.witness_value) <= 1e-8);

  for (int t = 0; t < 10; ++t)
    CHECK(is_psd(choi_forward(random_map(MapClass::CP, 2, 2, split_seed(5, t))).matrix)
              .verdict == Verdict::Holds);

  CHECK_THROWS_AS(is_psd(matrix_unit(2, 0, 1)), precondition_error);
}

TEST_CASE("is_popt on the identity and on SWAP") {
  const BipartiteIndex idx(2, 2);
  PoptConfig cfg;
  cfg.seed = 7;

  const PredicateReport id = is_popt(make_state(CMat::Identity(4, 4), idx, Variant::J), cfg);
  CHECK(id.verdict == Verdict::Holds);
  CHECK(id.witness_value == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(id.restarts_used == cfg.restarts);

  // SWAP is the Choi matrix of the transpose map: block positive with
  // minimum 0, the canonical positive-but-not-CP separation.
  const PredicateReport sw = is_popt(make_state(swap_matrix(2), idx, Variant::C), cfg);
  CHECK(sw.verdict == Verdict::Holds);
  CHECK(std::abs(sw.witness_value) <= 1e-9);
}

TEST_CASE("product expectations on SWAP follow the overlap formula") {
  const BipartiteIndex idx(2, 2);
  const CMat sw = swap_matrix(2);
  for (int t = 0; t < 20; ++t) {
    const CVec x = random_unit_vector(2, split_seed(11, 2 * t));
    const CVec y = random_unit_vector(2, split_seed(11, 2 * t + 1));
    const complexd overlap = (x.conjugate().adjoint() * y)(0, 0);
    CHECK(std::abs(product_expectation(sw, idx, x, y) - std::norm(overlap)) <= 1e-12);
  }
}

TEST_CASE("is_popt certifies the shifted entangled projector violation") {
  const BipartiteIndex idx(2, 2);
  const CMat m = max_entangled_projector(2) - 0.6 * CMat::Identity(4, 4);
  PoptConfig cfg;
  cfg.seed = 13;
  const PredicateReport rep = is_popt(make_state(m, idx, Variant::J), cfg);
  CHECK(rep.verdict == Verdict::Fails);
  CHECK(rep.witness_value <= -0.6 + 1e-6);
  REQUIRE(rep.witness_x.has_value());
  REQUIRE(rep.witness_y.has_value());
  CHECK(std::abs(product_expectation(m, idx, *rep.witness_x, *rep.witness_y) -
                 rep.witness_value) <= 1e-8);
}

TEST_CASE("is_popt is invariant under the A-partial transpose") {
  const BipartiteIndex idx(2, 2);
  for (int t = 0; t < 5; ++t) {
    const CMat h = hermitian_ginibre(4, split_seed(17, t));
    PoptConfig cfg;
    cfg.seed = split_seed(19, t);
    const double a = is_popt(make_state(h, idx, Variant::J), cfg).witness_value;
    const double b =
        is_popt(make_state(partial_transpose(h, idx, Factor::A), idx, Variant::C), cfg)
            .witness_value;
    CHECK(std::abs(a - b) <= 1e-7);
  }
}

TEST_CASE("is_popt validates input and configuration") {
  const BipartiteIndex idx(2, 2);
  CHECK_THROWS_AS(is_popt(make_state(kron(matrix_unit(2, 0, 1), CMat::Identity(2, 2)),
                                     idx, Variant::J)),
                  precondition_error);
  PoptConfig bad;
  bad.restarts = 0;
  CHECK_THROWS_AS(is_popt(make_state(CMat::Identity(4, 4), idx, Variant::J), bad),
                  precondition_error);
}

TEST_CASE("is_cp separates the identity and transpose maps") {
  CHECK(is_cp(identity_map(2)).verdict == Verdict::Holds);

  const PredicateReport t_rep = is_cp(transpose_map(2));
  CHECK(t_rep.verdict == Verdict::Fails);
  CHECK(t_rep.witness_value == doctest::Approx(-1.0).epsilon(1e-12));

  for (int t = 0; t < 10; ++t)
    CHECK(is_cp(random_map(MapClass::CP, 2, 3, split_seed(23, t))).verdict ==
          Verdict::Holds);

  // A non-Hermiticity-preserving map fails rather than throwing.
  CHECK(is_cp(random_map(MapClass::Arbitrary, 2, 2, 29)).verdict == Verdict::Fails);
}

TEST_CASE("is_co_cp mirrors is_cp through transposition") {
  CHECK(is_co_cp(transpose_map(2)).verdict == Verdict::Holds);
  CHECK(is_co_cp(identity_map(2)).verdict == Verdict::Fails);
  for (int t = 0; t < 10; ++t)
    CHECK(is_co_cp(random_map(MapClass::CoCP, 2, 3, split_seed(31, t))).verdict ==
          Verdict::Holds);

  // is_cp(phi) and is_co_cp(phi o T) are the same test, bit for bit.
  for (int t = 0; t < 20; ++t) {
    const QuantumMap phi = random_map(t % 2 == 0 ? MapClass::CP : MapClass::HermPreserving,
                                      2, 2, split_seed(37, t));
    const PredicateReport lhs = is_cp(phi);
    const PredicateReport rhs = is_co_cp(precompose_transpose(phi));
    CHECK(lhs.verdict == rhs.verdict);
    CHECK(std::abs(lhs.witness_value - rhs.witness_value) <= 1e-12);
  }
}

TEST_CASE("the transpose map is decomposable but not CP") {
  DecomposableMap dm;
  dm.cp_part = scaled(identity_map(2), 0.0);
  dm.co_cp_part = identity_map(2);
  const QuantumMap total = dm.total();
  CHECK(approx_equal(total.transfer, transpose_map(2).transfer, 0.0));
  CHECK(is_cp(total).verdict == Verdict::Fails);

  // CP implies POPT, but not conversely: the same map passes is_popt.
  PoptConfig cfg;
  cfg.seed = 41;
  CHECK(is_popt(j_forward(total), cfg).verdict == Verdict::Holds);
  for (int t = 0; t < 10; ++t) {
    const QuantumMap cp = random_map(MapClass::CP, 2, 2, split_seed(43, t));
    PoptConfig c2;
    c2.seed = split_seed(47, t);
    CHECK(is_popt(j_forward(cp), c2).verdict == Verdict::Holds);
  }
}

TEST_CASE("is_trace_preserving") {
  CHECK(is_trace_preserving(identity_map(3)).verdict == Verdict::Holds);
  CHECK(is_trace_preserving(scaled(identity_map(3), 2.0)).verdict == Verdict::Fails);
  for (int t = 0; t < 10; ++t)
    CHECK(is_trace_preserving(random_map(MapClass::TracePreservingCP, 2, 3,
                                         split_seed(53, t)))
              .verdict == Verdict::Holds);
}

TEST_CASE("is_ppt_state") {
  const BipartiteIndex idx(2, 2);
  CHECK(is_ppt_state(kron(random_psd(2, 59), random_psd(2, 61)), idx).verdict ==
        Verdict::Holds);

  const PredicateReport ent = is_ppt_state(CMat(0.5 * max_entangled_projector(2)), idx);
  CHECK(ent.verdict == Verdict::Fails);
  CHECK(ent.witness_value == doctest::Approx(-0.5).epsilon(1e-12));

  // Separable mixtures stay PPT.
  for (int t = 0; t < 10; ++t) {
    CMat rho = CMat::Zero(4, 4);
    Rng rng(split_seed(67, t));
    for (int k = 0; k < 4; ++k)
      rho += rng.uniform(0.0, 1.0) * kron(random_psd(2, split_seed(71, 2 * (4 * t + k))),
                                          random_psd(2, split_seed(71, 2 * (4 * t + k) + 1)));
    CHECK(is_ppt_state(rho, idx).verdict == Verdict::Holds);
  }

  CHECK_THROWS_AS(is_ppt_state(swap_matrix(2), idx), precondition_error);
}

TEST_CASE("PPT of a Choi matrix matches co-complete-positivity of its map") {
  const BipartiteIndex idx(2, 2);
  for (int t = 0; t < 50; ++t) {
    // Mix toward the identity so both PPT and NPT states appear.
    Rng rng(split_seed(73, t));
    const double lambda = rng.uniform(0.0, 1.0);
    const CMat raw = random_psd(4, split_seed(79, t));
    const CMat rho = lambda * raw / raw.trace().real() +
                     (1.0 - lambda) * 0.25 * CMat::Identity(4, 4);
    const QuantumMap phi = choi_inverse(make_state(rho, idx, Variant::C));
    CHECK(is_cp(phi).verdict == Verdict::Holds);
    const Verdict via_state = is_psd(partial_transpose(rho, idx, Factor::A)).verdict;
    CHECK(via_state == is_co_cp(phi).verdict);
    CHECK(via_state == is_ppt_state(rho, idx).verdict);
  }
}

}  // TEST_SUITE
