#include "choilab/jordan.hpp"

#include "test_helpers.hpp"

using namespace choilab;
using namespace choilab::testing;

TEST_SUITE("jordan") {

TEST_CASE("jordan_product basics") {
  const CMat b = ginibre(3, 3, 2);
  CHECK(approx_equal(jordan_product(CMat::Identity(3, 3), b), b, 0.0));
  CHECK(max_abs(jordan_product(pauli_x(), pauli_z())) <= 1e-15);

  const CMat a = ginibre(3, 3, 3);
  CHECK(approx_equal(jordan_product(a, b), jordan_product(b, a), 0.0));  // commutative
  CHECK_THROWS_AS(jordan_product(CMat::Identity(2, 2), CMat::Identity(3, 3)), dim_error);
}

TEST_CASE("star_product basics") {
  const CMat a = ginibre(3, 3, 5);
  CHECK(max_abs(star_product(a, a)) == 0.0);
  CHECK(approx_equal(star_product(pauli_x(), pauli_y()), CMat(-pauli_z()), 1e-15));
  CHECK(approx_equal(star_product(a, ginibre(3, 3, 6)),
                     CMat(-star_product(ginibre(3, 3, 6), a)), 0.0));
}

TEST_CASE("Hermitian closure of both products") {
  for (int t = 0; t < 50; ++t) {
    const CMat a = hermitian_ginibre(3, split_seed(7, 2 * t));
    const CMat b = hermitian_ginibre(3, split_seed(7, 2 * t + 1));
    const double scale = std::max(1.0, max_abs(a) * max_abs(b) * 3);
    CHECK(herm_deviation(jordan_product(a, b)) <= 1e-12 * scale);
    CHECK(herm_deviation(star_product(a, b)) <= 1e-12 * scale);
  }
}

TEST_CASE("Jordan identity on random Hermitian pairs") {
  for (int t = 0; t < 100; ++t) {
    const CMat a = hermitian_ginibre(3, split_seed(11, 2 * t));
    const CMat b = hermitian_ginibre(3, split_seed(11, 2 * t + 1));
    const CMat sq = jordan_product(a, a);
    CHECK(max_abs_diff(jordan_product(jordan_product(a, b), sq),
                       jordan_product(a, jordan_product(b, sq))) <= 1e-9);
  }
}

TEST_CASE("associative products recover both composition orders") {
  const CMat e01 = matrix_unit(2, 0, 1), e10 = matrix_unit(2, 1, 0);
  CHECK(approx_equal(associative_product(e01, e10, Orientation::Forward),
                     matrix_unit(2, 0, 0), 0.0));
  CHECK(approx_equal(associative_product(e01, e10, Orientation::Reverse),
                     matrix_unit(2, 1, 1), 0.0));

  for (int t = 0; t < 50; ++t) {
    const CMat a = ginibre(3, 3, split_seed(13, 2 * t));
    const CMat b = ginibre(3, 3, split_seed(13, 2 * t + 1));
    const double scale = std::max(1.0, max_abs(a) * max_abs(b) * 3);
    const CMat fwd = associative_product(a, b, Orientation::Forward);
    const CMat rev = associative_product(a, b, Orientation::Reverse);
    // ab = (1/2){a,b} + (1/2)[a,b], ba = (1/2){a,b} - (1/2)[a,b].
    const CMat anti = 0.5 * (a * b + b * a);
    const CMat comm = 0.5 * (a * b - b * a);
    CHECK(max_abs_diff(fwd, CMat(anti + comm)) <= 1e-12 * scale);
    CHECK(max_abs_diff(rev, CMat(anti - comm)) <= 1e-12 * scale);
    CHECK(max_abs_diff(CMat(fwd - rev), CMat(a * b - b * a)) <= 1e-12 * scale);
    // Reversal is composition with the argument swap.
    CHECK(max_abs_diff(rev, associative_product(b, a, Orientation::Forward)) == 0.0);
    // Recombination through the Jordan/star pair.
    const complexd im(0.0, 1.0);
    CHECK(max_abs_diff(fwd, CMat(jordan_product(a, b) - im * star_product(a, b))) <=
          1e-12 * scale);
  }
  CHECK(flip(Orientation::Forward) == Orientation::Reverse);
  CHECK(flip(flip(Orientation::Forward)) == Orientation::Forward);
}

TEST_CASE("evolve fixtures") {
  const CMat b = ginibre(3, 3, 17);
  CHECK(approx_equal(evolve(0.0, hermitian_ginibre(3, 18), b), b, 1e-13));

  // e^{i pi Z / 4} X e^{-i pi Z / 4}, from the 2x2 exponential worked by hand.
  CMat expected(2, 2);
  expected << 0, complexd(0, 1), complexd(0, -1), 0;
  CHECK(approx_equal(evolve(M_PI / 4.0, pauli_z(), pauli_x()), expected, 1e-12));

  CHECK_THROWS_AS(evolve(1.0, matrix_unit(2, 0, 1), pauli_x()), precondition_error);
}

TEST_CASE("evolve slope at zero is the commutator") {
  for (int t = 0; t < 10; ++t) {
    CMat a = hermitian_ginibre(3, split_seed(19, 2 * t));
    CMat b = hermitian_ginibre(3, split_seed(19, 2 * t + 1));
    a /= spectral_norm_hermitian(a);
    b /= spectral_norm_hermitian(b);
    const complexd im(0.0, 1.0);
    const CMat comm = im * CMat(a * b - b * a);
    for (double h : {1e-3, 1e-4, 1e-5}) {
      const CMat slope = (evolve(h, a, b) - b) / h;
      CHECK(max_abs_diff(slope, comm) <= 10.0 * h);
    }
  }
}

TEST_CASE("evolve preserves trace, spectrum, positivity and Jordan products") {
  for (int t = 0; t < 10; ++t) {
    const CMat a = hermitian_ginibre(3, split_seed(23, 3 * t));
    const CMat b = hermitian_ginibre(3, split_seed(23, 3 * t + 1));
    const CMat c = hermitian_ginibre(3, split_seed(23, 3 * t + 2));
    Rng rng(split_seed(29, t));
    const double time = rng.uniform(-2.0, 2.0);

    const CMat moved = evolve(time, a, b);
    CHECK(std::abs(moved.trace() - b.trace()) <= 1e-10 * std::max(1.0, max_abs(b)));
    const auto sp_in = hermitian_eigenvalues(b);
    const auto sp_out = hermitian_eigenvalues(moved, 1e-8);
    for (std::size_t i = 0; i < sp_in.size(); ++i)
      CHECK(std::abs(sp_in[i] - sp_out[i]) <= 1e-8);

    const CMat g = ginibre(3, 3, split_seed(31, t));
    const CMat psd = g * g.adjoint();
    CHECK(hermitian_eigenvalues(evolve(time, a, psd), 1e-8).front() >=
          -1e-10 * std::max(1.0, max_abs(psd)));

    CHECK(max_abs_diff(evolve(time, a, jordan_product(b, c)),
                       jordan_product(evolve(time, a, b), evolve(time, a, c))) <= 1e-9);
  }
}

TEST_CASE("order_derivation fixtures and generator split") {
  const CMat x = ginibre(3, 3, 37);
  CHECK(approx_equal(order_derivation(CMat::Identity(3, 3), x), x, 0.0));

  const complexd im(0.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    const CMat h = hermitian_ginibre(3, split_seed(41, 2 * t));
    const CMat y = hermitian_ginibre(3, split_seed(41, 2 * t + 1));
    const double scale = std::max(1.0, max_abs(h) * max_abs(y) * 3);
    // Hermitian generators act as the Jordan product...
    CHECK(max_abs_diff(order_derivation(h, y), jordan_product(h, y)) <= 1e-12 * scale);
    // ...and i-rotated ones as the star product (the skew part).
    CHECK(max_abs_diff(order_derivation(CMat(im * h), y), star_product(h, y)) <=
          1e-12 * scale);
  }
}

TEST_CASE("order-derivation flows preserve the positive cone") {
  for (int t = 0; t < 20; ++t) {
    CMat a = ginibre(3, 3, split_seed(43, 2 * t));  // general, not Hermitian
    a /= std::max(1.0, a.norm());
    const CMat g = ginibre(3, 3, split_seed(43, 2 * t + 1));
    const CMat x = g * g.adjoint();
    Rng rng(split_seed(47, t));
    const double time = rng.uniform(-2.0, 2.0);
    // The flow of d_a is x -> e^{ta/2} x e^{ta*/2}.
    const CMat e = expm(CMat(0.5 * time * a));
    const CMat y = e * x * e.adjoint();
    const auto ev = hermitian_eigenvalues(y, 1e-8);
    CHECK(ev.front() >= -1e-10 * std::max(1.0, std::abs(ev.back())));
    // And the flow is indeed generated by the superoperator.
    CHECK(max_abs_diff(vec(y), CVec(expm(CMat(time * order_derivation_superop(a))) *
                                    vec(x))) <= 1e-8 * std::max(1.0, max_abs(y)));
  }
}

TEST_CASE("evolve equals the exponential of twice the skew order derivation") {
  const complexd im(0.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    CMat a = hermitian_ginibre(3, split_seed(53, 2 * t));
    a /= spectral_norm_hermitian(a);
    const CMat b = hermitian_ginibre(3, split_seed(53, 2 * t + 1));
    Rng rng(split_seed(59, t));
    const double time = t == 0 ? 0.3 : rng.uniform(-2.0, 2.0);

    const CMat via_superop =
        unvec(CVec(expm(CMat(2.0 * time * order_derivation_superop(CMat(im * a)))) *
                   vec(b)),
              3, 3);
    CHECK(max_abs_diff(evolve(time, a, b), via_superop) <= 1e-8);
    CHECK(max_abs_diff(conjugation_superop(hermitian_phase_exp(time, a)),
                       expm(CMat(2.0 * time * order_derivation_superop(CMat(im * a))))) <=
          1e-8);
  }
}

}  // TEST_SUITE
