#include "choilab/bases.hpp"

#include "test_helpers.hpp"

using namespace choilab;
using namespace choilab::testing;

namespace {

void check_orthonormal_and_complete(const OperatorBasis& basis, std::uint64_t seed) {
  const int n = basis.size();
  CHECK(max_abs(CMat(gram_matrix(basis) - CMat::Identity(n, n))) <= 1e-10);
  for (int t = 0; t < 50; ++t) {
    const CMat a = ginibre(basis.dim, basis.dim, split_seed(seed, t));
    CHECK(approx_equal(reconstruct(basis, coefficients(basis, a)), a, 1e-9));
  }
}

}  // namespace

TEST_SUITE("bases") {

TEST_CASE("hs_inner fixtures") {
  for (int d : {1, 2, 5})
    CHECK(std::abs(hs_inner(CMat::Identity(d, d), CMat::Identity(d, d)) -
                   complexd(d)) <= 1e-12);
  CHECK(std::abs(hs_inner(matrix_unit(2, 0, 1), matrix_unit(2, 0, 1)) - complexd(1)) <=
        1e-12);
  CHECK(std::abs(hs_inner(matrix_unit(2, 0, 1), matrix_unit(2, 1, 0))) <= 1e-12);
  CHECK_THROWS_AS(hs_inner(CMat::Identity(2, 2), CMat::Identity(3, 3)), dim_error);
}

TEST_CASE("hs_inner is conjugate symmetric and positive on the diagonal") {
  for (int t = 0; t < 20; ++t) {
    const CMat a = ginibre(3, 3, split_seed(3, 2 * t));
    const CMat b = ginibre(3, 3, split_seed(3, 2 * t + 1));
    CHECK(std::abs(hs_inner(a, b) - std::conj(hs_inner(b, a))) <= 1e-12);
    const complexd aa = hs_inner(a, a);
    CHECK(std::abs(aa.imag()) <= 1e-12);
    CHECK(aa.real() >= 0.0);
  }
}

TEST_CASE("hs_inner restricted to Hermitian pairs is the anti-commutator form") {
  for (int t = 0; t < 20; ++t) {
    const CMat a = hermitian_ginibre(3, split_seed(5, 2 * t));
    const CMat b = hermitian_ginibre(3, split_seed(5, 2 * t + 1));
    const complexd ip = hs_inner(a, b);
    const complexd anti = 0.5 * (b.adjoint() * a + a * b.adjoint()).trace();
    CHECK(std::abs(ip - anti) <= 1e-12);
    CHECK(std::abs(ip.imag()) <= 1e-12);  // real on Hermitian arguments
  }
}

TEST_CASE("dual-algebra conjugation identity") {
  // tr[b a*] with reversed products equals the conjugate of tr[b* a].
  for (int t = 0; t < 20; ++t) {
    const CMat a = ginibre(3, 3, split_seed(7, 2 * t));
    const CMat b = ginibre(3, 3, split_seed(7, 2 * t + 1));
    const complexd lhs = (b * a.adjoint()).trace();
    const complexd rhs = std::conj((b.adjoint() * a).trace());
    CHECK(std::abs(lhs - rhs) <= 1e-12);
  }
}

TEST_CASE("matrix_units basis") {
  const OperatorBasis one = matrix_units(1);
  REQUIRE(one.size() == 1);
  CHECK(one.elements[0](0, 0) == complexd(1.0));

  const OperatorBasis two = matrix_units(2);
  REQUIRE(two.size() == 4);
  CHECK(approx_equal(two.elements[1], matrix_unit(2, 0, 1), 0.0));
  check_orthonormal_and_complete(two, 11);
  check_orthonormal_and_complete(matrix_units(3), 13);
}

TEST_CASE("gell_mann basis at d=2 is the normalized Pauli family") {
  const OperatorBasis gm = gell_mann(2);
  REQUIRE(gm.size() == 4);
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(approx_equal(gm.elements[0], s * CMat::Identity(2, 2), 1e-15));
  CHECK(approx_equal(gm.elements[1], s * pauli_x(), 1e-15));
  CHECK(approx_equal(gm.elements[2], s * pauli_y(), 1e-15));
  CHECK(approx_equal(gm.elements[3], s * pauli_z(), 1e-15));
}

TEST_CASE("gell_mann bases are Hermitian, orthonormal and complete") {
  for (int d : {1, 2, 3, 4}) {
    const OperatorBasis gm = gell_mann(d);
    REQUIRE(gm.size() == d * d);
    for (const CMat& e : gm.elements) CHECK(herm_deviation(e) == 0.0);
    check_orthonormal_and_complete(gm, 17 + d);
  }
}

TEST_CASE("rotated_basis preserves the Gram matrix") {
  const OperatorBasis base = matrix_units(2);
  const OperatorBasis same = rotated_basis(base, CMat::Identity(4, 4));
  for (int k = 0; k < 4; ++k)
    CHECK(approx_equal(same.elements[k], base.elements[k], 0.0));

  const OperatorBasis rot = rotated_basis(base, haar_unitary(4, 19));
  check_orthonormal_and_complete(rot, 23);

  const OperatorBasis rot3 = rotated_basis(matrix_units(3), haar_unitary(9, 29));
  check_orthonormal_and_complete(rot3, 31);
}

TEST_CASE("rotated_basis rejects non-unitary rotations") {
  CHECK_THROWS_AS(rotated_basis(matrix_units(2), CMat(2.0 * CMat::Identity(4, 4))),
                  precondition_error);
  CHECK_THROWS_AS(rotated_basis(matrix_units(2), CMat::Identity(3, 3)), dim_error);
}

}  // TEST_SUITE
