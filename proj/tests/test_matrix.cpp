#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncqd/jacobi.hpp"
#include "ncqd/matrix.hpp"
#include "test_util.hpp"

using namespace ncqd;
using doctest::Approx;

TEST_CASE("commutator of diagonal matrices vanishes") {
  const ComplexMatrix a = ComplexMatrix::diagonal({1.0, 2.0});
  const ComplexMatrix b = ComplexMatrix::diagonal({3.0, 4.0});
  CHECK(commutator(a, b).max_abs() == 0.0);
}

TEST_CASE("commutator of sigma_x and sigma_y is 2i sigma_z") {
  const ComplexMatrix expected = cplx{0.0, 2.0} * testutil::pauli_z();
  CHECK(max_abs_diff(commutator(testutil::pauli_x(), testutil::pauli_y()), expected) == 0.0);
}

TEST_CASE("self-commutator vanishes for random matrices") {
  Xoshiro256pp rng(RngSeed{11});
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = testutil::random_matrix(4, 4, rng);
    CHECK(commutator(a, a).max_abs() == 0.0);
  }
}

TEST_CASE("commutator rejects mismatched operands") {
  const ComplexMatrix a(2, 2);
  const ComplexMatrix b(3, 3);
  CHECK_THROWS_AS(commutator(a, b), dimension_error);
  CHECK_THROWS_AS(commutator(ComplexMatrix(2, 3), ComplexMatrix(2, 3)), dimension_error);
}

TEST_CASE("hs_norm reference values") {
  CHECK(hs_norm(ComplexMatrix::identity(2)) == Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(hs_norm(ComplexMatrix(3, 3)) == 0.0);
  CHECK(hs_norm(ComplexMatrix(2, 2, {0, 1, 0, 0})) == 1.0);
}

TEST_CASE("matrix constructor rejects non-finite entries") {
  CHECK_THROWS_AS(ComplexMatrix(1, 2, {cplx{1.0}, cplx{std::nan("")}}), validation_error);
  CHECK_THROWS_AS(ComplexMatrix(2, 2, {1.0, 2.0, 3.0}), dimension_error);
}

TEST_CASE("partial trace of a product state recovers the factors") {
  Xoshiro256pp rng(RngSeed{21});
  const ComplexMatrix rho_a = testutil::random_density(2, 2, rng).mat;  // reuse as any 4x4 state
  const ComplexMatrix rho_b = testutil::random_density(2, 2, rng).mat;
  const ComplexMatrix prod = kron(rho_a, rho_b);
  CHECK(max_abs_diff(partial_trace(prod, 4, 4, Side::A), rho_a) < 1e-14);
  CHECK(max_abs_diff(partial_trace(prod, 4, 4, Side::B), rho_b) < 1e-14);
}

TEST_CASE("partial trace of a Bell projector is maximally mixed") {
  const ComplexMatrix bell = projector(bell_state(0, 0), 2, 2).mat;
  const ComplexMatrix half = cplx{0.5} * ComplexMatrix::identity(2);
  CHECK(max_abs_diff(partial_trace(bell, 2, 2, Side::A), half) < 1e-15);
  CHECK(max_abs_diff(partial_trace(bell, 2, 2, Side::B), half) < 1e-15);
}

TEST_CASE("partial trace preserves the trace and is linear") {
  Xoshiro256pp rng(RngSeed{31});
  const ComplexMatrix rho = testutil::random_density(2, 3, rng).mat;
  const ComplexMatrix sigma = testutil::random_density(2, 3, rng).mat;
  CHECK(std::abs(partial_trace(rho, 2, 3, Side::B).trace() - cplx{1.0}) < 1e-12);
  CHECK(std::abs(partial_trace(rho, 2, 3, Side::A).trace() - cplx{1.0}) < 1e-12);

  const cplx alpha{0.3, 0.1}, beta{0.7, -0.2};
  const ComplexMatrix mix = rho * alpha + sigma * beta;
  const ComplexMatrix lhs = partial_trace(mix, 2, 3, Side::A);
  const ComplexMatrix rhs = partial_trace(rho, 2, 3, Side::A) * alpha +
                            partial_trace(sigma, 2, 3, Side::A) * beta;
  CHECK(max_abs_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("partial trace rejects a non-factoring dimension") {
  CHECK_THROWS_AS(partial_trace(ComplexMatrix(5, 5), 2, 2, Side::A), dimension_error);
}

TEST_CASE("commutator norms are symmetric under operand swap") {
  Xoshiro256pp rng(RngSeed{41});
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix a = testutil::random_matrix(3, 3, rng);
    const ComplexMatrix b = testutil::random_matrix(3, 3, rng);
    CHECK(hs_norm(commutator(a, b)) == Approx(hs_norm(commutator(b, a))).epsilon(1e-12));
    CHECK(trace_norm(commutator(a, b)) == Approx(trace_norm(commutator(b, a))).epsilon(1e-12));
  }
}

TEST_CASE("trace norm dominates the Hilbert-Schmidt norm") {
  Xoshiro256pp rng(RngSeed{51});
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix a = testutil::random_matrix(4, 4, rng);
    const double tn = trace_norm(a), hn = hs_norm(a);
    CHECK(tn >= hn - 1e-12);
    CHECK(hn >= 0.0);
  }
}

TEST_CASE("both norms coincide on rank-1 matrices") {
  // trace_norm takes square roots of the eigenvalues of a^dagger a, so the
  // numerically-zero eigenvalues of a rank-1 product contribute up to
  // ~sqrt(eps) * scale of noise; the bound reflects that.
  Xoshiro256pp rng(RngSeed{61});
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexMatrix u = testutil::random_matrix(4, 1, rng);
    const ComplexMatrix v = testutil::random_matrix(4, 1, rng);
    const ComplexMatrix outer = u * v.dagger();
    CHECK(std::abs(trace_norm(outer) - hs_norm(outer)) < 1e-6 * hs_norm(outer));
  }
}

TEST_CASE("both norms are invariant under unitary sandwiches") {
  Xoshiro256pp rng(RngSeed{71});
  for (int trial = 0; trial < 5; ++trial) {
    const ComplexMatrix a = testutil::random_matrix(4, 4, rng);
    const ComplexMatrix u = testutil::random_unitary(4, rng);
    const ComplexMatrix v = testutil::random_unitary(4, rng);
    const ComplexMatrix sandwiched = u * a * v;
    CHECK(std::abs(trace_norm(sandwiched) - trace_norm(a)) < 1e-10);
    CHECK(std::abs(hs_norm(sandwiched) - hs_norm(a)) < 1e-10);
  }
}

TEST_CASE("kron dimensions and entries") {
  const ComplexMatrix a(1, 2, {2.0, cplx{0.0, 1.0}});
  const ComplexMatrix b(2, 1, {1.0, 3.0});
  const ComplexMatrix k = kron(a, b);
  REQUIRE(k.rows() == 2);
  REQUIRE(k.cols() == 2);
  CHECK(k(0, 0) == cplx{2.0});
  CHECK(k(1, 0) == cplx{6.0});
  CHECK(k(0, 1) == cplx{0.0, 1.0});
  CHECK(k(1, 1) == cplx{0.0, 3.0});
}
