#include "qrv/spectral.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace qrv;
using namespace qrv::testing;

namespace {

/// Completeness, orthogonality, idempotence, reconstruction, separation.
void check_decomposition_invariants(const Operator& a, const SpectralDecomposition& d) {
  Matrix sum = Matrix::Zero(d.dim(), d.dim());
  int total_multiplicity = 0;
  for (const auto& branch : d.branches()) {
    sum += branch.projector.matrix();
    total_multiplicity += branch.multiplicity;
    CHECK(branch.projector.is_projector(1e-10));
  }
  CHECK(total_multiplicity == d.dim());
  CHECK((sum - Matrix::Identity(d.dim(), d.dim())).norm() <= 1e-10);

  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      CHECK((d.branches()[i].projector * d.branches()[j].projector).frobenius_norm() <= 1e-10);
      CHECK(d.branches()[j].eigenvalue - d.branches()[i].eigenvalue > d.tolerance());
    }
  }

  CHECK((d.reconstruct() - a).frobenius_norm() <= 1e-9 * std::max(1.0, a.frobenius_norm()));
}

}  // namespace

TEST_CASE("tolerance-grouped decomposition") {
  SUBCASE("exact degeneracy is one branch") {
    RealVector diag(3);
    diag << 1.0, 1.0, 2.0;
    const auto d = decompose(Operator::diagonal(diag), 1e-8);
    REQUIRE(d.size() == 2);
    CHECK(d.branches()[0].eigenvalue == doctest::Approx(1.0));
    CHECK(d.branches()[0].multiplicity == 2);
    CHECK(std::abs(d.branches()[0].projector.trace().real() - 2.0) <= 1e-12);
    CHECK(d.branches()[1].eigenvalue == doctest::Approx(2.0));
    CHECK(d.branches()[1].multiplicity == 1);
  }

  SUBCASE("sigma_z splits into the basis projectors") {
    const auto d = decompose(pauli_z());
    REQUIRE(d.size() == 2);
    // Ascending order: -1 (projector onto |1>) first.
    CHECK(d.branches()[0].eigenvalue == doctest::Approx(-1.0));
    CHECK(std::abs(d.branches()[0].projector.matrix()(1, 1) - 1.0) <= 1e-12);
    CHECK(std::abs(d.branches()[1].projector.matrix()(0, 0) - 1.0) <= 1e-12);
  }

  SUBCASE("squaring a symmetric spectrum folds two branches into one") {
    RealVector diag(3);
    diag << -1.0, 0.0, 1.0;
    const Operator a = Operator::diagonal(diag);
    const auto d_squared = decompose(a * a);
    REQUIRE(d_squared.size() == 2);
    CHECK(d_squared.branches()[1].eigenvalue == doctest::Approx(1.0));
    CHECK(d_squared.branches()[1].multiplicity == 2);

    // P_{b=1} is the sum of the a = +1 and a = -1 projectors.
    const auto d_plain = decompose(a);
    const Matrix expected =
        d_plain.branches()[0].projector.matrix() + d_plain.branches()[2].projector.matrix();
    CHECK((d_squared.branches()[1].projector.matrix() - expected).norm() <= 1e-12);
  }

  SUBCASE("engineered near-degeneracy groups by single linkage") {
    Rng rng(301);
    // Conjugate a diagonal with a random unitary so degeneracy is not axis-aligned.
    RealVector diag(5);
    diag << 1.0, 1.0 + 1e-11, 2.0, 3.0, 3.0 - 1e-11;
    const Matrix basis = hermitian_eig(random_hermitian(5, rng)).eigenvectors;
    const Operator a(basis * diag.asDiagonal().toDenseMatrix().cast<Complex>() * basis.adjoint());
    const auto d = decompose(a, 1e-8);
    REQUIRE(d.size() == 3);
    CHECK(d.branches()[0].multiplicity == 2);
    CHECK(d.branches()[1].multiplicity == 1);
    CHECK(d.branches()[2].multiplicity == 2);
    check_decomposition_invariants(a, d);
  }

  SUBCASE("invariants on random Hermitian operators") {
    Rng rng(302);
    for (Eigen::Index dim : {2, 9, 33, 128}) {
      const Operator a = random_hermitian(dim, rng);
      check_decomposition_invariants(a, decompose(a));
    }
  }

  SUBCASE("non-Hermitian input throws") {
    Matrix m(2, 2);
    m << 0.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(decompose(Operator(m)), std::invalid_argument);
  }
}

TEST_CASE("spectral calculus") {
  RealVector diag(3);
  diag << -1.0, 0.0, 1.0;
  const Operator a = Operator::diagonal(diag);
  const ScalarFunction1 square{[](double v) { return v * v; }, "a^2"};

  SUBCASE("identity function reconstructs the operator") {
    const Operator result =
        operator_function(decompose(a), ScalarFunction1{[](double v) { return v; }, "a"});
    CHECK((result - a).frobenius_norm() <= 1e-12);
  }

  SUBCASE("squaring acts entrywise on the diagonal") {
    const Operator result = operator_function(decompose(a), square);
    RealVector expected(3);
    expected << 1.0, 0.0, 1.0;
    CHECK((result - Operator::diagonal(expected)).frobenius_norm() <= 1e-12);
  }

  SUBCASE("result commutes with the source") {
    Rng rng(303);
    const Operator h = random_hermitian(7, rng);
    const Operator image = operator_function(decompose(h), square);
    CHECK(commutator_norm(h, image) <= 1e-10);
  }

  SUBCASE("composition collapses") {
    Rng rng(304);
    const Operator h = random_hermitian(6, rng);
    const ScalarFunction1 shift{[](double v) { return v + 1.0; }, "b + 1"};
    const Operator two_step = operator_function(decompose(operator_function(decompose(h), square)),
                                                shift);
    const ScalarFunction1 composed{[](double v) { return v * v + 1.0; }, "a^2 + 1"};
    const Operator one_step = operator_function(decompose(h), composed);
    CHECK((two_step - one_step).frobenius_norm() <= 1e-10);
  }
}

TEST_CASE("joint projector assembly") {
  SUBCASE("projection onto the first argument reproduces decompA x I") {
    Rng rng(305);
    const Operator a1 = random_hermitian(3, rng);
    const Operator b1 = random_hermitian(2, rng);
    const auto joint = joint_function_projectors(
        decompose(a1), decompose(b1), ScalarFunction2{[](double va, double) { return va; }, "a"});
    const auto da = decompose(a1);
    REQUIRE(joint.size() == da.size());
    for (std::size_t i = 0; i < joint.size(); ++i) {
      CHECK(joint.branches()[i].eigenvalue ==
            doctest::Approx(da.branches()[i].eigenvalue).epsilon(1e-12));
      const Matrix expected =
          tensor_product(da.branches()[i].projector, Operator::identity(2)).matrix();
      CHECK((joint.branches()[i].projector.matrix() - expected).norm() <= 1e-10);
    }
  }

  SUBCASE("two-qubit product observable") {
    const auto joint = joint_function_projectors(
        decompose(pauli_z()), decompose(pauli_z()),
        ScalarFunction2{[](double va, double vb) { return va * vb; }, "a * b"});
    REQUIRE(joint.size() == 2);
    CHECK(joint.branches()[0].eigenvalue == doctest::Approx(-1.0));
    CHECK(joint.branches()[0].multiplicity == 2);
    CHECK(joint.branches()[1].eigenvalue == doctest::Approx(1.0));
    CHECK(joint.branches()[1].multiplicity == 2);
    CHECK(joint.dim() == 4);
  }

  SUBCASE("matches decompose of the assembled operator") {
    Rng rng(306);
    const ScalarFunction2 sum{[](double va, double vb) { return va + vb; }, "a + b"};
    for (int round = 0; round < 5; ++round) {
      const Operator a1 = random_hermitian(3, rng);
      const Operator b1 = random_hermitian(2, rng);
      const auto da = decompose(a1, 1e-7);
      const auto db = decompose(b1, 1e-7);
      const auto joint = joint_function_projectors(da, db, sum, 1e-7);
      const auto direct = decompose(joint.reconstruct(), 1e-7);
      REQUIRE(joint.size() == direct.size());
      for (std::size_t i = 0; i < joint.size(); ++i) {
        CHECK(std::abs(joint.branches()[i].eigenvalue - direct.branches()[i].eigenvalue) <= 1e-7);
        CHECK((joint.branches()[i].projector - direct.branches()[i].projector).frobenius_norm() <=
              1e-9);
      }
    }
  }

  SUBCASE("joint family is complete on the product space") {
    Rng rng(307);
    const Operator a1 = random_hermitian(4, rng);
    const Operator b1 = random_hermitian(3, rng);
    const auto joint = joint_function_projectors(
        decompose(a1), decompose(b1),
        ScalarFunction2{[](double va, double vb) { return va * vb; }, "a * b"});
    Matrix sum = Matrix::Zero(12, 12);
    for (const auto& branch : joint.branches()) sum += branch.projector.matrix();
    CHECK((sum - Matrix::Identity(12, 12)).norm() <= 1e-10);
  }
}
