#include <doctest.h>

#include <cmath>

#include "qslmct/operator_core.hpp"

using namespace qsl;

TEST_CASE("hermitian generator validation") {
  Matrix m(2, 2);
  m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;  // sigma_y
  CHECK_NOTHROW(HermitianGenerator{m});

  Matrix bad = m;
  bad(0, 1) = Complex(0.1, -1.0);  // breaks H = H^dag
  CHECK_THROWS_AS(HermitianGenerator{bad}, std::invalid_argument);

  Matrix traced = Matrix::Identity(2, 2);
  CHECK_THROWS_AS(HermitianGenerator{traced}, std::invalid_argument);
}

TEST_CASE("unitary validation") {
  Matrix u(2, 2);
  u << Complex(0.0, 0.0), Complex(0.0, -1.0), Complex(0.0, -1.0), Complex(0.0, 0.0);
  CHECK_NOTHROW(UnitaryOperator{u});  // -i sigma_x, det = 1

  CHECK_THROWS_AS(UnitaryOperator{Matrix(Matrix::Identity(2, 2) * 1.5)},
                  std::invalid_argument);
  Matrix su_violation(2, 2);
  su_violation << 0.0, 1.0, 1.0, 0.0;  // sigma_x: unitary but det = -1
  CHECK_THROWS_AS(UnitaryOperator{su_violation}, std::invalid_argument);
}

TEST_CASE("commutator and inner products") {
  auto p = pauli_basis();
  const Matrix sx = p[0].matrix(), sy = p[1].matrix(), sz = p[2].matrix();
  CHECK((commutator(sx, sy) - Complex(0, 2) * sz).norm() == doctest::Approx(0.0));
  CHECK(hs_inner(sx, sx).real() == doctest::Approx(2.0));
  CHECK(std::abs(hs_inner(sx, sy)) == doctest::Approx(0.0));
  CHECK(hs_norm(sx) == doctest::Approx(std::sqrt(2.0)));
  CHECK_THROWS_AS(commutator(sx, Matrix::Identity(3, 3)), std::invalid_argument);
}

TEST_CASE("matrix exponential of a Pauli rotation") {
  auto p = pauli_basis();
  const double t = 0.731;
  UnitaryOperator u = expm_hermitian(p[0], t);
  Matrix expect(2, 2);
  expect << std::cos(t), Complex(0, -std::sin(t)), Complex(0, -std::sin(t)), std::cos(t);
  CHECK((u.matrix() - expect).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("eigenphases on the principal branch, sorted") {
  Matrix u(2, 2);
  u << Complex(std::cos(2.5), std::sin(2.5)), 0.0, 0.0,
      Complex(std::cos(-2.5), std::sin(-2.5));
  auto ph = eigenphases(UnitaryOperator{u});
  REQUIRE(ph.size() == 2);
  CHECK(ph[0] == doctest::Approx(-2.5));
  CHECK(ph[1] == doctest::Approx(2.5));

  // -1 lands on +pi, not -pi
  Matrix w(2, 2);
  w << -1.0, 0.0, 0.0, -1.0;
  auto ph2 = eigenphases(UnitaryOperator{w});
  CHECK(ph2[0] == doctest::Approx(M_PI));
  CHECK(ph2[1] == doctest::Approx(M_PI));
}

TEST_CASE("generator bases") {
  auto gm = gellmann_basis();
  REQUIRE(gm.size() == 8);
  for (size_t i = 0; i < 8; ++i)
    for (size_t j = 0; j < 8; ++j)
      CHECK(hs_inner(gm[i].matrix(), gm[j].matrix()).real() ==
            doctest::Approx(i == j ? 2.0 : 0.0).epsilon(1e-12));

  auto spin1 = spin_basis(1.0);
  REQUIRE(spin1.size() == 3);
  const Matrix jx = spin1[0].matrix(), jy = spin1[1].matrix(), jz = spin1[2].matrix();
  CHECK(jz(0, 0).real() == doctest::Approx(1.0));
  CHECK(jz(2, 2).real() == doctest::Approx(-1.0));
  CHECK((commutator(jx, jy) - Complex(0, 1) * jz).norm() ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(spin_basis(0.7), std::invalid_argument);
  CHECK_THROWS_AS(spin_basis(-0.5), std::invalid_argument);
}

TEST_CASE("hermitian eigenvalues sorted") {
  auto gm = gellmann_basis();
  auto ev = hermitian_eigenvalues(gm[0].matrix());
  CHECK(ev(0) == doctest::Approx(-1.0));
  CHECK(ev(1) == doctest::Approx(0.0));
  CHECK(ev(2) == doctest::Approx(1.0));
}
