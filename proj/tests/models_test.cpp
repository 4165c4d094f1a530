#include <doctest.h>

#include <cmath>

#include "qslmct/lie_toolkit.hpp"
#include "qslmct/models.hpp"

using namespace qsl;

TEST_CASE("model constants") {
  auto su2 = PhaseControlModel::make_su2();
  CHECK(su2.dim == 2);
  CHECK(su2.delta_eps_bar() == doctest::Approx(1.0));       // Delta-eps = Omega
  CHECK(su2.hnorm_bar() == doctest::Approx(1 / std::sqrt(2.0)));

  auto su3 = PhaseControlModel::make_su3();
  CHECK(su3.dim == 3);
  CHECK(su3.delta_eps_bar() == doctest::Approx(1.0));
  // dS2/dt = (2/sqrt(3)) ||H|| = sqrt(2/3) Omega
  CHECK(2.0 / std::sqrt(3.0) * su3.hnorm_bar() == doctest::Approx(std::sqrt(2.0 / 3.0)));

  auto spin = PhaseControlModel::make_spin(1.5);
  CHECK(spin.dim == 4);
  CHECK(spin.hnorm_bar() == doctest::Approx(std::sqrt(1.5 * 2.5 * 4.0 / 3.0)));
}

TEST_CASE("hamiltonian_at interpolates the generator pair") {
  auto su2 = PhaseControlModel::make_su2();
  CHECK((hamiltonian_at(su2, 0.0).matrix() - 0.5 * su2.gen_a).norm() ==
        doctest::Approx(0.0));
  CHECK((hamiltonian_at(su2, M_PI / 2).matrix() - 0.5 * su2.gen_b).norm() ==
        doctest::Approx(0.0).epsilon(1e-12));
  // norm is alpha-independent
  for (double a : {0.3, 1.2, 2.9})
    CHECK(hamiltonian_at(su2, a).matrix().norm() ==
          doctest::Approx(hamiltonian_at(su2, 0.0).matrix().norm()));
}

TEST_CASE("piecewise propagation is time ordered") {
  auto su2 = PhaseControlModel::make_su2();
  ControlField f{2, 1.0, {0.0, M_PI / 2}};
  UnitaryOperator u = propagate(su2, f);
  const Matrix u1 = expm_hermitian(hamiltonian_at(su2, 0.0), 0.5).matrix();
  const Matrix u2 = expm_hermitian(hamiltonian_at(su2, M_PI / 2), 0.5).matrix();
  CHECK((u.matrix() - u2 * u1).norm() == doctest::Approx(0.0).epsilon(1e-12));

  std::vector<Matrix> traj;
  propagate(su2, f, &traj);
  REQUIRE(traj.size() == 2);
  CHECK((traj[0] - u1).norm() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK((traj[1] - u.matrix()).norm() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("constant field reproduces the exponential") {
  auto su3 = PhaseControlModel::make_su3();
  ControlField f{40, 2.0, std::vector<double>(40, 0.7)};
  UnitaryOperator expect = expm_hermitian(hamiltonian_at(su3, 0.7), 2.0);
  CHECK((propagate(su3, f).matrix() - expect.matrix()).norm() ==
        doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("target families") {
  auto su2 = PhaseControlModel::make_su2();
  auto p = pauli_basis();
  const double phi = 1.1;
  CHECK((target(su2, TargetSpec{"x", phi}).matrix() -
         expm_hermitian(HermitianGenerator(0.5 * p[0].matrix()), phi).matrix())
            .norm() == doctest::Approx(0.0));

  auto su3 = PhaseControlModel::make_su3();
  auto named = su3_control_basis();
  CHECK((target(su3, TargetSpec{"D", phi}).matrix() -
         expm_hermitian(named[3], phi).matrix())
            .norm() == doctest::Approx(0.0));

  auto spin = PhaseControlModel::make_spin(1.0);
  auto jb = spin_basis(1.0);
  CHECK((target(spin, TargetSpec{"z", phi}).matrix() -
         expm_hermitian(jb[2], phi).matrix())
            .norm() == doctest::Approx(0.0));

  CHECK_THROWS_AS(target(su3, TargetSpec{"Q", phi}), std::invalid_argument);
  CHECK_THROWS_AS(target(su2, TargetSpec{"A", phi}), std::invalid_argument);
}

TEST_CASE("spin model requires half-integer positive j") {
  CHECK_THROWS_AS(PhaseControlModel::make_spin(0.8), std::invalid_argument);
  CHECK_NOTHROW(PhaseControlModel::make_spin(2.5));
}
