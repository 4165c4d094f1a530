#include <doctest.h>

#include <cmath>

#include "qslmct/models.hpp"
#include "qslmct/qsl_bounds.hpp"

using namespace qsl;

TEST_CASE("su2 axis rotations: both bounds give phi") {
  auto model = PhaseControlModel::make_su2();
  for (double phi : {0.1, 0.5, 1.0, M_PI}) {
    for (const char* axis : {"x", "y", "z"}) {
      auto v = target(model, TargetSpec{axis, phi});
      auto q = qsl_times(v, model.delta_eps_bar(), model.hnorm_bar());
      CHECK(q.tau1 == doctest::Approx(phi).epsilon(1e-12));
      CHECK(q.tau2 == doctest::Approx(phi).epsilon(1e-12));
      CHECK(q.tau_unified == doctest::Approx(phi).epsilon(1e-12));
    }
  }
  // arbitrary axis
  TargetSpec tilted{"n", 0.7};
  tilted.axis = Eigen::Vector3d(1.0, 2.0, -0.5).normalized();
  tilted.use_axis = true;
  auto q = qsl_times(target(model, tilted), model.delta_eps_bar(), model.hnorm_bar());
  CHECK(q.tau_unified == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("qsl_times validates ceilings") {
  UnitaryOperator id{Matrix::Identity(2, 2)};
  CHECK_THROWS_AS(qsl_times(id, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(qsl_times(id, 1.0, -1.0), std::invalid_argument);
}

TEST_CASE("su3 bounds against direct metric evaluation") {
  auto model = PhaseControlModel::make_su3();
  for (double phi : {0.3, 1.0, 2.0}) {
    auto v = target(model, TargetSpec{"C", phi});
    auto q = qsl_times(v, model.delta_eps_bar(), model.hnorm_bar());
    CHECK(q.tau1 == doctest::Approx(s1_distance(v, UnitaryOperator{
                        Matrix::Identity(3, 3)})));  // delta_eps_bar = Omega = 1
    CHECK(q.tau2 ==
          doctest::Approx(s2_distance(v, UnitaryOperator{Matrix::Identity(3, 3)}) /
                          std::sqrt(2.0 / 3.0)));
    CHECK(q.tau_unified == doctest::Approx(std::max(q.tau1, q.tau2)));
  }
}

TEST_CASE("spin-j distance formula matches diagonalization") {
  for (double j : {0.5, 1.0, 2.5, 7.0}) {
    auto basis = spin_basis(j);
    for (double phi : {0.2, 0.9, 2.8}) {
      const UnitaryOperator v = expm_hermitian(basis[2], phi);
      const double direct =
          s2_distance(UnitaryOperator{Matrix::Identity(v.dim(), v.dim())}, v);
      CHECK(spinj_distance(j, phi) == doctest::Approx(direct).epsilon(1e-10));
    }
    // removable singularity at phi -> 0
    CHECK(spinj_distance(j, 1e-12) == doctest::Approx(0.0));
  }
}

TEST_CASE("spin-j drive norm and phi_perp") {
  CHECK(spinj_hnorm(0.5) == doctest::Approx(std::sqrt(0.5 * 1.5 * 2.0 / 3.0)));
  CHECK(spinj_phi_perp(0.5) == doctest::Approx(M_PI));
  CHECK(spinj_phi_perp(4.5) == doctest::Approx(M_PI / 5.0));

  // phi_perp maximizes the distance: grid search comparison
  for (double j : {1.0, 3.5, 10.0}) {
    double best_phi = 0.0, best = -1.0;
    for (double phi = 1e-4; phi <= M_PI; phi += 1e-4) {
      const double s = spinj_distance(j, phi);
      if (s > best) {
        best = s;
        best_phi = phi;
      }
    }
    CHECK(std::abs(best_phi - spinj_phi_perp(j)) < 1e-3);
  }
}

TEST_CASE("classical limit: tau vanishes with growing j") {
  std::vector<double> js;
  for (double j = 0.5; j <= 50.0; j += 0.5) js.push_back(j);
  auto table = classical_limit_table(js);
  REQUIRE(table.size() == js.size());
  for (size_t i = 1; i < table.size(); ++i)
    CHECK(table[i].second < table[i - 1].second);
  CHECK(table.back().second / table.front().second < 0.1);
}
