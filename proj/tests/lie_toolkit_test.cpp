#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qslmct/lie_toolkit.hpp"
#include "qslmct/models.hpp"

using namespace qsl;

namespace {

Matrix gm(int i) { return gellmann_basis()[static_cast<size_t>(i - 1)].matrix(); }

// |<x, y>| / (||x|| ||y||): 1 iff parallel up to a global sign/phase.
double parallelness(const Matrix& x, const Matrix& y) {
  return std::abs(hs_inner(x, y)) / (hs_norm(x) * hs_norm(y));
}

}  // namespace

TEST_CASE("su2 pair closes to the full algebra") {
  auto p = pauli_basis();
  auto rep = generate_algebra({p[0], p[1]});
  CHECK(rep.dimension == 3);
  CHECK(rep.fully_controllable);
  std::vector<int> depths;
  for (const auto& e : rep.basis) depths.push_back(e.depth);
  CHECK(depths == std::vector<int>{0, 0, 1});
  CHECK(parallelness(rep.basis[2].element, p[2].matrix()) == doctest::Approx(1.0));
}

TEST_CASE("su3 control pair: dimension, depths and directions") {
  auto model = PhaseControlModel::make_su3();
  auto rep = generate_algebra({HermitianGenerator(model.gen_a),
                               HermitianGenerator(model.gen_b)});
  CHECK(rep.dimension == 8);
  CHECK(rep.fully_controllable);

  std::vector<int> depths;
  for (const auto& e : rep.basis) depths.push_back(e.depth);
  std::vector<int> sorted = depths;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 0, 1, 2, 2, 3, 3, 3});
  CHECK(depths == std::vector<int>{0, 0, 1, 2, 2, 3, 3, 3});  // breadth-first order

  // Nested-commutator directions, independently derived from the Gell-Mann
  // commutation table (each fixed up to a global sign):
  //   depth 1: (2 l3 + l7) / sqrt(5)
  //   depth 2: (4 l2 + l4) / sqrt(17),      (5 l1 - 3 l5) / sqrt(34)
  //   depth 3: (8 l3 + l7) / sqrt(65), l6,  (6.5 l3 + 4 l7 + 1.5 sqrt(3) l8) / sqrt(65)
  const Matrix c = (2 * gm(3) + gm(7)) / std::sqrt(5.0);
  const Matrix d = (4 * gm(2) + gm(4)) / std::sqrt(17.0);
  const Matrix e = (5 * gm(1) - 3 * gm(5)) / std::sqrt(34.0);
  const Matrix f = (8 * gm(3) + gm(7)) / std::sqrt(65.0);
  const Matrix g = gm(6);
  const Matrix h =
      (6.5 * gm(3) + 4 * gm(7) + 1.5 * std::sqrt(3.0) * gm(8)) / std::sqrt(65.0);

  CHECK(parallelness(rep.basis[2].raw, c) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(parallelness(rep.basis[3].raw, d) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(parallelness(rep.basis[4].raw, e) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(parallelness(rep.basis[5].raw, f) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(parallelness(rep.basis[6].raw, g) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(parallelness(rep.basis[7].raw, h) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("structure constants") {
  auto model = PhaseControlModel::make_su3();
  auto rep = generate_algebra({HermitianGenerator(model.gen_a),
                               HermitianGenerator(model.gen_b)});
  // f for the depth-1 element: [chi_A, chi_B] = i f chi_C with f = sqrt(5)/2
  const double f_abc = structure_constant(rep.basis, 0, 1, 2, true);
  CHECK(std::abs(f_abc) == doctest::Approx(std::sqrt(5.0) / 2).epsilon(1e-12));
  // antisymmetry
  CHECK(structure_constant(rep.basis, 1, 0, 2) == doctest::Approx(-f_abc));
  // [chi_A, chi_B] has no component outside chi_C
  CHECK_NOTHROW(structure_constant(rep.basis, 0, 1, 2, true));
}

TEST_CASE("gram-schmidt overlap for the depth-2 direction") {
  auto model = PhaseControlModel::make_su3();
  auto rep = generate_algebra({HermitianGenerator(model.gen_a),
                               HermitianGenerator(model.gen_b)});
  std::vector<Matrix> span = {rep.basis[0].element, rep.basis[1].element,
                              rep.basis[2].element};
  auto [chi, eta] = orthonormalize_with_overlap(rep.basis[3].raw, span);
  CHECK(hs_norm(chi) == doctest::Approx(1.0));
  CHECK(std::abs(eta) == doctest::Approx(3.0 / std::sqrt(34.0)).epsilon(1e-12));
  for (const auto& b : span)
    CHECK(std::abs(hs_inner(b, chi)) < 1e-12);
  // a direction already inside the span is rejected
  CHECK_THROWS_AS(orthonormalize_with_overlap(rep.basis[0].element, span),
                  std::invalid_argument);
}

TEST_CASE("named su3 control basis") {
  auto basis = su3_control_basis();
  REQUIRE(basis.size() == 8);
  for (const auto& b : basis)
    CHECK(hs_norm(b.matrix()) == doctest::Approx(std::sqrt(2.0)));
  CHECK(parallelness(basis[2].matrix(), (2 * gm(3) + gm(7)) / std::sqrt(5.0)) ==
        doctest::Approx(1.0));
  CHECK(parallelness(basis[3].matrix(), (4 * gm(2) + gm(4)) / std::sqrt(17.0)) ==
        doctest::Approx(1.0));
}

TEST_CASE("single generator does not close to su(2)") {
  auto p = pauli_basis();
  auto rep = generate_algebra({p[2]});
  CHECK(rep.dimension == 1);
  CHECK_FALSE(rep.fully_controllable);
}
