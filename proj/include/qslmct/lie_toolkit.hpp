// lie_toolkit.hpp — dynamical Lie algebra generation from control
// generators: breadth-first commutator closure with depth tags,
// controllability test, Gram-Schmidt orthonormalization and structure
// constants.
#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "qslmct/operator_core.hpp"

namespace qsl {

/// One element of the generated algebra. `element` is orthonormalized
/// against all earlier basis elements (tr(chi^2) = 1); `raw` is the
/// unit-norm direction of the nested commutator that produced it, before
/// orthogonalization. `depth` is the minimum number of commutation
/// operations needed to reach the element from the inputs.
struct DepthTaggedElement {
  Matrix element;
  Matrix raw;
  int depth = 0;
  std::string expression;  // provenance, e.g. "[g0,[g0,g1]]"
};

struct AlgebraReport {
  std::vector<DepthTaggedElement> basis;
  int dimension = 0;
  bool fully_controllable = false;
  std::map<std::tuple<int, int, int>, double> structure_constants;
};

/// Breadth-first closure of {generators} under commutation. A candidate is
/// kept iff its component orthogonal to the current span exceeds `tol`;
/// its depth is 1 + max depth of the generating pair, minimized over the
/// pairs encountered in breadth-first order. Throws on non-traceless input.
AlgebraReport generate_algebra(const std::vector<HermitianGenerator>& generators,
                               double tol = 1e-10);

/// f_ABC with [chi_A, chi_B] = i f_ABC chi_C for an orthonormal basis.
/// With `assert_proportional`, throws if [chi_A, chi_B] has components
/// outside chi_C beyond `tol`.
double structure_constant(const std::vector<DepthTaggedElement>& basis,
                          int a, int b, int c,
                          bool assert_proportional = false, double tol = 1e-9);

/// Gram-Schmidt step: orthogonalize unit-norm `raw` against an orthonormal
/// basis, renormalize, and report the overlap eta = tr(chi * raw).
/// Throws if `raw` lies in the span of the basis.
std::pair<Matrix, double> orthonormalize_with_overlap(
    const Matrix& raw, const std::vector<Matrix>& basis, double tol = 1e-10);

/// The eight su(3) basis elements lambda_A..lambda_H generated by nested
/// commutators of lambda_A = l1 and lambda_B = (l2 + l4)/sqrt(2), evaluated
/// numerically and normalized so tr(lambda_X^2) = 2. Asserts linear
/// independence of the full set.
std::vector<HermitianGenerator> su3_control_basis();

}  // namespace qsl
