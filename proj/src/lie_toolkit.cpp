#include "qslmct/lie_toolkit.hpp"

#include <cmath>
#include <stdexcept>

namespace qsl {

namespace {

// Component of x orthogonal to the orthonormal set `basis`.
Matrix orthogonal_residual(const Matrix& x, const std::vector<Matrix>& basis) {
  Matrix r = x;
  for (const Matrix& b : basis) {
    r -= hs_inner(b, r) * b;
  }
  return r;
}

}  // namespace

std::pair<Matrix, double> orthonormalize_with_overlap(
    const Matrix& raw, const std::vector<Matrix>& basis, double tol) {
  if (std::abs(hs_norm(raw) - 1.0) > 1e-9) {
    throw std::invalid_argument("raw element must have unit Hilbert-Schmidt norm");
  }
  Matrix r = orthogonal_residual(raw, basis);
  const double n = hs_norm(r);
  if (n <= tol) {
    throw std::invalid_argument("raw element lies in the span of the basis");
  }
  Matrix chi = r / n;
  const double eta = hs_inner(chi, raw).real();
  return {std::move(chi), eta};
}

AlgebraReport generate_algebra(const std::vector<HermitianGenerator>& generators,
                               double tol) {
  if (generators.empty()) {
    throw std::invalid_argument("need at least one generator");
  }
  if (tol <= 0.0) {
    throw std::invalid_argument("tol must be positive");
  }
  const Eigen::Index d = generators[0].dim();

  AlgebraReport report;
  std::vector<Matrix> span;  // orthonormal, tracks report.basis

  auto try_add = [&](const Matrix& candidate, int depth, const std::string& expr) {
    const double cn = hs_norm(candidate);
    if (cn <= tol) return false;
    const Matrix unit = candidate / cn;
    Matrix resid = orthogonal_residual(unit, span);
    const double rn = hs_norm(resid);
    if (rn <= tol) return false;
    DepthTaggedElement e;
    e.element = resid / rn;
    e.raw = unit;
    e.depth = depth;
    e.expression = expr;
    span.push_back(e.element);
    report.basis.push_back(std::move(e));
    return true;
  };

  for (size_t k = 0; k < generators.size(); ++k) {
    if (generators[k].dim() != d) {
      throw std::invalid_argument("generators must share a dimension");
    }
    try_add(generators[k].matrix(), 0, "g" + std::to_string(k));
  }

  const size_t max_dim = static_cast<size_t>(d * d - 1);
  // Layered sweeps: in layer L we commute pairs whose depths satisfy
  // 1 + max(depth_i, depth_j) == L, so the first layer that reaches an
  // element records its minimum depth.
  for (int layer = 1; report.basis.size() < max_dim; ++layer) {
    bool added = false;
    const size_t n_before = report.basis.size();
    for (size_t i = 0; i < n_before && report.basis.size() < max_dim; ++i) {
      for (size_t j = i + 1; j < n_before && report.basis.size() < max_dim; ++j) {
        const int dep = 1 + std::max(report.basis[i].depth, report.basis[j].depth);
        if (dep != layer) continue;
        // raw commutator direction; -i[X, Y] keeps it Hermitian
        const Matrix c = Complex(0.0, -1.0) *
                         commutator(report.basis[i].raw, report.basis[j].raw);
        added |= try_add(c, dep,
                         "[" + report.basis[i].expression + "," +
                             report.basis[j].expression + "]");
      }
    }
    if (!added) {
      // no element at this layer; if no deeper pairs remain either, close
      bool deeper_possible = false;
      for (size_t i = 0; i < n_before && !deeper_possible; ++i) {
        for (size_t j = i + 1; j < n_before; ++j) {
          if (1 + std::max(report.basis[i].depth, report.basis[j].depth) > layer) {
            deeper_possible = true;
            break;
          }
        }
      }
      if (!deeper_possible) break;
    }
  }

  report.dimension = static_cast<int>(report.basis.size());
  report.fully_controllable = report.dimension == static_cast<int>(max_dim);

  // structure constants over the orthonormal basis
  for (size_t a = 0; a < report.basis.size(); ++a) {
    for (size_t b = a + 1; b < report.basis.size(); ++b) {
      const Matrix c = commutator(report.basis[a].element, report.basis[b].element);
      for (size_t k = 0; k < report.basis.size(); ++k) {
        const double f = hs_inner(report.basis[k].element, c).imag();
        if (std::abs(f) > 1e-12) {
          report.structure_constants[{static_cast<int>(a), static_cast<int>(b),
                                      static_cast<int>(k)}] = f;
        }
      }
    }
  }
  return report;
}

double structure_constant(const std::vector<DepthTaggedElement>& basis,
                          int a, int b, int c,
                          bool assert_proportional, double tol) {
  const auto& ca = basis.at(static_cast<size_t>(a)).element;
  const auto& cb = basis.at(static_cast<size_t>(b)).element;
  const auto& cc = basis.at(static_cast<size_t>(c)).element;
  const Matrix k = commutator(ca, cb);
  // [chi_a, chi_b] = i f chi_c  =>  f = Im tr(chi_c [chi_a, chi_b])
  const double f = hs_inner(cc, k).imag();
  if (assert_proportional) {
    const Matrix resid = k - Complex(0.0, 1.0) * f * cc;
    if (hs_norm(resid) > tol) {
      throw std::invalid_argument(
          "commutator is not proportional to the requested basis element");
    }
  }
  return f;
}

std::vector<HermitianGenerator> su3_control_basis() {
  const auto gm = gellmann_basis();
  const double r2 = std::sqrt(2.0);
  const Matrix la = gm[0].matrix();                               // l1
  const Matrix lb = (gm[1].matrix() + gm[3].matrix()) / r2;       // (l2+l4)/sqrt(2)

  auto herm_dir = [r2](const Matrix& anti) {
    // -i[X, Y] is Hermitian for Hermitian X, Y; rescale to tr(l^2) = 2
    Matrix h = Complex(0.0, -1.0) * anti;
    return Matrix(h * (r2 / hs_norm(h)));
  };
  const Matrix lc = herm_dir(commutator(la, lb));
  const Matrix ld = herm_dir(commutator(la, lc));
  const Matrix le = herm_dir(commutator(lb, lc));
  const Matrix lf = herm_dir(commutator(la, ld));
  const Matrix lg = herm_dir(commutator(la, le));
  const Matrix lh = herm_dir(commutator(lb, le));

  const std::vector<Matrix> mats = {la, lb, lc, ld, le, lf, lg, lh};
  // rank check via singular values of the coefficient matrix
  Eigen::MatrixXcd coeff(8, 9);
  for (int k = 0; k < 8; ++k) {
    coeff.row(k) = Eigen::Map<const Eigen::VectorXcd>(mats[static_cast<size_t>(k)].data(), 9);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coeff);
  if (svd.singularValues()[7] < 1e-10) {
    throw std::logic_error("su3 control basis is not linearly independent");
  }
  std::vector<HermitianGenerator> out;
  out.reserve(8);
  for (const auto& m : mats) out.emplace_back(m);
  return out;
}

}  // namespace qsl
