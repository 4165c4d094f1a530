#include "qslmct/operator_core.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qsl {

namespace {

void require_square(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("matrix must be square and non-empty");
  }
  if (!m.allFinite()) {
    throw std::invalid_argument("matrix entries must be finite");
  }
}

void require_same_dim(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw std::invalid_argument("dimension mismatch");
  }
}

}  // namespace

bool is_hermitian(const Matrix& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

bool is_traceless(const Matrix& m, double tol) {
  return std::abs(m.trace()) <= tol;
}

bool is_unitary(const Matrix& m, double tol) {
  const Matrix gram = m.adjoint() * m;
  return (gram - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

HermitianGenerator::HermitianGenerator(Matrix m) : m_(std::move(m)) {
  require_square(m_);
  if (!is_hermitian(m_)) {
    throw std::invalid_argument("generator must be Hermitian");
  }
  if (!is_traceless(m_)) {
    throw std::invalid_argument("generator must be traceless");
  }
  // symmetrize away the residual anti-Hermitian roundoff
  m_ = 0.5 * (m_ + m_.adjoint().eval());
}

UnitaryOperator::UnitaryOperator(Matrix m) : m_(std::move(m)) {
  require_square(m_);
  if (!is_unitary(m_)) {
    throw std::invalid_argument("operator must be unitary");
  }
  if (std::abs(m_.determinant() - Complex(1.0, 0.0)) > kUnitaryTol) {
    throw std::invalid_argument("operator must have unit determinant (SU(d))");
  }
}

Matrix commutator(const Matrix& x, const Matrix& y) {
  require_square(x);
  require_same_dim(x, y);
  return x * y - y * x;
}

Complex hs_inner(const Matrix& x, const Matrix& y) {
  require_same_dim(x, y);
  return (x.adjoint() * y).trace();
}

double hs_norm(const Matrix& x) {
  return x.norm();  // Frobenius norm = sqrt(tr(X^dag X))
}

UnitaryOperator expm_hermitian(const HermitianGenerator& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.matrix());
  const Eigen::VectorXd w = es.eigenvalues();
  CVector phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    phases[k] = std::exp(Complex(0.0, -w[k] * t));
  }
  Matrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  return UnitaryOperator(std::move(u));
}

std::vector<double> eigenphases(const UnitaryOperator& u) {
  Eigen::ComplexEigenSolver<Matrix> es(u.matrix(), /*computeEigenvectors=*/false);
  std::vector<double> phases(static_cast<size_t>(u.dim()));
  for (Eigen::Index k = 0; k < u.dim(); ++k) {
    double phi = std::arg(es.eigenvalues()[k]);
    if (phi <= -std::numbers::pi) {
      phi = std::numbers::pi;  // principal branch (-pi, pi]
    }
    phases[static_cast<size_t>(k)] = phi;
  }
  std::sort(phases.begin(), phases.end());
  return phases;
}

Eigen::VectorXd hermitian_eigenvalues(const Matrix& h) {
  if (!is_hermitian(h, 1e-10)) {
    throw std::invalid_argument("expected a Hermitian matrix");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

std::vector<HermitianGenerator> pauli_basis() {
  const Complex i(0.0, 1.0);
  Matrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, -i, i, 0;
  sz << 1, 0, 0, -1;
  return {HermitianGenerator(sx), HermitianGenerator(sy), HermitianGenerator(sz)};
}

std::vector<HermitianGenerator> gellmann_basis() {
  const Complex i(0.0, 1.0);
  std::vector<Matrix> l(8, Matrix::Zero(3, 3));
  l[0](0, 1) = 1; l[0](1, 0) = 1;
  l[1](0, 1) = -i; l[1](1, 0) = i;
  l[2](0, 0) = 1; l[2](1, 1) = -1;
  l[3](0, 2) = 1; l[3](2, 0) = 1;
  l[4](0, 2) = -i; l[4](2, 0) = i;
  l[5](1, 2) = 1; l[5](2, 1) = 1;
  l[6](1, 2) = -i; l[6](2, 1) = i;
  const double r3 = 1.0 / std::sqrt(3.0);
  l[7](0, 0) = r3; l[7](1, 1) = r3; l[7](2, 2) = -2.0 * r3;
  std::vector<HermitianGenerator> out;
  out.reserve(8);
  for (auto& m : l) out.emplace_back(std::move(m));
  return out;
}

std::vector<HermitianGenerator> spin_basis(double j) {
  const double twoj = 2.0 * j;
  if (j <= 0.0 || std::abs(twoj - std::round(twoj)) > 1e-12) {
    throw std::invalid_argument("J must be a positive half-integer");
  }
  const Eigen::Index d = static_cast<Eigen::Index>(std::llround(twoj)) + 1;
  Matrix jz = Matrix::Zero(d, d), jp = Matrix::Zero(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    const double m = j - static_cast<double>(k);
    jz(k, k) = m;
    if (k > 0) {
      const double mlow = m + 1.0;  // raising from |j, m> to |j, m+1>
      jp(k - 1, k) = std::sqrt(j * (j + 1.0) - (mlow - 1.0) * mlow);
    }
  }
  const Complex i(0.0, 1.0);
  Matrix jx = 0.5 * (jp + Matrix(jp.adjoint()));
  Matrix jy = -0.5 * i * (jp - Matrix(jp.adjoint()));
  return {HermitianGenerator(jx), HermitianGenerator(jy), HermitianGenerator(jz)};
}

}  // namespace qsl
