// operator_core.hpp — dense complex linear algebra for small Hermitian and
// unitary matrices: commutators, Hilbert-Schmidt products, spectral matrix
// exponentials, eigenphases and the standard generator bases.
#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <vector>

namespace qsl {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;

/// Traceless Hermitian d x d matrix, in units of the Rabi frequency when
/// bound to a model. Validates H = H^dag and tr(H) = 0 on construction.
class HermitianGenerator {
 public:
  explicit HermitianGenerator(Matrix m);

  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Matrix m_;
};

/// Element of SU(d). Validates U^dag U = I and |det U - 1| <= 1e-10.
class UnitaryOperator {
 public:
  explicit UnitaryOperator(Matrix m);

  const Matrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  Matrix m_;
};

/// XY - YX. Throws std::invalid_argument on dimension mismatch.
Matrix commutator(const Matrix& x, const Matrix& y);

/// tr(X^dag Y).
Complex hs_inner(const Matrix& x, const Matrix& y);

/// sqrt(tr(X^dag X)).
double hs_norm(const Matrix& x);

/// e^{-iHt} via spectral decomposition of H. Exact up to the
/// eigendecomposition for the small dimensions used here.
UnitaryOperator expm_hermitian(const HermitianGenerator& h, double t);

/// Phases of the eigenvalues of U on the principal branch (-pi, pi],
/// sorted ascending.
std::vector<double> eigenphases(const UnitaryOperator& u);

/// Ascending eigenvalues of a Hermitian matrix.
Eigen::VectorXd hermitian_eigenvalues(const Matrix& h);

/// The three Pauli matrices sigma_x, sigma_y, sigma_z.
std::vector<HermitianGenerator> pauli_basis();

/// The eight Gell-Mann matrices, normalized so tr(l_i l_j) = 2 delta_ij.
std::vector<HermitianGenerator> gellmann_basis();

/// Spin operators {J_x, J_y, J_z} for half-integer J, with [Jx, Jy] = i Jz.
std::vector<HermitianGenerator> spin_basis(double j);

bool is_hermitian(const Matrix& m, double tol = kHermitianTol);
bool is_traceless(const Matrix& m, double tol = kHermitianTol);
bool is_unitary(const Matrix& m, double tol = kUnitaryTol);

}  // namespace qsl
