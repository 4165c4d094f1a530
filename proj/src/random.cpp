#include "qslmct/random.hpp"

#include <cmath>
#include <numbers>

namespace qsl {

double uniform(Rng& rng, double lo, double hi) {
  // 53-bit mantissa draw; identical across platforms for a given engine state.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

double gaussian(Rng& rng) {
  double u1 = uniform(rng, 0.0, 1.0);
  while (u1 <= 0.0) u1 = uniform(rng, 0.0, 1.0);
  const double u2 = uniform(rng, 0.0, 1.0);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

CVector haar_random_state(Eigen::Index d, Rng& rng) {
  CVector psi(d);
  for (Eigen::Index k = 0; k < d; ++k) {
    psi[k] = Complex(gaussian(rng), gaussian(rng));
  }
  return psi / psi.norm();
}

UnitaryOperator haar_random_unitary(Eigen::Index d, Rng& rng) {
  Matrix g(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      g(r, c) = Complex(gaussian(rng), gaussian(rng));
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < d; ++k) {
    const Complex rkk = r(k, k);
    q.col(k) *= rkk / std::abs(rkk);  // fix the phase gauge
  }
  // project onto SU(d)
  const Complex det = q.determinant();
  q *= std::pow(det, -1.0 / static_cast<double>(d));
  return UnitaryOperator(std::move(q));
}

HermitianGenerator random_hermitian(Eigen::Index d, Rng& rng) {
  Matrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) {
      m(r, c) = Complex(gaussian(rng), gaussian(rng));
    }
  }
  Matrix h = 0.5 * (m + m.adjoint().eval());
  h -= (h.trace() / static_cast<double>(d)) * Matrix::Identity(d, d);
  return HermitianGenerator(std::move(h));
}

}  // namespace qsl
