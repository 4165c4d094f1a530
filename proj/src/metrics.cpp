#include "qslmct/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qsl {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

void require_unit_state(const CVector& psi) {
  if (std::abs(psi.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("state must be normalized");
  }
}

}  // namespace

double fubini_study(const CVector& psi1, const CVector& psi2) {
  if (psi1.size() != psi2.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  require_unit_state(psi1);
  require_unit_state(psi2);
  return 2.0 * std::acos(clamp01(std::abs(psi1.dot(psi2))));
}

double state_energy_dispersion(const HermitianGenerator& h, const CVector& psi) {
  if (h.dim() != psi.size()) {
    throw std::invalid_argument("dimension mismatch");
  }
  require_unit_state(psi);
  const CVector hpsi = h.matrix() * psi;
  const double mean = psi.dot(hpsi).real();
  const double second = hpsi.squaredNorm();
  return std::sqrt(std::max(0.0, second - mean * mean));
}

ArcResult minimal_covering_arc(const std::vector<double>& phases) {
  if (phases.empty()) {
    throw std::invalid_argument("phase list must be nonempty");
  }
  const int n = static_cast<int>(phases.size());
  std::vector<int> order(phases.size());
  for (int k = 0; k < n; ++k) order[static_cast<size_t>(k)] = k;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return phases[static_cast<size_t>(a)] < phases[static_cast<size_t>(b)]; });

  // largest circular gap between consecutive sorted phases
  double max_gap = -1.0;
  int lo = order[0], hi = order[0];
  for (int k = 0; k < n; ++k) {
    const int a = order[static_cast<size_t>(k)];
    const int b = order[static_cast<size_t>((k + 1) % n)];
    double gap = phases[static_cast<size_t>(b)] - phases[static_cast<size_t>(a)];
    if (k == n - 1) gap += 2.0 * kPi;
    if (gap > max_gap) {
      max_gap = gap;
      lo = a;  // endpoints of the max gap are the extremal phases of the arc
      hi = b;
    }
  }
  ArcResult arc;
  arc.delta = std::max(0.0, 2.0 * kPi - max_gap);
  arc.extremal = {hi, lo};  // arc runs from `hi` around to `lo`
  return arc;
}

double s1_distance(const UnitaryOperator& u, const UnitaryOperator& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("dimension mismatch");
  }
  const UnitaryOperator w(Matrix(u.matrix().adjoint() * v.matrix()));
  const ArcResult arc = minimal_covering_arc(eigenphases(w));
  return std::min(arc.delta, kPi);
}

double s2_distance(const UnitaryOperator& u, const UnitaryOperator& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("dimension mismatch");
  }
  const double overlap = std::abs((u.matrix().adjoint() * v.matrix()).trace());
  return 2.0 * std::acos(clamp01(overlap / static_cast<double>(u.dim())));
}

double delta_epsilon(const HermitianGenerator& h) {
  const Eigen::VectorXd w = hermitian_eigenvalues(h.matrix());
  return w[w.size() - 1] - w[0];
}

double hs_speed(const HermitianGenerator& h) {
  return 2.0 / std::sqrt(static_cast<double>(h.dim())) * hs_norm(h.matrix());
}

namespace {

// Distance from the origin to the convex hull of points in the plane.
// The attainable values of <psi|W|psi> are exactly the convex hull of the
// eigenvalues of W, so this gives the exact minimum overlap modulus.
double origin_to_hull(const std::vector<Complex>& pts) {
  const size_t n = pts.size();
  // Separating-direction test: origin is outside the hull iff some unit
  // direction has a positive dot product with every point. Candidate
  // directions: each point, and each segment normal.
  bool outside = false;
  auto separates = [&](double ux, double uy) {
    for (const Complex& p : pts) {
      if (ux * p.real() + uy * p.imag() <= 1e-15) return false;
    }
    return true;
  };
  for (size_t i = 0; i < n && !outside; ++i) {
    outside = separates(pts[i].real(), pts[i].imag());
    for (size_t j = i + 1; j < n && !outside; ++j) {
      const double ex = pts[j].real() - pts[i].real();
      const double ey = pts[j].imag() - pts[i].imag();
      outside = separates(-ey, ex) || separates(ey, -ex);
    }
  }
  if (!outside) return 0.0;

  double best = std::abs(pts[0]);
  for (size_t i = 0; i < n; ++i) {
    best = std::min(best, std::abs(pts[i]));
    for (size_t j = i + 1; j < n; ++j) {
      // point-segment distance from the origin
      const Complex a = pts[i], b = pts[j];
      const Complex e = b - a;
      const double len2 = std::norm(e);
      if (len2 < 1e-30) continue;
      double t = -(a.real() * e.real() + a.imag() * e.imag()) / len2;
      t = std::min(1.0, std::max(0.0, t));
      best = std::min(best, std::abs(a + t * e));
    }
  }
  return best;
}

}  // namespace

double s1_bruteforce_oracle(const UnitaryOperator& u, const UnitaryOperator& v,
                            int n_samples, Rng& rng) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("dimension mismatch");
  }
  const Matrix w = u.matrix().adjoint() * v.matrix();
  const Eigen::Index d = u.dim();

  double min_overlap = 1.0;
  for (int k = 0; k < n_samples; ++k) {
    const CVector psi = haar_random_state(d, rng);
    min_overlap = std::min(min_overlap, std::abs(psi.dot(Matrix(w) * psi)));
  }

  Eigen::ComplexEigenSolver<Matrix> es(w);
  std::vector<Complex> eigs(static_cast<size_t>(d));
  for (Eigen::Index k = 0; k < d; ++k) eigs[static_cast<size_t>(k)] = es.eigenvalues()[k];

  // equal superposition of every eigenvector pair; covers the analytic
  // optimum built from the two extremal eigenvectors
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) {
      min_overlap = std::min(min_overlap, 0.5 * std::abs(eigs[static_cast<size_t>(i)] + eigs[static_cast<size_t>(j)]));
    }
  }

  min_overlap = std::min(min_overlap, origin_to_hull(eigs));
  return 2.0 * std::acos(clamp01(min_overlap));
}

}  // namespace qsl
