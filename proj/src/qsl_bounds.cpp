#include "qslmct/qsl_bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qsl {

namespace {
constexpr double kPi = std::numbers::pi;

void require_half_integer(double j) {
  if (j <= 0.0 || std::abs(2.0 * j - std::round(2.0 * j)) > 1e-12) {
    throw std::invalid_argument("J must be a positive half-integer");
  }
}
}  // namespace

QslReport qsl_times(const UnitaryOperator& v, double delta_eps_bar,
                    double hnorm_bar) {
  if (delta_eps_bar <= 0.0 || hnorm_bar <= 0.0) {
    throw std::invalid_argument("speed ceilings must be positive");
  }
  const UnitaryOperator identity(Matrix::Identity(v.dim(), v.dim()));
  QslReport r;
  r.s1 = s1_distance(v, identity);
  r.s2 = s2_distance(v, identity);
  r.tau1 = r.s1 / delta_eps_bar;
  r.tau2 = 0.5 * std::sqrt(static_cast<double>(v.dim())) * r.s2 / hnorm_bar;
  r.tau_unified = std::max(r.tau1, r.tau2);
  return r;
}

double spinj_distance(double j, double phi) {
  require_half_integer(j);
  const double half = 0.5 * phi;
  double ratio;
  if (std::abs(std::sin(half)) < 1e-8) {
    // removable singularity at phi -> 0 (and 2*pi-periodic images):
    // ratio = 1 - (phi^2/6) ((J+1/2)^2 - 1/4) + O(phi^4)
    const double a = j + 0.5;
    ratio = 1.0 - (phi * phi / 6.0) * (a * a - 0.25);
  } else {
    ratio = std::sin((j + 0.5) * phi) / ((2.0 * j + 1.0) * std::sin(half));
  }
  ratio = std::min(1.0, std::abs(ratio));
  return 2.0 * std::acos(ratio);
}

double spinj_hnorm(double j) {
  require_half_integer(j);
  return std::sqrt(j * (j + 1.0) * (2.0 * j + 1.0) / 3.0);
}

double spinj_phi_perp(double j) {
  require_half_integer(j);
  return kPi / (j + 0.5);
}

double spinj_tau2(double j, double phi) {
  const double d = 2.0 * j + 1.0;
  return 0.5 * std::sqrt(d) * spinj_distance(j, phi) / spinj_hnorm(j);
}

std::vector<std::pair<double, double>> classical_limit_table(
    const std::vector<double>& j_list) {
  std::vector<std::pair<double, double>> table;
  table.reserve(j_list.size());
  double prev = std::numeric_limits<double>::infinity();
  for (double j : j_list) {
    const double tau = spinj_tau2(j, spinj_phi_perp(j));
    if (tau >= prev) {
      throw std::logic_error("classical-limit tau column is not strictly decreasing");
    }
    table.emplace_back(j, tau);
    prev = tau;
  }
  return table;
}

}  // namespace qsl
