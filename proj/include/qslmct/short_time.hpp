// short_time.hpp — perturbative expansion A(s) = sum_n A^(n) s^n of the
// evolution-operator generator (Bernoulli / adjoint series) up to order 5,
// and the analytic short-time lower bounds on the minimum control time.
// Dimensionless units: h = H / Omega, s = Omega t.
#pragma once

#include <utility>
#include <vector>

#include "qslmct/lie_toolkit.hpp"
#include "qslmct/operator_core.hpp"
#include "qslmct/random.hpp"

namespace qsl {

/// Polynomial drive h(s) = sum_n h^(n) s^n with traceless Hermitian
/// coefficients. `phase` marks the fixed-amplitude form
/// eps_A = E cos(alpha(s)), eps_B = E sin(alpha(s)) on an orthonormal
/// generator pair.
struct TaylorDrive {
  std::vector<Matrix> coeffs;  // h^(0) .. h^(order)
  bool phase = false;
  double amplitude = 0.0;            // E, phase form only
  std::vector<double> alpha_coeffs;  // alpha(s) Taylor coefficients, phase form

  int order() const { return static_cast<int>(coeffs.size()) - 1; }

  static TaylorDrive general(const std::vector<HermitianGenerator>& hs);

  /// Phase-control drive on the unit-norm pair (chi_a, chi_b); Taylor
  /// coefficients of E cos(alpha(s)), E sin(alpha(s)) are expanded up to
  /// s^order.
  static TaylorDrive phase_control(double field_amplitude,
                                   const std::vector<double>& alpha,
                                   const Matrix& chi_a, const Matrix& chi_b,
                                   int order);

  /// Hamiltonian value h(s).
  Matrix at(double s) const;
};

struct GeneratorExpansion {
  std::vector<Matrix> terms;  // A^(1) .. A^(order)

  /// Component table a^(n)_mu = tr(chi_mu A^(n)) in an orthonormal basis;
  /// rows follow `terms`, columns follow `basis`.
  std::vector<std::vector<double>> components(const std::vector<Matrix>& basis) const;
};

/// Solve the adjoint series n A^(n) = [s^(n-1)] sum_m (B_m / m!) (-i)^m
/// ad_A^m h iteratively for A^(1)..A^(order), order <= 5, with the
/// B_1 = -1/2 Bernoulli convention. Requires drive order >= order - 1.
GeneratorExpansion generator_expansion(const TaylorDrive& drive, int order);

struct OrderCheckResult {
  bool exact = false;  // remainder at machine precision everywhere
  double slope = 0.0;  // log-log slope of the remainder, when not exact
};

/// Remainder r(s) = ||U_exact(s) - exp(-i sum_{n<=N} A^(n) s^n)|| against a
/// fine-step fourth-order reference propagation, fitted log-log over s_grid.
/// Points below the numerical noise floor are excluded from the fit.
OrderCheckResult order_accuracy_check(const TaylorDrive& drive, int truncation_order,
                                      const std::vector<double>& s_grid);

/// s_A >= beta / E: time to reach component beta along a directly driven
/// element.
double bound_sA(double beta, double field_amplitude);

/// s_C >= sqrt(12 beta / (f_ABC E^2)): depth-1 element.
double bound_sC(double beta, double f_abc, double field_amplitude);

/// s_D >= (18 beta / (f_ABC f_ACD E^3))^(1/3): depth-2 element. `eta`
/// rescales f_ACD when the depth-2 direction was Gram-Schmidt
/// orthogonalized against the basis (eta = tr(chi_D chi~_D), default 1).
double bound_sD(double beta, double f_abc, double f_acd, double field_amplitude,
                double eta = 1.0);

/// SU(2) phase-control bounds (T_x, T_z) for the targets exp(-i sigma_n phi/2),
/// composed from bound_sA / bound_sC with constants derived from the model
/// generators (chi = sigma/sqrt(2), E = 1/sqrt(2), beta = phi/sqrt(2)).
std::pair<double, double> su2_mct_bounds(double phi);

struct Su3ShortTimeBounds {
  double t_a = 0.0;
  double t_c = 0.0;
  double t_d = 0.0;
};

/// SU(3) bounds (T_A, T_C, T_D) for the targets exp(-i lambda_X phi), with
/// structure constants and the depth-2 overlap eta taken from the algebra
/// report of the su3 model generators.
Su3ShortTimeBounds su3_mct_bounds(double phi, const AlgebraReport& report);

/// Check |F(eps)| <= (20/3) E^3 for a phase-control drive over s_grid, where
/// F is the cubic-order combination of the field Taylor coefficients that
/// feeds the depth-2 component a_D.
bool f_epsilon_bound_check(const TaylorDrive& phase_drive,
                           const std::vector<double>& s_grid);

/// Reference fine-step propagator for a polynomial drive (fourth-order
/// two-node scheme); exposed for tests.
Matrix propagate_taylor_reference(const TaylorDrive& drive, double s, int n_steps);

}  // namespace qsl
