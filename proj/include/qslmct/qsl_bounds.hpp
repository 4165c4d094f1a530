// qsl_bounds.hpp — geometric quantum-speed-limit times for unitary targets
// and the spin-J classical-limit formulas. Times are in units of 1/Omega.
//
// The ceilings delta_eps_bar and hnorm_bar are supplied by the caller; the
// phase-control models provide exact constants (the library never guesses a
// mean speed). For a time-independent drive and a maximally distant state
// the state-space version reduces to the Mandelstam-Tamm bound
// T >= pi / (2 DeltaE).
#pragma once

#include <vector>

#include "qslmct/metrics.hpp"

namespace qsl {

struct QslReport {
  double s1 = 0.0;
  double s2 = 0.0;
  double tau1 = 0.0;
  double tau2 = 0.0;
  double tau_unified = 0.0;  // max(tau1, tau2)
};

/// tau1 = S1(V, I) / delta_eps_bar, tau2 = (sqrt(d)/2) S2(V, I) / hnorm_bar.
/// Throws on nonpositive ceilings.
QslReport qsl_times(const UnitaryOperator& v, double delta_eps_bar,
                    double hnorm_bar);

/// S2 distance of the spin-J rotation V_n(phi) = exp(-i J_n phi) from the
/// identity: 2 arccos|sin((J+1/2)phi) / ((2J+1) sin(phi/2))|.
double spinj_distance(double j, double phi);

/// ||H|| = Omega sqrt(J(J+1)(2J+1)/3) for the spin-J phase-control drive,
/// in units of Omega.
double spinj_hnorm(double j);

/// Angle of maximum distinguishability phi_perp = pi / (J + 1/2).
double spinj_phi_perp(double j);

/// tau2 for the spin-J rotation target, composing the S2 bound with the
/// spin-J drive norm.
double spinj_tau2(double j, double phi);

/// (J, tau2 at phi_perp) for each J in ascending `j_list`. Throws if the tau
/// column fails to decrease strictly.
std::vector<std::pair<double, double>> classical_limit_table(
    const std::vector<double>& j_list);

}  // namespace qsl
