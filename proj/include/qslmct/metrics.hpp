// metrics.hpp — distances for states and unitaries: Fubini-Study, the
// worst-case state distance S1 (minimal eigenphase covering arc), the trace
// overlap distance S2, and the instantaneous speeds that enter the
// Anandan-Aharonov relations.
#pragma once

#include <utility>
#include <vector>

#include "qslmct/operator_core.hpp"
#include "qslmct/random.hpp"

namespace qsl {

/// Minimal closed arc on the unit circle containing a set of phases.
/// `extremal` identifies the two phases furthest apart along the arc
/// (the endpoints of the largest circular gap).
struct ArcResult {
  double delta = 0.0;  // arc length, in [0, 2*pi)
  std::pair<int, int> extremal{0, 0};
};

/// Fubini-Study distance 2 arccos|<psi1|psi2>|, in [0, pi].
double fubini_study(const CVector& psi1, const CVector& psi2);

/// Energy dispersion sqrt(<H^2> - <H>^2) of H in the state psi.
double state_energy_dispersion(const HermitianGenerator& h, const CVector& psi);

/// Shortest closed arc covering all phases (given on the branch (-pi, pi]).
/// Duplicates are kept; a single phase gives delta = 0.
ArcResult minimal_covering_arc(const std::vector<double>& phases);

/// Worst-case state distance S1(U, V) = min(delta, pi), with delta the
/// covering arc of the eigenphases of W = U^dag V.
double s1_distance(const UnitaryOperator& u, const UnitaryOperator& v);

/// Trace overlap distance S2(U, V) = 2 arccos(|tr(U^dag V)| / d).
double s2_distance(const UnitaryOperator& u, const UnitaryOperator& v);

/// Spectral width E_max - E_min of a Hermitian generator.
double delta_epsilon(const HermitianGenerator& h);

/// Hilbert-Schmidt speed (2 / sqrt(d)) ||H||, the instantaneous dS2/dt.
double hs_speed(const HermitianGenerator& h);

/// Brute-force evaluation of the worst-case state distance: Monte-Carlo
/// maximization over Haar-random states, the equal superposition of the two
/// extremal eigenvectors of W, and a refinement over eigenvector mixtures
/// (distance from the origin to the convex hull of the eigenvalues of W,
/// which is the exact attainable minimum of |<psi|W|psi>|). Test support
/// only; independent of the covering-arc path in s1_distance.
double s1_bruteforce_oracle(const UnitaryOperator& u, const UnitaryOperator& v,
                            int n_samples, Rng& rng);

}  // namespace qsl
