// models.hpp — the concrete phase-controlled systems: the SU(2) resonant
// two-level drive, its SU(3) extension, the spin-J rotation model, their
// target families and piecewise-constant propagation.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qslmct/operator_core.hpp"

namespace qsl {

enum class ModelLabel { su2, su3, spin_j };

/// H(alpha) = pref * (cos(alpha) G_A + sin(alpha) G_B); pref is Omega/2 for
/// su2/su3 and Omega for spin-J. Immutable after construction.
struct PhaseControlModel {
  ModelLabel label = ModelLabel::su2;
  double omega = 1.0;
  double spin = 0.0;  // J, spin_j only
  Eigen::Index dim = 2;
  double prefactor = 0.5;
  Matrix gen_a;
  Matrix gen_b;

  static PhaseControlModel make_su2(double omega = 1.0);
  static PhaseControlModel make_su3(double omega = 1.0);
  static PhaseControlModel make_spin(double j, double omega = 1.0);

  /// Exact ceiling on the spectral width of H(alpha), constant in alpha.
  double delta_eps_bar() const;
  /// Exact ceiling on ||H(alpha)||, constant in alpha.
  double hnorm_bar() const;
};

HermitianGenerator hamiltonian_at(const PhaseControlModel& model, double alpha);

/// Piecewise-constant field: values[k] is the phase alpha on step k of
/// length total_time / n_steps.
struct ControlField {
  int n_steps = 0;
  double total_time = 0.0;
  std::vector<double> values;
};

/// Time-ordered product of the per-step exponentials: step 0 acts first,
/// later steps multiply from the left. Optionally records the running
/// propagator after every step.
UnitaryOperator propagate(const PhaseControlModel& model, const ControlField& field,
                          std::vector<Matrix>* trajectory = nullptr);

/// Target family: an axis rotation exp(-i sigma_n phi / 2) (su2),
/// exp(-i J_n phi) (spin-J), or exp(-i lambda_X phi) with X in A..H (su3).
struct TargetSpec {
  std::string family;  // "x","y","z" or unit axis for su2/spin; "A".."H" for su3
  double phi = 0.0;
  Eigen::Vector3d axis{1.0, 0.0, 0.0};
  bool use_axis = false;
};

UnitaryOperator target(const PhaseControlModel& model, const TargetSpec& spec);

}  // namespace qsl
