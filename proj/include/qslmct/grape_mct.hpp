// grape_mct.hpp — GRAPE optimization of the gate infidelity at fixed total
// time, the continuation sweep over decreasing T that estimates the minimum
// control time, and power-law fitting of the resulting MCT(phi) data.
#pragma once

#include <optional>
#include <vector>

#include "qslmct/models.hpp"
#include "qslmct/qsl_bounds.hpp"

namespace qsl {

/// J_T = 1 - |tr(V^dag U)|^2 / d^2. Phase invariant; zero iff U = V up to a
/// global phase. Throws on dimension mismatch.
double infidelity(const UnitaryOperator& u, const UnitaryOperator& v);

/// Exact dJ/dalpha_k for every step, from forward/backward propagator caches
/// and the spectral (Daleckii-Krein) derivative of each step exponential.
std::vector<double> gradient(const PhaseControlModel& model,
                             const ControlField& field, const Matrix& v_target);

struct OptimizeOptions {
  double target_infidelity = 1e-6;
  double grad_tol = 1e-10;
  int max_iters = 5000;
  bool accelerated = false;  // L-BFGS direction instead of plain descent
  // Give up early when J improves by less than stall_factor over a window of
  // stall_window iterations while still above target; 0 disables.
  int stall_window = 0;
  double stall_factor = 1.02;
};

struct OptimizationResult {
  double final_infidelity = 1.0;
  ControlField field;
  int iterations = 0;
  bool converged = false;
};

/// Descent with backtracking line search from the given starting field.
OptimizationResult optimize_from(const PhaseControlModel& model,
                                 const UnitaryOperator& v_target, ControlField start,
                                 const OptimizeOptions& opts = {});

/// Same, starting from alpha_k i.i.d. uniform on [-pi, pi) drawn from `seed`.
OptimizationResult optimize(const PhaseControlModel& model,
                            const UnitaryOperator& v_target, double total_time,
                            int n_steps, unsigned long long seed,
                            const OptimizeOptions& opts = {});

struct SweepOptions {
  double t_step = 0.05;
  int n_steps = 30;
  int n_seeds = 20;
  double threshold = 1e-5;
  unsigned long long seed = 0;
  OptimizeOptions optimize;
  // A seed abandons its T-walk after this many consecutive grid points with
  // J above fail_level; 0 disables early stopping.
  int patience = 6;
  double fail_level = 0.05;
};

struct SweepResult {
  std::vector<std::pair<double, double>> grid;  // (T, best J over seeds), T descending
  double threshold = 0.0;
  std::optional<double> t_min;
  // t_min recomputed at thresholds 1e-4 / 1e-5 / 1e-6 from the same grid.
  std::optional<double> t_min_loose;
  std::optional<double> t_min_mid;
  std::optional<double> t_min_tight;
  double tau_unified = 0.0;
};

/// Continuation sweep: each seed starts from a random field at t_hi, then
/// walks T downward in steps of t_step, warm-starting every T from the
/// previous optimum (same alphas, shrunken dt). Records the best J across
/// seeds per T; t_min is the smallest grid T with best J <= threshold.
/// Throws std::logic_error if a found t_min undercuts the QSL time by more
/// than the threshold slack sqrt(threshold) sqrt(d) / ||H|| (the time an
/// ideal bound-saturating protocol spends inside the threshold ball).
SweepResult mct_sweep(const PhaseControlModel& model, const UnitaryOperator& v_target,
                      double t_hi, const SweepOptions& opts = {});

struct PowerLawFit {
  double a = 0.0;   // exponent in y = b x^a
  double b = 0.0;
  double r2 = 0.0;
  bool degenerate = false;  // constant y: a = 0, r2 meaningless
};

/// Least squares on (log x, log y). Requires >= 3 strictly positive points.
PowerLawFit power_law_fit(const std::vector<std::pair<double, double>>& points);

}  // namespace qsl
