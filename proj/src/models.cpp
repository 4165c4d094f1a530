#include "qslmct/models.hpp"

#include <cmath>
#include <stdexcept>

#include "qslmct/lie_toolkit.hpp"

namespace qsl {

PhaseControlModel PhaseControlModel::make_su2(double omega) {
  const auto p = pauli_basis();
  PhaseControlModel m;
  m.label = ModelLabel::su2;
  m.omega = omega;
  m.dim = 2;
  m.prefactor = 0.5 * omega;
  m.gen_a = p[0].matrix();
  m.gen_b = p[1].matrix();
  return m;
}

PhaseControlModel PhaseControlModel::make_su3(double omega) {
  const auto gm = gellmann_basis();
  PhaseControlModel m;
  m.label = ModelLabel::su3;
  m.omega = omega;
  m.dim = 3;
  m.prefactor = 0.5 * omega;
  m.gen_a = gm[0].matrix();
  m.gen_b = (gm[1].matrix() + gm[3].matrix()) / std::sqrt(2.0);
  return m;
}

PhaseControlModel PhaseControlModel::make_spin(double j, double omega) {
  const auto spins = spin_basis(j);
  PhaseControlModel m;
  m.label = ModelLabel::spin_j;
  m.omega = omega;
  m.spin = j;
  m.dim = spins[0].dim();
  m.prefactor = omega;  // spin-J drive carries Omega, not Omega/2
  m.gen_a = spins[0].matrix();
  m.gen_b = spins[1].matrix();
  return m;
}

double PhaseControlModel::delta_eps_bar() const {
  // cos(a) G_A + sin(a) G_B is a rotation of G_A for these models, so the
  // spectral width is alpha-independent; evaluate at alpha = 0.
  const Eigen::VectorXd w = hermitian_eigenvalues(prefactor * gen_a);
  return w[w.size() - 1] - w[0];
}

double PhaseControlModel::hnorm_bar() const {
  return prefactor * hs_norm(gen_a);
}

HermitianGenerator hamiltonian_at(const PhaseControlModel& model, double alpha) {
  if (!std::isfinite(alpha)) {
    throw std::invalid_argument("alpha must be finite");
  }
  return HermitianGenerator(
      model.prefactor * (std::cos(alpha) * model.gen_a + std::sin(alpha) * model.gen_b));
}

UnitaryOperator propagate(const PhaseControlModel& model, const ControlField& field,
                          std::vector<Matrix>* trajectory) {
  if (field.n_steps < 1 || static_cast<size_t>(field.n_steps) != field.values.size()) {
    throw std::invalid_argument("field must have n_steps >= 1 matching values");
  }
  if (field.total_time <= 0.0) {
    throw std::invalid_argument("total_time must be positive");
  }
  const double dt = field.total_time / field.n_steps;
  Matrix u = Matrix::Identity(model.dim, model.dim);
  if (trajectory) trajectory->clear();
  for (int k = 0; k < field.n_steps; ++k) {
    const auto h = hamiltonian_at(model, field.values[static_cast<size_t>(k)]);
    u = expm_hermitian(h, dt).matrix() * u;  // later steps act from the left
    if (trajectory) trajectory->push_back(u);
  }
  return UnitaryOperator(std::move(u));
}

UnitaryOperator target(const PhaseControlModel& model, const TargetSpec& spec) {
  if (spec.phi < 0.0) {
    throw std::invalid_argument("phi must be nonnegative");
  }
  if (model.label == ModelLabel::su3) {
    if (spec.family.size() != 1 || spec.family[0] < 'A' || spec.family[0] > 'H') {
      throw std::invalid_argument("su3 target label must be one of A..H");
    }
    const auto basis = su3_control_basis();
    const auto& lx = basis[static_cast<size_t>(spec.family[0] - 'A')];
    return expm_hermitian(lx, spec.phi);
  }

  Eigen::Vector3d n = spec.axis;
  if (!spec.use_axis) {
    if (spec.family == "x") n = {1, 0, 0};
    else if (spec.family == "y") n = {0, 1, 0};
    else if (spec.family == "z") n = {0, 0, 1};
    else throw std::invalid_argument("unknown target label: " + spec.family);
  }
  const double nn = n.norm();
  if (nn <= 0.0) throw std::invalid_argument("axis must be nonzero");
  n /= nn;

  const auto ops = model.label == ModelLabel::spin_j ? spin_basis(model.spin)
                                                     : pauli_basis();
  const double scale = model.label == ModelLabel::spin_j ? 1.0 : 0.5;
  const HermitianGenerator gen(
      Matrix(scale * (n[0] * ops[0].matrix() + n[1] * ops[1].matrix() +
                      n[2] * ops[2].matrix())));
  return expm_hermitian(gen, spec.phi);
}

}  // namespace qsl
