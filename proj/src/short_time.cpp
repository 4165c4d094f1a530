#include "qslmct/short_time.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qsl {

namespace {

// B_0..B_4 with the B_1 = -1/2 convention (x / (e^x - 1) generating series).
constexpr double kBernoulli[] = {1.0, -0.5, 1.0 / 6.0, 0.0, -1.0 / 30.0};

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) {
    throw std::invalid_argument(std::string(what) + " must be positive");
  }
}

// Taylor coefficients of exp(i alpha(s)) up to `order`, from those of alpha.
std::vector<Complex> exp_i_alpha_series(const std::vector<double>& alpha, int order) {
  std::vector<Complex> q(static_cast<size_t>(order) + 1, Complex(0, 0));
  for (size_t k = 1; k < alpha.size() && k <= static_cast<size_t>(order); ++k) {
    q[k] = Complex(0.0, alpha[k]);
  }
  // p = exp(q) with q(0) = 0, via p' = q' p
  std::vector<Complex> p(static_cast<size_t>(order) + 1, Complex(0, 0));
  p[0] = Complex(1, 0);
  for (int n = 1; n <= order; ++n) {
    Complex acc(0, 0);
    for (int k = 1; k <= n; ++k) {
      acc += static_cast<double>(k) * q[static_cast<size_t>(k)] *
             p[static_cast<size_t>(n - k)];
    }
    p[static_cast<size_t>(n)] = acc / static_cast<double>(n);
  }
  const Complex phase = std::exp(Complex(0.0, alpha.empty() ? 0.0 : alpha[0]));
  for (auto& c : p) c *= phase;
  return p;
}

}  // namespace

TaylorDrive TaylorDrive::general(const std::vector<HermitianGenerator>& hs) {
  if (hs.empty()) {
    throw std::invalid_argument("drive needs at least h^(0)");
  }
  TaylorDrive d;
  d.coeffs.reserve(hs.size());
  for (const auto& h : hs) d.coeffs.push_back(h.matrix());
  return d;
}

TaylorDrive TaylorDrive::phase_control(double field_amplitude,
                                       const std::vector<double>& alpha,
                                       const Matrix& chi_a, const Matrix& chi_b,
                                       int order) {
  require_positive(field_amplitude, "field amplitude");
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  const auto z = exp_i_alpha_series(alpha, order);
  TaylorDrive d;
  d.phase = true;
  d.amplitude = field_amplitude;
  d.alpha_coeffs = alpha;
  d.coeffs.reserve(static_cast<size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    const Complex zn = z[static_cast<size_t>(n)];
    d.coeffs.push_back(field_amplitude * (zn.real() * chi_a + zn.imag() * chi_b));
  }
  return d;
}

Matrix TaylorDrive::at(double s) const {
  Matrix h = coeffs[0];
  double sn = 1.0;
  for (size_t n = 1; n < coeffs.size(); ++n) {
    sn *= s;
    h += sn * coeffs[n];
  }
  return h;
}

std::vector<std::vector<double>> GeneratorExpansion::components(
    const std::vector<Matrix>& basis) const {
  std::vector<std::vector<double>> table;
  table.reserve(terms.size());
  for (const auto& a : terms) {
    std::vector<double> row;
    row.reserve(basis.size());
    for (const auto& chi : basis) {
      row.push_back(hs_inner(chi, a).real());
    }
    table.push_back(std::move(row));
  }
  return table;
}

GeneratorExpansion generator_expansion(const TaylorDrive& drive, int order) {
  if (order < 1 || order > 5) {
    throw std::invalid_argument("expansion order must be in 1..5");
  }
  if (drive.order() < order - 1) {
    throw std::invalid_argument("drive order must be >= expansion order - 1");
  }
  const Eigen::Index dim = drive.coeffs[0].rows();
  const Complex mi(0.0, -1.0);

  GeneratorExpansion ex;
  ex.terms.reserve(static_cast<size_t>(order));

  for (int n = 1; n <= order; ++n) {
    // rhs(s) = sum_m (B_m / m!) (-i)^m ad_A^m h(s); collect the s^(n-1)
    // coefficient. Each ad_{A^(j)} raises the power by j >= 1, so only the
    // already-known A^(1)..A^(n-1) contribute.
    std::vector<Matrix> poly(drive.coeffs.begin(),
                             drive.coeffs.begin() + std::min<size_t>(drive.coeffs.size(),
                                                                     static_cast<size_t>(n)));
    poly.resize(static_cast<size_t>(n), Matrix::Zero(dim, dim));  // degrees 0..n-1

    Matrix acc = poly[static_cast<size_t>(n - 1)];  // m = 0 term
    double m_factorial = 1.0;
    Complex mi_pow(1.0, 0.0);
    for (int m = 1; m <= n - 1; ++m) {
      m_factorial *= m;
      mi_pow *= mi;
      // poly <- ad_A(poly), truncated at degree n-1
      std::vector<Matrix> next(static_cast<size_t>(n), Matrix::Zero(dim, dim));
      for (int deg = 0; deg <= n - 1; ++deg) {
        for (int j = 1; j <= deg && j <= static_cast<int>(ex.terms.size()); ++j) {
          next[static_cast<size_t>(deg)] +=
              commutator(ex.terms[static_cast<size_t>(j - 1)],
                         poly[static_cast<size_t>(deg - j)]);
        }
      }
      poly = std::move(next);
      acc += (kBernoulli[m] / m_factorial) * (mi_pow * poly[static_cast<size_t>(n - 1)]);
    }
    Matrix a_n = acc / static_cast<double>(n);
    a_n = 0.5 * (a_n + a_n.adjoint().eval());  // symmetrize roundoff
    ex.terms.push_back(std::move(a_n));
  }
  return ex;
}

Matrix propagate_taylor_reference(const TaylorDrive& drive, double s, int n_steps) {
  const Eigen::Index dim = drive.coeffs[0].rows();
  Matrix u = Matrix::Identity(dim, dim);
  const double ds = s / n_steps;
  const double c1 = 0.5 - std::sqrt(3.0) / 6.0;
  const double c2 = 0.5 + std::sqrt(3.0) / 6.0;
  const Complex i(0.0, 1.0);
  for (int k = 0; k < n_steps; ++k) {
    const double t0 = k * ds;
    const Matrix h1 = drive.at(t0 + c1 * ds);
    const Matrix h2 = drive.at(t0 + c2 * ds);
    // two-node fourth-order exponential midpoint scheme
    const Matrix kmat =
        0.5 * (h1 + h2) + (std::sqrt(3.0) * ds / 12.0) * (i * commutator(h1, h2));
    u = expm_hermitian(HermitianGenerator(kmat), ds).matrix() * u;
  }
  return u;
}

OrderCheckResult order_accuracy_check(const TaylorDrive& drive, int truncation_order,
                                      const std::vector<double>& s_grid) {
  const auto ex = generator_expansion(drive, truncation_order);
  const Eigen::Index dim = drive.coeffs[0].rows();

  std::vector<double> log_s, log_r;
  bool all_tiny = true;
  for (double s : s_grid) {
    Matrix a = Matrix::Zero(dim, dim);
    double sn = 1.0;
    for (const auto& term : ex.terms) {
      sn *= s;
      a += sn * term;
    }
    const int n_steps = std::max(200, static_cast<int>(std::ceil(s / 5e-4)));
    const Matrix u_exact = propagate_taylor_reference(drive, s, n_steps);
    const Matrix u_trunc = expm_hermitian(HermitianGenerator(a), 1.0).matrix();
    const double r = (u_exact - u_trunc).norm();
    if (r > 1e-13) {  // below this the residual is eigendecomposition noise
      all_tiny = false;
      log_s.push_back(std::log(s));
      log_r.push_back(std::log(r));
    }
  }
  OrderCheckResult result;
  if (all_tiny || log_s.size() < 3) {
    result.exact = true;
    result.slope = std::numeric_limits<double>::quiet_NaN();
    return result;
  }
  // least-squares slope
  const size_t n = log_s.size();
  double mx = 0, my = 0;
  for (size_t k = 0; k < n; ++k) { mx += log_s[k]; my += log_r[k]; }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (size_t k = 0; k < n; ++k) {
    sxx += (log_s[k] - mx) * (log_s[k] - mx);
    sxy += (log_s[k] - mx) * (log_r[k] - my);
  }
  result.slope = sxy / sxx;
  return result;
}

double bound_sA(double beta, double field_amplitude) {
  require_positive(beta, "beta");
  require_positive(field_amplitude, "field amplitude");
  return beta / field_amplitude;
}

double bound_sC(double beta, double f_abc, double field_amplitude) {
  require_positive(beta, "beta");
  require_positive(f_abc, "f_ABC");
  require_positive(field_amplitude, "field amplitude");
  return std::sqrt(12.0 * beta / (f_abc * field_amplitude * field_amplitude));
}

double bound_sD(double beta, double f_abc, double f_acd, double field_amplitude,
                double eta) {
  require_positive(beta, "beta");
  require_positive(f_abc, "f_ABC");
  require_positive(f_acd, "f_ACD");
  require_positive(field_amplitude, "field amplitude");
  if (!(eta > 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("eta must lie in (0, 1]");
  }
  const double e3 = field_amplitude * field_amplitude * field_amplitude;
  return std::cbrt(18.0 * beta / (f_abc * eta * f_acd * e3));
}

std::pair<double, double> su2_mct_bounds(double phi) {
  require_positive(phi, "phi");
  // constants derived from the model generators, not hard-coded:
  // chi_n = sigma_n / ||sigma_n||, E = ||H|| / Omega, beta = phi ||sigma_n / 2||
  const auto p = pauli_basis();
  const double norm_sigma = hs_norm(p[0].matrix());  // sqrt(2)
  const std::vector<Matrix> chi = {p[0].matrix() / norm_sigma,
                                   p[1].matrix() / norm_sigma,
                                   p[2].matrix() / norm_sigma};
  const double field_amplitude = 0.5 * norm_sigma / 1.0;  // (Omega/2) sigma_x, h = H/Omega
  const double beta = phi * hs_norm(Matrix(0.5 * p[0].matrix()));
  const double f = std::abs(hs_inner(chi[2], commutator(chi[0], chi[1])).imag());
  const double t_x = bound_sA(beta, field_amplitude);
  const double t_z = bound_sC(beta, f, field_amplitude);
  return {t_x, t_z};
}

Su3ShortTimeBounds su3_mct_bounds(double phi, const AlgebraReport& report) {
  require_positive(phi, "phi");
  if (report.basis.size() < 4) {
    throw std::invalid_argument("algebra report must contain at least A, B, C, D");
  }
  const Matrix& chi_a = report.basis[0].element;
  const Matrix& chi_b = report.basis[1].element;
  const Matrix& chi_c = report.basis[2].element;
  const Matrix& chi_d_raw = report.basis[3].raw;
  const Matrix& chi_d = report.basis[3].element;

  // model constants: H = (Omega/2)(cos a lambda_A + sin a lambda_B) with
  // tr(lambda^2) = 2, so E = 1/sqrt(2); targets exp(-i lambda_X phi) give
  // beta = sqrt(2) phi on the unit-norm chi_X.
  const double field_amplitude = 0.5 * std::sqrt(2.0);
  const double beta = std::sqrt(2.0) * phi;

  const double f_abc = std::abs(hs_inner(chi_c, commutator(chi_a, chi_b)).imag());
  const double f_acd = std::abs(hs_inner(chi_d_raw, commutator(chi_a, chi_c)).imag());
  const double eta = std::abs(hs_inner(chi_d, chi_d_raw).real());

  Su3ShortTimeBounds b;
  b.t_a = bound_sA(beta, field_amplitude);
  b.t_c = bound_sC(beta, f_abc, field_amplitude);
  b.t_d = bound_sD(beta, f_abc, f_acd, field_amplitude, eta);
  return b;
}

bool f_epsilon_bound_check(const TaylorDrive& phase_drive,
                           const std::vector<double>& s_grid) {
  if (!phase_drive.phase) {
    throw std::invalid_argument("requires a phase-control drive");
  }
  const double e_amp = phase_drive.amplitude;
  const auto z = exp_i_alpha_series(phase_drive.alpha_coeffs, 2);
  // eps_A^(n) + i eps_B^(n) = E z_n
  const double ea0 = e_amp * z[0].real(), eb0 = e_amp * z[0].imag();
  const double ea1 = e_amp * z[1].real(), eb1 = e_amp * z[1].imag();
  const double ea2 = e_amp * z[2].real(), eb2 = e_amp * z[2].imag();
  const double limit = 20.0 / 3.0 * e_amp * e_amp * e_amp;
  for (double s : s_grid) {
    const double f =
        ea0 * (0.5 * (ea1 * s) * (eb1 * s) - (1.0 / 3.0) * ea0 * eb2 * s * s) -
        eb0 * (0.5 * (ea1 * s) * (ea1 * s) - (1.0 / 3.0) * ea0 * ea2 * s * s);
    if (std::abs(f) > limit + 1e-12) return false;
  }
  return true;
}

}  // namespace qsl
