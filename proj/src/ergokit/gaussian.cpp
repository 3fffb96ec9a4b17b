#include "ergokit/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ergokit {

namespace {

constexpr double kDetBoundTol = 1e-10;

void check_physical_theta(const Matrix& theta, const char* who) {
  if (theta.hermiticity_defect() > 1e-10)
    throw UnphysicalCovariance(std::string(who) + ": covariance not Hermitian");
  const double det = std::real(determinant(theta));
  if (det < 0.25 - kDetBoundTol)
    throw UnphysicalCovariance(std::string(who) +
                               ": det below the uncertainty bound, det = " +
                               std::to_string(det));
}

}  // namespace

GaussianState::GaussianState(cplx mu, double xi_mag, double phi,
                             double occupation, double omega)
    : mu(mu), xi_mag(xi_mag), phi(phi), occupation(occupation), omega(omega) {
  if (xi_mag < 0.0) throw DomainError("squeezing magnitude must be >= 0");
  if (occupation < 0.0) throw DomainError("thermal occupation must be >= 0");
}

Matrix f_matrix(double xi_mag, double phi) {
  const double ch = std::cosh(2.0 * xi_mag);
  const double sh = std::sinh(2.0 * xi_mag);
  const cplx e = std::polar(1.0, phi);
  return Matrix(2, 2, {ch, e * sh, std::conj(e) * sh, ch});
}

Matrix squeeze_moment_matrix(double xi_mag, double phi) {
  const double c = std::cosh(xi_mag);
  const double s = std::sinh(xi_mag);
  const cplx e = std::polar(1.0, phi);
  return Matrix(2, 2, {c, e * s, std::conj(e) * s, c});
}

MomentForm to_moments(const GaussianState& s) {
  MomentForm m;
  m.d = Matrix(2, 1, {s.mu, std::conj(s.mu)});
  m.theta = f_matrix(s.xi_mag, s.phi) * cplx(s.occupation + 0.5);
  return m;
}

GaussianState from_moments(const MomentForm& m, double omega) {
  if (m.d.rows() != 2 || m.d.cols() != 1 || m.theta.rows() != 2 ||
      m.theta.cols() != 2)
    throw DimensionMismatch("single-mode moments must be 2-vector and 2x2");
  check_physical_theta(m.theta, "from_moments");
  const double det = std::real(determinant(m.theta));
  const double root = std::sqrt(det);
  const double occupation = std::max(0.0, root - 0.5);
  double cosh2xi = 0.5 * std::real(m.theta.trace()) / root;
  cosh2xi = std::max(1.0, cosh2xi);
  const double xi = 0.5 * std::acosh(cosh2xi);
  // phi is pure gauge at xi = 0.
  const double phi = std::abs(m.theta(0, 1)) > 1e-14 * root
                         ? std::arg(m.theta(0, 1))
                         : 0.0;
  return GaussianState(m.d(0, 0), xi, phi, occupation, omega);
}

ErgotropyBreakdown gaussian_breakdown(const GaussianState& s) {
  ErgotropyBreakdown b;
  b.components["displacement"] = s.omega * std::norm(s.mu);
  b.components["squeezing"] =
      s.omega * (s.occupation + 0.5) * (std::cosh(2.0 * s.xi_mag) - 1.0);
  b.total = b.component_sum();
  return b;
}

IsoFamilyGaussian::IsoFamilyGaussian(double mu_bar_sq, double omega)
    : mu_bar_sq(mu_bar_sq), omega(omega) {
  if (mu_bar_sq < 0.0) throw DomainError("family charge |mu_bar|^2 must be >= 0");
}

double family_budget(const IsoFamilyGaussian& family, double xi_mag,
                     double occupation) {
  if (xi_mag < 0.0 || occupation < 0.0)
    throw DomainError("squeezing and occupation must be >= 0");
  return family.mu_bar_sq -
         (occupation + 0.5) * (std::cosh(2.0 * xi_mag) - 1.0);
}

double iso_displacement(const IsoFamilyGaussian& family, double xi_mag,
                        double occupation) {
  const double f = family_budget(family, xi_mag, occupation);
  if (f < -1e-12)
    throw OutOfFamilyRange("family budget is negative, f = " +
                           std::to_string(f));
  return std::sqrt(std::max(0.0, f));
}

double family_boundary_xi(const IsoFamilyGaussian& family, double occupation) {
  if (occupation < 0.0) throw DomainError("thermal occupation must be >= 0");
  return 0.5 * std::acosh(1.0 + family.mu_bar_sq / (occupation + 0.5));
}

GaussianState gaussian_family_member(const IsoFamilyGaussian& family,
                                     double xi_mag, double phi,
                                     double occupation, double theta) {
  const double mu_abs = iso_displacement(family, xi_mag, occupation);
  return GaussianState(std::polar(mu_abs, theta), xi_mag, phi, occupation,
                       family.omega);
}

double gaussian_internal_energy(const GaussianState& s) {
  const ErgotropyBreakdown b = gaussian_breakdown(s);
  return b.total + s.omega * (s.occupation + 0.5);
}

double gaussian_renyi2(const GaussianState& s) {
  return std::log(1.0 + 2.0 * s.occupation);
}

double gaussian_charge_energy_ratio(const IsoFamilyGaussian& family,
                                    double occupation) {
  if (occupation < 0.0) throw DomainError("thermal occupation must be >= 0");
  const double r = family.charge();
  return r / (r + family.omega * (occupation + 0.5));
}

double wigner(const GaussianState& s, cplx alpha) {
  const MomentForm m = to_moments(s);
  const double det = std::real(determinant(m.theta));
  // 2x2 inverse in closed form.
  const cplx inv00 = m.theta(1, 1) / det;
  const cplx inv11 = m.theta(0, 0) / det;
  const cplx inv01 = -m.theta(0, 1) / det;
  const cplx inv10 = -m.theta(1, 0) / det;
  const cplx u0 = alpha - s.mu;
  const cplx u1 = std::conj(u0);
  const cplx quad = std::conj(u0) * (inv00 * u0 + inv01 * u1) +
                    std::conj(u1) * (inv10 * u0 + inv11 * u1);
  return std::exp(-0.5 * std::real(quad)) /
         (std::numbers::pi * std::sqrt(det));
}

GaussianState attenuator_channel(const GaussianState& s, double transmissivity,
                                 double n_env) {
  if (transmissivity < 0.0 || transmissivity > 1.0)
    throw DomainError("transmissivity outside [0, 1]");
  if (n_env < 0.0) throw DomainError("environment occupation must be >= 0");
  const MomentForm in = to_moments(s);
  MomentForm out;
  out.d = in.d * cplx(std::sqrt(transmissivity));
  out.theta = in.theta * cplx(transmissivity) +
              Matrix::identity(2) * cplx((1.0 - transmissivity) * (n_env + 0.5));
  check_physical_theta(out.theta, "attenuator");
  return from_moments(out, s.omega);
}

GaussianState iso_channel_three_step(const GaussianState& in,
                                     const GaussianState& target) {
  const double r_in = gaussian_breakdown(in).total;
  const double r_target = gaussian_breakdown(target).total;
  if (std::abs(r_in - r_target) > 1e-10 * std::max(1.0, r_in))
    throw OutOfFamilyRange("target is not on the input's isoergotropic family");
  // (i) full thermalization to the target occupation, (ii) squeeze,
  // (iii) displace; each step acts on moments.
  const GaussianState thermal =
      attenuator_channel(in, 0.0, target.occupation);
  MomentForm m = to_moments(thermal);
  const Matrix sq = squeeze_moment_matrix(target.xi_mag, target.phi);
  m.theta = sq * m.theta * sq.adjoint();
  m.d = sq * m.d;
  m.d(0, 0) += target.mu;
  m.d(1, 0) += std::conj(target.mu);
  return from_moments(m, in.omega);
}

GaussianState mode_swap_channel(const GaussianState& in,
                                const GaussianState& aux) {
  const MomentForm a = to_moments(in);
  const MomentForm b = to_moments(aux);
  Matrix swap(4, 4);
  swap(0, 2) = 1.0;
  swap(1, 3) = 1.0;
  swap(2, 0) = 1.0;
  swap(3, 1) = 1.0;
  Matrix big_d(4, 1);
  big_d(0, 0) = a.d(0, 0);
  big_d(1, 0) = a.d(1, 0);
  big_d(2, 0) = b.d(0, 0);
  big_d(3, 0) = b.d(1, 0);
  Matrix big_theta(4, 4);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      big_theta(i, j) = a.theta(i, j);
      big_theta(2 + i, 2 + j) = b.theta(i, j);
    }
  const Matrix d_out = swap * big_d;
  const Matrix theta_out = swap * big_theta * swap.adjoint();
  MomentForm kept;
  kept.d = Matrix(2, 1, {d_out(0, 0), d_out(1, 0)});
  kept.theta = Matrix(2, 2, {theta_out(0, 0), theta_out(0, 1),
                             theta_out(1, 0), theta_out(1, 1)});
  return from_moments(kept, in.omega);
}

GaussianSelectiveMeasurement selective_measurement(
    const GaussianState& s, const IsoFamilyGaussian& family) {
  GaussianSelectiveMeasurement m;
  m.success_probability = 1.0 / (s.occupation + 1.0);
  m.target_mu_abs = std::sqrt(family.mu_bar_sq);
  m.description =
      "rank-one Kraus |mu_bar><phi_opt| with phi_opt = D(mu) S(xi)|0>; the "
      "success branch is the displaced vacuum with |mu_bar| = " +
      std::to_string(m.target_mu_abs);
  return m;
}

}  // namespace ergokit
