#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ergokit/gaussian_dynamics.hpp"
#include "ergokit/spectral.hpp"
#include "ergokit/tls_dynamics.hpp"

using namespace ergokit;

namespace {
constexpr double kPi = std::numbers::pi;

TwoModeConfig paper_cfg() {
  // |mu_bar|^2 = 5, N_B(0) = 0.8, N_A(0) = 0, |xi| = 1, phi = pi,
  // theta_B = 0, omega = eta = 1.
  return TwoModeConfig(1.0, 1.0, IsoFamilyGaussian(5.0, 1.0), 1.0, kPi, 0.8,
                       0.0, 0.0);
}
}  // namespace

TEST_CASE("drift matrix structure and spectrum") {
  const Matrix w0 = drift_matrix(1.3, 0.0);
  CHECK(std::abs(w0(0, 2)) < 1e-15);
  CHECK(std::abs(w0(0, 0) - cplx(0.0, -1.3)) < 1e-15);

  const Matrix w = drift_matrix(1.0, 0.4);
  const Matrix sym = w + w.adjoint();
  for (int i = 0; i < 4; ++i) CHECK(std::abs(sym(i, i)) < 1e-15);

  // Eigenvalues are -i(omega -+ eta) and +i(omega -+ eta).
  for (const cplx lambda : {cplx(0.0, -1.4), cplx(0.0, -0.6), cplx(0.0, 1.4),
                            cplx(0.0, 0.6)}) {
    const Matrix shifted = w - Matrix::identity(4) * lambda;
    CHECK(std::abs(determinant(shifted)) < 1e-12);
  }
}

TEST_CASE("closed-form propagation matches the exponential path") {
  const TwoModeConfig cfg = paper_cfg();
  const JointMoments at0 = propagate(cfg, 0.0);
  const JointMoments init = initial_moments(cfg);
  CHECK((at0.D - init.D).max_abs() < 1e-14);
  CHECK((at0.Xi - init.Xi).max_abs() < 1e-14);

  for (int k = 0; k <= 200; ++k) {
    const double t = 2.0 * kPi * k / 200.0;
    const JointMoments closed = propagate(cfg, t);
    const JointMoments viaexp = propagate_expm(cfg, t);
    CHECK((closed.D - viaexp.D).max_abs() < 1e-10);
    CHECK((closed.Xi - viaexp.Xi).max_abs() < 1e-10);
  }

  // Quarter period swaps the displacements up to the free phase and sign.
  const JointMoments quarter = propagate(cfg, 0.5 * kPi / cfg.eta);
  const cplx phase = std::polar(1.0, -cfg.omega * 0.5 * kPi / cfg.eta);
  CHECK(std::abs(quarter.D(0, 0) - phase * init.D(2, 0)) < 1e-12);
  CHECK(std::abs(quarter.D(2, 0) + phase * init.D(0, 0)) < 1e-12);
}

TEST_CASE("closed-form displacements and occupations hold on the grid") {
  const TwoModeConfig cfg = paper_cfg();
  const JointMoments init = initial_moments(cfg);
  const cplx mu_b0 = init.D(0, 0);
  const cplx mu_a0 = init.D(2, 0);
  const std::vector<double> times = uniform_grid(0.0, 2.0 * kPi, 101);
  const std::vector<TwoModeSample> traj = mode_trajectory(cfg, times);
  for (size_t k = 0; k < times.size(); ++k) {
    const double t = times[k];
    const cplx ph = std::polar(1.0, -cfg.omega * t);
    const cplx want_b = ph * (mu_a0 * std::sin(cfg.eta * t) +
                              mu_b0 * std::cos(cfg.eta * t));
    const cplx want_a = ph * (mu_a0 * std::cos(cfg.eta * t) -
                              mu_b0 * std::sin(cfg.eta * t));
    CHECK(std::abs(traj[k].battery.mu - want_b) < 1e-10);
    CHECK(std::abs(traj[k].auxiliary.mu - want_a) < 1e-10);
    CHECK(std::abs(traj[k].battery.occupation -
                   closed_form_occupation(cfg, true, t)) < 1e-10);
    CHECK(std::abs(traj[k].auxiliary.occupation -
                   closed_form_occupation(cfg, false, t)) < 1e-10);
  }
}

TEST_CASE("both modes ride the isoergotropic surface") {
  const TwoModeConfig cfg = paper_cfg();
  const std::vector<double> times = uniform_grid(0.0, 2.0 * kPi, 200);
  const std::vector<TwoModeSample> traj = mode_trajectory(cfg, times);
  for (const TwoModeSample& s : traj) {
    CHECK(std::abs(s.R_B - cfg.family.charge()) < 1e-10);
    CHECK(std::abs(s.R_A - cfg.family.charge()) < 1e-10);
    CHECK(std::abs(s.battery.xi_mag - cfg.xi_mag) < 1e-10);
    CHECK(std::abs(s.auxiliary.xi_mag - cfg.xi_mag) < 1e-10);
    CHECK(std::abs(s.battery.occupation + s.auxiliary.occupation - 0.8) <
          1e-12);
  }
}

TEST_CASE("squeezing phase precesses at twice the mode frequency") {
  const TwoModeConfig cfg = paper_cfg();
  for (double t : {0.3, 0.9, 1.7, 2.2}) {
    const std::vector<TwoModeSample> s = mode_trajectory(cfg, {t});
    const double want = std::remainder(cfg.phi - 2.0 * cfg.omega * t,
                                       2.0 * kPi);
    const double got = std::remainder(s.front().battery.phi, 2.0 * kPi);
    CHECK(std::abs(std::remainder(got - want, 2.0 * kPi)) < 1e-8);
  }
}

TEST_CASE("mutual information oscillates while charges stay flat") {
  const TwoModeConfig cfg = paper_cfg();
  const std::vector<double> times = uniform_grid(0.0, kPi, 81);
  const std::vector<TwoModeSample> traj = mode_trajectory(cfg, times);
  CHECK(std::abs(traj.front().mutual_information_2) < 1e-10);
  double max_i2 = 0.0;
  for (const TwoModeSample& s : traj)
    max_i2 = std::max(max_i2, s.mutual_information_2);
  CHECK(max_i2 > 0.05);
  // Local Renyi-2 entropies move with the occupation exchange.
  CHECK(std::abs(traj.front().S2_B - std::log(1.0 + 2.0 * 0.8)) < 1e-10);
  const TwoModeSample& half = traj[40];  // eta t = pi/2: occupations swapped
  CHECK(std::abs(half.S2_B - std::log(1.0)) < 1e-8);
}

TEST_CASE("off-family initial conditions are rejected") {
  CHECK_THROWS_AS(TwoModeConfig(1.0, 1.0, IsoFamilyGaussian(5.0, 1.0), 2.0,
                                kPi, 0.8, 0.0, 0.0),
                  OutOfFamilyRange);
  CHECK_THROWS_AS(TwoModeConfig(1.0, 0.0, IsoFamilyGaussian(5.0, 1.0), 1.0,
                                kPi, 0.8, 0.0, 0.0),
                  DomainError);
}

TEST_CASE("multimode renyi2 reduces to the single-mode formula") {
  const GaussianState thermal(0.0, 0.0, 0.0, 0.7, 1.0);
  CHECK(multimode_renyi2(to_moments(thermal).theta) ==
        doctest::Approx(std::log(1.0 + 1.4)).epsilon(1e-13));
}
