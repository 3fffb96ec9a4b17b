#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ergokit/spectral.hpp"
#include "ergokit/tls_dynamics.hpp"
#include "helpers.hpp"

using namespace ergokit;

namespace {
constexpr double kPi = std::numbers::pi;

TwoTlsConfig default_cfg() {
  return TwoTlsConfig(1.0, 1.0, IsoFamilyTls(0.8, 1.0), 0.3, 0.7);
}
}  // namespace

TEST_CASE("propagator starts at the identity and stays unitary") {
  const TwoTlsConfig cfg = default_cfg();
  CHECK((propagator(cfg, 0.0) - Matrix::identity(4)).max_abs() < 1e-15);
  for (double t : {0.3, 1.1, 2.7, 5.9}) {
    const Matrix u = propagator(cfg, t);
    CHECK((u * u.adjoint() - Matrix::identity(4)).max_abs() < 1e-12);
    // Commutes with the free Hamiltonian.
    const Matrix h = two_tls_free_hamiltonian(cfg.omega);
    CHECK((u * h - h * u).max_abs() < 1e-12);
  }
}

TEST_CASE("propagator group property and the quarter-period swap") {
  const TwoTlsConfig cfg = default_cfg();
  const Matrix u12 = propagator(cfg, 1.9);
  const Matrix split = propagator(cfg, 0.8) * propagator(cfg, 1.1);
  CHECK((u12 - split).max_abs() < 1e-10);

  const Matrix u = propagator(cfg, 0.5 * kPi / cfg.eta);
  CHECK(std::abs(u(1, 1)) < 1e-12);
  CHECK(std::abs(u(2, 2)) < 1e-12);
  CHECK(std::abs(u(1, 2)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(u(2, 1)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("propagator matches the generic exponential") {
  const TwoTlsConfig cfg(1.3, 0.6, IsoFamilyTls(0.75, 1.3), 0.0, 0.0);
  const Matrix h = two_tls_free_hamiltonian(cfg.omega) +
                   two_tls_interaction(cfg.eta);
  for (double t : {0.2, 0.9, 2.2, 4.8}) {
    const Matrix direct = matrix_exponential(h * cplx(0.0, -t));
    CHECK((propagator(cfg, t) - direct).max_abs() < 1e-12);
  }
}

TEST_CASE("battery population follows the closed form") {
  const TwoTlsConfig cfg = default_cfg();
  CHECK(closed_form_battery_population(cfg, 0.0) ==
        doctest::Approx(cfg.family.floor_population()).epsilon(1e-14));
  CHECK(closed_form_battery_population(cfg, 0.5 * kPi / cfg.eta) ==
        doctest::Approx(cfg.family.p_bar).epsilon(1e-14));
  for (int k = 0; k <= 40; ++k) {
    const double t = 2.0 * kPi * k / 40.0;
    const TwoTlsSnapshot snap = evolve(cfg, t);
    CHECK(std::abs(std::real(snap.reduced_B.matrix()(1, 1)) -
                   closed_form_battery_population(cfg, t)) < 1e-10);
    CHECK(trace_distance(snap.reduced_B,
                         closed_form_battery_state(cfg, t).to_density()) <
          1e-10);
  }
}

TEST_CASE("battery stays on its family while the auxiliary leaves it") {
  const TwoTlsConfig cfg = default_cfg();
  const HamiltonianSpec h = tls_hamiltonian(cfg.omega);
  bool auxiliary_left = false;
  for (int k = 0; k < 200; ++k) {
    const double t = 2.0 * kPi * k / 199.0;
    const TwoTlsSnapshot snap = evolve(cfg, t);
    CHECK(std::abs(ergotropy(snap.reduced_B, h) - cfg.family.charge()) < 1e-10);
    if (std::abs(ergotropy(snap.reduced_A, h) - cfg.family.charge()) > 1e-3)
      auxiliary_left = true;
  }
  CHECK(auxiliary_left);
}

TEST_CASE("joint invariants along the trajectory") {
  const TwoTlsConfig cfg = default_cfg();
  const std::vector<double> times = uniform_grid(0.0, 2.0 * kPi / cfg.eta, 200);
  const std::vector<TwoTlsMetrics> traj = trajectory_metrics(cfg, times);

  CHECK(std::abs(traj.front().mutual_information) < 1e-12);
  const double s_sum0 = traj.front().S_B + traj.front().S_A;
  for (const TwoTlsMetrics& m : traj) {
    CHECK(std::abs(m.R_total - traj.front().R_total) < 1e-10);
    CHECK(std::abs(m.S_BA - traj.front().S_BA) < 1e-10);
    CHECK(std::abs(m.R_B - cfg.family.charge()) < 1e-10);
    CHECK(m.mutual_information > -1e-10);
  }
  // Joint entropy equals the sum of the initial local entropies (product
  // start, unitary evolution).
  CHECK(std::abs(traj.front().S_BA - s_sum0) < 1e-10);
}

TEST_CASE("component oscillation period is pi/eta") {
  const TwoTlsConfig cfg = default_cfg();
  const std::vector<double> times = uniform_grid(0.0, 4.0 * kPi / cfg.eta, 801);
  const std::vector<TwoTlsMetrics> traj = trajectory_metrics(cfg, times);
  std::vector<double> t, inc, aux;
  for (const TwoTlsMetrics& m : traj) {
    t.push_back(m.t);
    inc.push_back(m.R_B_inc);
    aux.push_back(m.R_A);
  }
  const double dt = times[1] - times[0];
  CHECK(std::abs(testutil::zero_crossing_period(t, inc) - kPi / cfg.eta) <= dt);
  CHECK(std::abs(testutil::zero_crossing_period(t, aux) - kPi / cfg.eta) <= dt);
}
