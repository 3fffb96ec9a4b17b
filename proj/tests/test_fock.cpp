#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ergokit/fock.hpp"
#include "ergokit/gaussian.hpp"
#include "ergokit/spectral.hpp"

using namespace ergokit;

TEST_CASE("vacuum assembles to the vacuum projector") {
  FockOracleConfig cfg;
  cfg.truncation = 16;
  const DensityOperator rho = fock_gaussian(0.0, 0.0, 0.0, cfg);
  CHECK(std::real(rho.matrix()(0, 0)) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(std::abs(rho.matrix()(1, 1)) < 1e-13);
}

TEST_CASE("thermal populations follow the geometric law") {
  FockOracleConfig cfg;
  cfg.truncation = 64;
  const DensityOperator rho = fock_thermal(1.0, cfg);
  for (int n = 0; n < 8; ++n)
    CHECK(std::real(rho.matrix()(n, n)) ==
          doctest::Approx(std::pow(0.5, n + 1)).epsilon(1e-12));
}

TEST_CASE("truncated displacement and squeeze are unitary") {
  FockOracleConfig cfg;
  cfg.truncation = 48;
  const Matrix d = fock_displacement(cplx(0.7, -0.4), cfg);
  CHECK((d * d.adjoint() - Matrix::identity(48)).max_abs() < 1e-12);
  const Matrix s = fock_squeeze(cplx(0.3, 0.5), cfg);
  CHECK((s * s.adjoint() - Matrix::identity(48)).max_abs() < 1e-12);
}

TEST_CASE("coherent-state ergotropy reproduces omega |mu|^2") {
  FockOracleConfig cfg;
  cfg.truncation = 60;
  const DensityOperator rho = fock_gaussian(1.0, 0.0, 0.0, cfg);
  const HamiltonianSpec h = harmonic_hamiltonian(rho.dim(), 1.0);
  CHECK(ergotropy(rho, h) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("assembled states match the Gaussian split at scattered points") {
  FockOracleConfig cfg;
  cfg.truncation = 96;
  const struct {
    double mu, xi, n;
  } pts[] = {{1.0, 0.6, 0.5}, {2.0, 0.0, 1.0}, {0.5, 1.0, 0.0}};
  for (const auto& pt : pts) {
    const cplx mu = std::polar(pt.mu, 0.4);
    const cplx xi = std::polar(pt.xi, 1.1);
    const DensityOperator rho = fock_gaussian(mu, xi, pt.n, cfg);
    const HamiltonianSpec h = harmonic_hamiltonian(rho.dim(), 1.0);
    const double closed =
        gaussian_breakdown(GaussianState(mu, pt.xi, 1.1, pt.n, 1.0)).total;
    CHECK(ergotropy(rho, h) ==
          doctest::Approx(closed).epsilon(1e-4));
  }
}

TEST_CASE("hopeless truncation raises with the measured deficit") {
  FockOracleConfig cfg;
  cfg.truncation = 32;
  try {
    fock_gaussian(25.0, 0.0, 0.0, cfg);  // mean occupation 625
    FAIL("expected TruncationTooSmall");
  } catch (const TruncationTooSmall& e) {
    CHECK(e.deficit > cfg.trace_deficit_tol);
  }
  CHECK_THROWS_AS(fock_thermal(-0.1, cfg), DomainError);
  FockOracleConfig bad;
  bad.truncation = 1;
  CHECK_THROWS_AS(fock_thermal(0.5, bad), DomainError);
}
