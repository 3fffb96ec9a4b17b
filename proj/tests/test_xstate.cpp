#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ergokit/spectral.hpp"
#include "ergokit/xstate.hpp"
#include "helpers.hpp"

using namespace ergokit;

TEST_CASE("matrix layout and spectrum") {
  const double q = 0.3;
  const Matrix m = x_state(q).matrix();
  CHECK(std::real(m(0, 0)) == doctest::Approx(0.15));
  CHECK(std::real(m(1, 1)) == doctest::Approx(0.21));
  CHECK(std::real(m(2, 2)) == doctest::Approx(0.49));
  CHECK(std::real(m(3, 3)) == doctest::Approx(0.15));
  CHECK(std::real(m(0, 3)) == doctest::Approx(q * q - 0.5 * q));
  CHECK(std::abs(m(1, 2)) < 1e-15);

  // Spectrum is the product multiset {q, 1-q} x {q, 1-q}.
  for (double qq : {0.0, 0.2, 0.5, 0.77, 1.0}) {
    std::vector<double> ev = hermitian_eigenvalues(x_state(qq).matrix());
    std::vector<double> want{qq * qq, qq * (1.0 - qq), qq * (1.0 - qq),
                             (1.0 - qq) * (1.0 - qq)};
    std::sort(want.begin(), want.end());
    for (int k = 0; k < 4; ++k) CHECK(std::abs(ev[k] - want[k]) < 1e-12);
  }
  CHECK_THROWS_AS(x_state(1.2), DomainError);
}

TEST_CASE("closed-form ergotropy matches the spectral definition") {
  const HamiltonianSpec h = x_hamiltonian(1.0);
  for (int k = 0; k <= 100; ++k) {
    const double q = k / 100.0;
    const XErgotropy e = x_ergotropy(q, 1.0);
    CHECK(std::abs(e.total - ergotropy(x_state(q), h)) < 1e-12);
    // Incoherent part: the spectral definition applied to the dephased state.
    Matrix diag(4, 4);
    for (int i = 0; i < 4; ++i) diag(i, i) = x_state(q).matrix()(i, i);
    CHECK(std::abs(e.incoherent -
                   ergotropy(DensityOperator(std::move(diag)), h)) < 1e-12);
    CHECK(e.coherent >= -1e-12);
  }
  CHECK(x_ergotropy(0.0, 1.0).total == doctest::Approx(1.0));
  CHECK(x_ergotropy(1.0, 1.0).total == doctest::Approx(1.0));
  CHECK(x_ergotropy(1.0, 1.0).incoherent == doctest::Approx(0.5));
  CHECK(x_ergotropy(0.3, 1.0).total == doctest::Approx(0.4));
}

TEST_CASE("concurrence endpoints and sudden death") {
  CHECK(x_concurrence(0.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(x_concurrence(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  const double q_star = x_sudden_death_point();
  CHECK(q_star > 0.5);
  CHECK(q_star < 0.7);
  CHECK(x_concurrence(q_star - 1e-6) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(x_concurrence(q_star + 1e-3) > 0.0);
  for (int k = 0; k <= 30; ++k) {
    const double q = 0.3 * k / 30.0;
    CHECK(x_concurrence(q) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(x_concurrence(1.0 - q) > 0.0);
  }
}

TEST_CASE("local ergotropies from the partial-trace oracle") {
  const LocalErgotropyReport mid = x_local_report(0.5, 1.0);
  CHECK(mid.R_total == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(mid.R_1 == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(mid.R_2 == doctest::Approx(0.0).epsilon(1e-12));

  const LocalErgotropyReport pure = x_local_report(0.0, 1.0);
  CHECK(pure.R_1 + pure.R_2 == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::min(pure.R_1, pure.R_2) == doctest::Approx(0.0).epsilon(1e-12));

  for (int k = 0; k <= 20; ++k) {
    const double q = k / 20.0;
    const LocalErgotropyReport rep = x_local_report(q, 1.0);
    CHECK(rep.deficit >= -1e-10);
    CHECK(std::abs(rep.p_1 - (1.0 - 1.5 * q + q * q)) < 1e-12);
    CHECK(std::abs(rep.p_2 - (1.5 * q - q * q)) < 1e-12);
  }
}

TEST_CASE("iso map lands exactly on the partner state") {
  CHECK(trace_distance(x_iso_map(0.5, 1.0), x_state(0.5)) < 1e-12);
  CHECK(trace_distance(x_iso_map(0.0, 1.0), x_state(1.0)) < 1e-12);
  const HamiltonianSpec h = x_hamiltonian(1.0);
  for (int k = 0; k <= 20; ++k) {
    const double q = k / 20.0;
    const DensityOperator out = x_iso_map(q, 1.0);
    CHECK(trace_distance(out, x_state(1.0 - q)) < 1e-12);
    CHECK(std::abs(ergotropy(out, h) - ergotropy(x_state(q), h)) < 1e-12);
  }
  const Matrix v1 = x_postprocess_v1();
  const Matrix v2 = x_postprocess_v2();
  CHECK((v1 * v1.adjoint() - Matrix::identity(4)).max_abs() < 1e-14);
  CHECK((v2 * v2.adjoint() - Matrix::identity(4)).max_abs() < 1e-14);
}

TEST_CASE("the replacer shortcut agrees with the full 16-dimensional SWAP") {
  const double q = 0.3;
  // SWAP between two 4-dimensional registers: |i>|j> -> |j>|i>.
  Matrix swap(16, 16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) swap(4 * j + i, 4 * i + j) = 1.0;
  Matrix tau(2, 2);
  tau(0, 0) = 1.0 - q;
  tau(1, 1) = q;
  const Matrix joint = kron(x_state(q).matrix(), kron(tau, tau));
  const DensityOperator evolved(swap * joint * swap.adjoint(), Validate::basic);
  const DensityOperator replaced = partial_trace(evolved, {4, 4}, Keep::first);
  const Matrix v = x_postprocess_v2() * x_postprocess_v1();
  const DensityOperator full(v * replaced.matrix() * v.adjoint(),
                             Validate::basic);
  CHECK(trace_distance(full, x_iso_map(q, 1.0)) < 1e-13);
  // And the composed map is trace preserving on an arbitrary input.
  testutil::Rng rng(17);
  const DensityOperator any = testutil::random_density(rng, 4);
  const Matrix joint2 = kron(any.matrix(), kron(tau, tau));
  const DensityOperator out2(
      partial_trace(DensityOperator(swap * joint2 * swap.adjoint(),
                                    Validate::basic),
                    {4, 4}, Keep::first));
  CHECK(std::abs(out2.matrix().trace() - cplx(1.0)) < 1e-13);
}

TEST_CASE("thermodynamics of the q -> 1-q map") {
  const XIsoThermo half = x_iso_map_thermo(0.5, 1.0);
  CHECK(half.Q == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(half.Q_1 == doctest::Approx(0.0).epsilon(1e-15));

  const XIsoThermo full = x_iso_map_thermo(1.0, 1.0);
  CHECK(full.Q == doctest::Approx(1.0));
  CHECK(full.W == doctest::Approx(-1.0));

  const HamiltonianSpec h = x_hamiltonian(1.0);
  for (int k = 0; k <= 20; ++k) {
    const double q = k / 20.0;
    const DensityOperator rho = x_state(q);
    const double energy = std::real((rho.matrix() * h.to_matrix()).trace());
    CHECK(std::abs(energy - 1.0) < 1e-12);
    CHECK(std::abs(von_neumann_entropy(rho) -
                   von_neumann_entropy(x_state(1.0 - q))) < 1e-12);
    const XIsoThermo t = x_iso_map_thermo(q, 1.0);
    CHECK(t.Q_1 == doctest::Approx(-t.Q_2));
    CHECK(t.dS == doctest::Approx(0.0));
  }
}
