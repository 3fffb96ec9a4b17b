#include "ergokit/verify.hpp"

#include <cmath>

namespace ergokit {

namespace {

Matrix dissipator(const Matrix& op, const Matrix& rho) {
  const Matrix opd = op.adjoint();
  const Matrix pop = opd * op;
  return op * rho * opd - (pop * rho + rho * pop) * cplx(0.5);
}

}  // namespace

DensityOperator rk4_tls_thermal(const TlsState& s0, const BathSpec& bath,
                                double t, double dt) {
  if (dt <= 0.0) throw DomainError("RK4 step must be positive");
  Matrix lower(2, 2);
  lower(0, 1) = 1.0;  // |g><e|
  const Matrix raise = lower.adjoint();
  const auto rhs = [&](const Matrix& rho) {
    return dissipator(lower, rho) * cplx(bath.gamma * (1.0 - bath.n_bar)) +
           dissipator(raise, rho) * cplx(bath.gamma * bath.n_bar);
  };
  Matrix rho = s0.to_density().matrix();
  const int steps = std::max(1, int(std::ceil(t / dt)));
  const double h = t / steps;
  for (int k = 0; k < steps; ++k) {
    const Matrix k1 = rhs(rho);
    const Matrix k2 = rhs(rho + k1 * cplx(0.5 * h));
    const Matrix k3 = rhs(rho + k2 * cplx(0.5 * h));
    const Matrix k4 = rhs(rho + k3 * cplx(h));
    rho += (k1 + k2 * cplx(2.0) + k3 * cplx(2.0) + k4) * cplx(h / 6.0);
  }
  return DensityOperator(std::move(rho), Validate::basic);
}

MomentForm moment_flow_decay(const GaussianState& s0, const BathSpec& bath,
                             double t) {
  const double e = std::exp(-bath.gamma * t);
  const MomentForm m0 = to_moments(s0);
  MomentForm m;
  m.d = m0.d * cplx(std::sqrt(e));
  m.theta = m0.theta * cplx(e) +
            Matrix::identity(2) * cplx((1.0 - e) * (bath.n_bar + 0.5));
  return m;
}

}  // namespace ergokit
