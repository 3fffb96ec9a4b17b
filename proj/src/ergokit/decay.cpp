#include "ergokit/decay.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ergokit/parallel.hpp"

namespace ergokit {

BathSpec::BathSpec(double gamma, double n_bar) : gamma(gamma), n_bar(n_bar) {
  if (gamma <= 0.0) throw DomainError("decay rate must be positive");
  if (n_bar < 0.0) throw DomainError("bath occupation must be >= 0");
}

TlsState tls_decay(const TlsState& s0, const BathSpec& bath, double t) {
  if (bath.n_bar > 1.0)
    throw DomainError("fermionic bath occupation must lie in [0, 1]");
  if (t < 0.0) throw DomainError("time must be >= 0");
  const double decay = std::exp(-bath.gamma * t);
  const double p_t = (s0.p - bath.n_bar) * decay + bath.n_bar;
  const double c_t = s0.coherence * std::exp(-0.5 * bath.gamma * t);
  // The Bloch bound contracts under the semigroup; clip round-off only.
  const double c_cap = std::sqrt(std::max(0.0, 4.0 * p_t * (1.0 - p_t)));
  return {p_t, std::min(c_t, c_cap), s0.theta, s0.omega};
}

double tls_tau_half_inc(double p0, const BathSpec& bath) {
  if (!(p0 > 0.5) || !(bath.n_bar < 0.5))
    throw DomainError("tau_1/2 needs p0 > 1/2 > n_bar");
  return std::log((p0 - bath.n_bar) / (0.5 - bath.n_bar)) / bath.gamma;
}

GaussianState gaussian_decay(const GaussianState& s0, const BathSpec& bath,
                             double t) {
  if (t < 0.0) throw DomainError("time must be >= 0");
  const double e = std::exp(-bath.gamma * t);
  const double n0 = s0.occupation;
  const double nb = bath.n_bar;
  const double sinh2 = std::sinh(s0.xi_mag) * std::sinh(s0.xi_mag);
  const double delta = (n0 - nb) * e + (nb + 0.5);
  const double n_t =
      std::sqrt(delta * delta +
                (2.0 * n0 + 1.0) * (2.0 * nb + 1.0) * e * (1.0 - e) * sinh2) -
      0.5;
  const double cosh_arg =
      (delta + (2.0 * n0 + 1.0) * e * sinh2) / (n_t + 0.5);
  const double xi_t = 0.5 * std::acosh(std::max(1.0, cosh_arg));
  const cplx mu_t = s0.mu * std::exp(-0.5 * bath.gamma * t);
  return GaussianState(mu_t, xi_t, s0.phi, std::max(0.0, n_t), s0.omega);
}

double half_life(const std::function<double(double)>& charge,
                 double bracket_hint, double t_max) {
  const double r0 = charge(0.0);
  if (!(r0 > 0.0)) throw DomainError("half-life needs positive initial charge");
  const double target = 0.5 * r0;
  double hi = std::max(bracket_hint, t_max * 1e-12);
  while (charge(hi) > target) {
    hi *= 2.0;
    if (hi > t_max)
      throw NoBracket("charge never fell below half before t_max = " +
                      std::to_string(t_max));
  }
  double lo = 0.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double r = charge(mid);
    if (std::abs(r - target) <= 1e-10 * r0) return mid;
    (r > target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double tls_family_half_life(const IsoFamilyTls& family, double p,
                            const BathSpec& bath) {
  const TlsState s0 = family_member(family, p, 0.0);
  const auto charge = [&](double t) {
    return tls_breakdown(tls_decay(s0, bath, t)).total;
  };
  return half_life(charge, 1.0 / bath.gamma, 100.0 / bath.gamma);
}

double gaussian_family_half_life(const IsoFamilyGaussian& family,
                                 double xi_mag, double occupation,
                                 const BathSpec& bath) {
  const GaussianState s0 =
      gaussian_family_member(family, xi_mag, 0.0, occupation, 0.0);
  const auto charge = [&](double t) {
    return gaussian_breakdown(gaussian_decay(s0, bath, t)).total;
  };
  return half_life(charge, 1.0 / bath.gamma, 100.0 / bath.gamma);
}

DecaySweep tls_decay_sweep(const IsoFamilyTls& family, const BathSpec& bath,
                           const std::vector<double>& p_grid,
                           const std::vector<double>& times, int jobs) {
  DecaySweep sweep;
  sweep.times = times;
  sweep.members.resize(p_grid.size());
  parallel_for(int(p_grid.size()), jobs, [&](int i) {
    const double p = p_grid[i];
    const TlsState s0 = family_member(family, p, 0.0);
    DecayMemberSeries& member = sweep.members[i];
    member.label = p;
    member.series.reserve(times.size());
    for (double t : times) {
      const TlsState s = tls_decay(s0, bath, t);
      DecayRecord rec;
      rec.t = t;
      rec.p = s.p;
      rec.coherence = s.coherence;
      rec.charge = tls_breakdown(s);
      member.series.push_back(std::move(rec));
    }
    member.half_life = tls_family_half_life(family, p, bath);
  });
  return sweep;
}

DecaySweep gaussian_decay_sweep(const IsoFamilyGaussian& family,
                                double occupation, const BathSpec& bath,
                                const std::vector<double>& xi_grid,
                                const std::vector<double>& times, int jobs) {
  DecaySweep sweep;
  sweep.times = times;
  sweep.members.resize(xi_grid.size());
  parallel_for(int(xi_grid.size()), jobs, [&](int i) {
    const double xi = xi_grid[i];
    const GaussianState s0 =
        gaussian_family_member(family, xi, 0.0, occupation, 0.0);
    DecayMemberSeries& member = sweep.members[i];
    member.label = xi;
    member.series.reserve(times.size());
    for (double t : times) {
      const GaussianState s = gaussian_decay(s0, bath, t);
      DecayRecord rec;
      rec.t = t;
      rec.mu_abs = std::abs(s.mu);
      rec.xi_mag = s.xi_mag;
      rec.occupation = s.occupation;
      rec.charge = gaussian_breakdown(s);
      member.series.push_back(std::move(rec));
    }
    member.half_life = gaussian_family_half_life(family, xi, occupation, bath);
  });
  return sweep;
}

}  // namespace ergokit
