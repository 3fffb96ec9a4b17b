#include "ergokit/charging.hpp"

#include <cmath>
#include <numbers>

namespace ergokit {

ChargingConfig::ChargingConfig(double epsilon, double s0, double phi0,
                               double omega)
    : epsilon(epsilon), s0(s0), phi0(phi0), omega(omega) {
  if (epsilon <= 0.0) throw DomainError("drive bound must be positive");
  if (s0 < 0.0 || s0 > 1.0) throw DomainError("Bloch radius outside [0, 1]");
}

double solve_alpha_T() {
  static const double root = [] {
    const auto g = [](double x) { return std::cos(x) + x * std::sin(x) - 1.0; };
    // g > 0 at pi/2 and g < 0 at pi; the charging root sits between them,
    // well away from the trivial zeros at 0 and 2 pi.
    double lo = 0.5 * std::numbers::pi;
    double hi = std::numbers::pi;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      if (std::abs(g(mid)) <= 1e-15) return mid;
      (g(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }();
  return root;
}

double avg_power(const ChargingConfig& cfg, double T) {
  if (T <= 0.0) throw DomainError("charging duration must be positive");
  return cfg.omega * cfg.s0 * (1.0 - std::cos(cfg.epsilon * T)) / (2.0 * T);
}

std::vector<BlochSample> driven_trajectory(const ChargingConfig& cfg,
                                           const std::vector<double>& times) {
  std::vector<BlochSample> out;
  out.reserve(times.size());
  for (double t : times) {
    const double alpha = cfg.epsilon * t;
    out.push_back({t,
                   {cfg.s0 * std::sin(alpha) * std::cos(cfg.phi0),
                    cfg.s0 * std::sin(alpha) * std::sin(cfg.phi0),
                    cfg.s0 * std::cos(alpha)}});
  }
  return out;
}

ConeIntersection cone_intersection(double s0) {
  if (s0 <= 0.0 || s0 > 1.0)
    throw DomainError("cone intersection needs s0 in (0, 1]");
  const double alpha = solve_alpha_T();
  const double sin_half = std::sin(0.5 * alpha);
  ConeIntersection c{};
  c.p_bar = 0.5 * (1.0 + s0 * sin_half * sin_half);
  c.s_bar = (2.0 * c.p_bar - 1.0) / (sin_half * sin_half);
  c.p = 0.5 * (1.0 - c.s_bar * std::cos(alpha));
  return c;
}

}  // namespace ergokit
