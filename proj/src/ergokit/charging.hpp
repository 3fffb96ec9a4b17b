#pragma once

#include <array>
#include <vector>

#include "ergokit/errors.hpp"

namespace ergokit {

// Direct charging protocol: bounded drive of strength epsilon rotating the
// Bloch vector at fixed azimuth, alpha_t = alpha_0 + epsilon t, starting
// from the passive north pole (alpha_0 = 0) at radius s0.
struct ChargingConfig {
  double epsilon;
  double s0;
  double phi0;
  double omega;

  ChargingConfig(double epsilon, double s0, double phi0, double omega);
};

// Root of cos x + x sin x = 1 in (pi/2, 2 pi), excluding the trivial roots
// at 0 and 2 pi; this is the drive angle of maximal average power.
double solve_alpha_T();

// <P> = omega s0 [1 - cos(epsilon T)] / (2 T).
double avg_power(const ChargingConfig& cfg, double T);

struct BlochSample {
  double t;
  std::array<double, 3> s;
};

std::vector<BlochSample> driven_trajectory(const ChargingConfig& cfg,
                                           const std::vector<double>& times);

// Intersection of the optimal-power cone (polar angle alpha_T) with the
// isoergotropic surface reached from radius s0.
struct ConeIntersection {
  double p_bar;  // family reached at maximal power
  double p;      // member population at the intersection
  double s_bar;  // Bloch radius of the intersection arc (= s0)
};

ConeIntersection cone_intersection(double s0);

}  // namespace ergokit
