#pragma once

// Shared test utilities: a reproducible RNG, independent numeric oracles
// (golden-section maximizer, RK4 Bloch integrator, zero-crossing period
// estimate) kept apart from the library paths they are used to check.

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "ergokit/matrix.hpp"
#include "ergokit/tls_battery.hpp"

namespace testutil {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(uint64_t seed) : gen(seed) {}
  double uniform() { return double(gen() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

inline ergokit::TlsState random_tls(Rng& rng, double omega = 1.0) {
  const double p = rng.uniform();
  const double cap = std::sqrt(std::max(0.0, 4.0 * p * (1.0 - p)));
  return {p, cap * rng.uniform(), rng.uniform(0.0, 4.0 * 3.141592653589793),
          omega};
}

inline ergokit::Matrix random_hermitian(Rng& rng, int n, double scale = 1.0) {
  ergokit::Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = scale * rng.uniform(-1.0, 1.0);
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = scale * ergokit::cplx(rng.uniform(-1.0, 1.0),
                                      rng.uniform(-1.0, 1.0));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

inline ergokit::DensityOperator random_density(Rng& rng, int n) {
  // Gram matrix of a random complex square root, normalized.
  ergokit::Matrix g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = ergokit::cplx(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
  ergokit::Matrix m = g * g.adjoint();
  m *= ergokit::cplx(1.0 / std::real(m.trace()));
  return ergokit::DensityOperator(std::move(m));
}

// Golden-section maximizer on [lo, hi] for a unimodal objective.
inline double golden_section_max(const std::function<double(double)>& f,
                                 double lo, double hi, double tol = 1e-10) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// RK4 for the Bloch equation sdot = b(t) x s.
inline std::array<double, 3> rk4_bloch(
    const std::function<std::array<double, 3>(double)>& field,
    std::array<double, 3> s, double t_end, double dt) {
  const auto cross = [](const std::array<double, 3>& u,
                        const std::array<double, 3>& v) {
    return std::array<double, 3>{u[1] * v[2] - u[2] * v[1],
                                 u[2] * v[0] - u[0] * v[2],
                                 u[0] * v[1] - u[1] * v[0]};
  };
  const auto add = [](std::array<double, 3> u, const std::array<double, 3>& v,
                      double w) {
    for (int i = 0; i < 3; ++i) u[i] += w * v[i];
    return u;
  };
  const int steps = std::max(1, int(std::ceil(t_end / dt)));
  const double h = t_end / steps;
  double t = 0.0;
  for (int k = 0; k < steps; ++k) {
    const auto k1 = cross(field(t), s);
    const auto k2 = cross(field(t + 0.5 * h), add(s, k1, 0.5 * h));
    const auto k3 = cross(field(t + 0.5 * h), add(s, k2, 0.5 * h));
    const auto k4 = cross(field(t + h), add(s, k3, h));
    for (int i = 0; i < 3; ++i)
      s[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    t += h;
  }
  return s;
}

// Mean spacing of upward crossings of the signal through its midrange;
// FFT-free period estimate, resolution one grid step.
inline double zero_crossing_period(const std::vector<double>& t,
                                   const std::vector<double>& x) {
  double lo = x[0], hi = x[0];
  for (double v : x) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double mid = 0.5 * (lo + hi);
  std::vector<double> ups;
  for (size_t i = 1; i < x.size(); ++i)
    if (x[i - 1] < mid && x[i] >= mid) ups.push_back(t[i]);
  if (ups.size() < 2) return 0.0;
  return (ups.back() - ups.front()) / double(ups.size() - 1);
}

}  // namespace testutil
