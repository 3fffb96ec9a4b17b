#pragma once

#include "ergokit/decay.hpp"
#include "ergokit/density.hpp"
#include "ergokit/gaussian.hpp"

namespace ergokit {

// Independent numerical oracles for the closed-form paths. These integrate
// or flow the primitive equations of motion directly and never call the
// closed-form solutions they are used to check.

// Fixed-step RK4 on the 2x2 thermal generator (rotating frame):
// rhodot = gamma (1 - n_bar) D[sigma-] + gamma n_bar D[sigma+].
DensityOperator rk4_tls_thermal(const TlsState& s0, const BathSpec& bath,
                                double t, double dt);

// Exact moment flow of the same reservoir for a mode (rotating frame):
// d -> e^{-gamma t/2} d, Theta -> e^{-gamma t} Theta +
// (1 - e^{-gamma t})(n_bar + 1/2) I.
MomentForm moment_flow_decay(const GaussianState& s0, const BathSpec& bath,
                             double t);

}  // namespace ergokit
