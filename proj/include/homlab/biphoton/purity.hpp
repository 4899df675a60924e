#pragma once

#include "homlab/biphoton/wavefunction.hpp"

namespace homlab::biphoton {

/// Purity Tr rho^2 of the heralded photon's temporal state under gaussian
/// trigger-time uncertainty:
///   rho(t, t') = integral dt0 G(t0; sigma_j) h(t - t0) h*(t' - t0)
/// discretized on a grid spanning at least +-8 (width + sigma_j) with at
/// least 512 points, normalized to Tr rho = 1.
///
/// The grid is refined until successive results agree to 1e-4; failing that,
/// a NumericError is thrown.
double heralded_purity(const Wavefunction& wf, double trigger_jitter_sigma_ns);

}  // namespace homlab::biphoton
