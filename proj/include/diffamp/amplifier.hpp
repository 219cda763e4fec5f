#pragma once

#include "diffamp/gamma_spectral.hpp"
#include "diffamp/statistics.hpp"

namespace diffamp {

// Moment generating function value. Divergence is a tagged state, never a
// floating-point infinity that leaks through arithmetic; callers branch on
// `divergent` before touching `value`.
struct MgfValue {
  double value = 0.0;
  bool divergent = false;
};

// <exp(lambda * integral_0^1 |S(0,t)|^2 dt)> in closed form: the product
// of 1/(1 - lambda kappa_n) over the modes, finite exactly when
// lambda kappa_n < 1 for all n. The finiteness boundary is lambda_bar_c.
// The boundary test uses an absolute tolerance of 1e-12 on 1 - lambda kappa
// so that lambda = 1/max(kappa) computed in floating point lands on the
// divergent side.
MgfValue mgf_exact(const SpectralWeights& w, double lambda);

// Monte Carlo estimate of the same expectation over fresh realizations.
// Near the critical coupling the variance of exp(lambda * I) blows up
// before the mean does; the heavy-tail flag marks estimates dominated by
// a single sample. Sampling cannot certify divergence, only the exact
// product can.
MomentEstimate mgf_monte_carlo(const SpectralWeights& w, double lambda,
                               long n_samples, std::uint64_t seed,
                               unsigned threads = 0);

// Zero-diffraction amplification at position x after one time unit:
// exp(lambda * integral |S(x,t)|^2 dt), via the analytic time integral.
double pointwise_amplification(const SpectralWeights& w,
                               const DriverRealization& r, double lambda,
                               double x);

}  // namespace diffamp
