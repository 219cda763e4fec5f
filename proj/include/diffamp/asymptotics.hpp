#pragma once

#include "diffamp/solver.hpp"

namespace diffamp {

// Exponential decay fit of the sine-well amplitude against |z|.
struct DecayFit {
  double slope = 0.0;      // fitted d log|v(0,1)| / d|z|
  double prefactor = 0.0;  // exp(intercept)
  double z_lo = 0.0;
  double z_hi = 0.0;
  double residual = 0.0;   // max relative deviation of the fit over the window
};

struct WitnessTrace {
  bool diverged = false;
  std::vector<double> z;
  std::vector<double> g;
};

// Directional integrand g(|z|) = e^{-|z|^2} |u(0,1)|, where u solves the
// deterministic evolution with gain
//   lambda [1/lambda_bar_c - alpha_m lambda_bar_c sin^2(2 pi k x)] |z|^2,
// the t-independent quadratic form along the top eigen-direction. The
// spatial grid is refined automatically as the wells narrow with |z|.
double directional_integrand(const SpectralWeights& w, double lambda,
                             double z_abs, const SolverConfig& cfg);

// |v(0,1)| for the pure sine-well potential
//   -lambda |z|^2 alpha_m lambda_bar_c sin^2(2 pi k x);
// the directional integrand factorizes as
//   g(|z|) = e^{(lambda/lambda_bar_c - 1)|z|^2} |v(0,1)|.
double sine_well_amplitude(const SpectralWeights& w, double lambda,
                           double z_abs, const SolverConfig& cfg);

// Least-squares fit of log|v(0,1)| against |z| over the given ascending
// grid (at least 6 usable points). For large |z| the amplitude decays like
// sqrt(2) exp(-|z| pi k sqrt(alpha_m lambda lambda_bar_c)).
DecayFit fit_decay(const SpectralWeights& w, double lambda,
                   const std::vector<double>& z_grid, const SolverConfig& cfg);

// -pi k sqrt(alpha_m lambda lambda_bar_c), the predicted asymptotic rate.
double predicted_decay_slope(const ModeDecomposition& dec, double lambda);

// Scans g(|z|) on an ascending grid up to z_max. Divergence of the moment
// integral requires g -> 0 at infinity; the witness reports true when g
// instead exceeds 1 and is still increasing on the last three grid points.
// A pragmatic proxy for the limit, not a proof.
WitnessTrace divergence_witness(const SpectralWeights& w, double lambda,
                                double z_max, const SolverConfig& cfg);

}  // namespace diffamp
