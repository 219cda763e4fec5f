#pragma once

#include <cstdint>

#include "diffamp/rng.hpp"
#include "diffamp/spectral_weights.hpp"

namespace diffamp {

// One sampled coefficient vector of the driver field, in the same storage
// order as SpectralWeights.
struct DriverRealization {
  VectorXc s;
  std::uint64_t seed = 0;
};

struct CovarianceEstimate {
  Complex mean{0.0, 0.0};
  double std_error = 0.0;
  Complex pseudo_mean{0.0, 0.0};  // <S S> without conjugation, should vanish
  double pseudo_std_error = 0.0;
  long n_samples = 0;
};

// Independent complex Gaussian coefficients s_n with <s_n s_m*> = delta_nm,
// <s_n s_m> = 0. Deterministic given the seed.
DriverRealization sample_realization(const SpectralWeights& w, std::uint64_t seed);

// S(x,t) = sum_n sqrt(eps_n) s_n exp(2 i pi (n x + n^2 t)); 1-periodic in
// both arguments.
Complex eval_field(const SpectralWeights& w, const DriverRealization& r,
                   double x, double t);

// C(dx,dt) = sum_n eps_n exp(2 i pi (n dx + n^2 dt)); C(0,0) = 1.
Complex covariance(const SpectralWeights& w, double dx, double dt);

// Ensemble average of S(x,t) S*(x-dx, t-dt) over fresh realizations,
// together with the pseudo-covariance <S S> which must be ~0.
CovarianceEstimate empirical_covariance(const SpectralWeights& w, double dx,
                                        double dt, long n_samples,
                                        std::uint64_t seed);

// Integral over one time unit of |S(x,t)|^2, evaluated in closed form:
// the mode phases are orthogonal over [0,1], so only diagonal and
// conjugate-pair terms survive the time integral.
double intensity_time_integral(const SpectralWeights& w,
                               const DriverRealization& r, double x = 0.0);

}  // namespace diffamp
