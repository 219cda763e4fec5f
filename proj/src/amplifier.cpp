#include "diffamp/amplifier.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace diffamp {

MgfValue mgf_exact(const SpectralWeights& w, double lambda) {
  if (lambda < 0.0) {
    throw std::invalid_argument("lambda: must be >= 0");
  }
  const ModeDecomposition dec = eigen_closed_form(w);
  double product = 1.0;
  for (int i = 0; i < dec.kappas.size(); ++i) {
    const double gap = 1.0 - lambda * dec.kappas[i];
    if (gap <= 1e-12) {
      return {0.0, true};
    }
    product /= gap;
  }
  return {product, false};
}

MomentEstimate mgf_monte_carlo(const SpectralWeights& w, double lambda,
                               long n_samples, std::uint64_t seed,
                               unsigned threads) {
  if (lambda < 0.0) {
    throw std::invalid_argument("lambda: must be >= 0");
  }
  if (n_samples < 100) {
    throw std::invalid_argument("n_samples: must be >= 100");
  }
  std::vector<double> samples(static_cast<std::size_t>(n_samples));
  parallel_for(
      samples.size(),
      [&](std::size_t i) {
        const DriverRealization r =
            sample_realization(w, derive_stream(seed, i));
        samples[i] = std::exp(lambda * intensity_time_integral(w, r));
      },
      threads);
  return estimate_from_samples(samples);
}

double pointwise_amplification(const SpectralWeights& w,
                               const DriverRealization& r, double lambda,
                               double x) {
  return std::exp(lambda * intensity_time_integral(w, r, x));
}

}  // namespace diffamp
