#include "diffamp/driver_field.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "diffamp/statistics.hpp"

namespace diffamp {

DriverRealization sample_realization(const SpectralWeights& w,
                                     std::uint64_t seed) {
  SplitMix64 stream(seed);
  DriverRealization r;
  r.seed = seed;
  r.s.resize(w.mode_count());
  for (int i = 0; i < w.mode_count(); ++i) {
    r.s[i] = standard_complex_normal(stream);
  }
  return r;
}

Complex eval_field(const SpectralWeights& w, const DriverRealization& r,
                   double x, double t) {
  Complex sum{0.0, 0.0};
  for (int i = 0; i < w.mode_count(); ++i) {
    const double eps = w.eps_at(i);
    if (eps == 0.0) continue;
    const double n = static_cast<double>(w.mode_of_index(i));
    sum += std::sqrt(eps) * r.s[i] * std::polar(1.0, kTwoPi * (n * x + n * n * t));
  }
  return sum;
}

Complex covariance(const SpectralWeights& w, double dx, double dt) {
  Complex sum{0.0, 0.0};
  for (int i = 0; i < w.mode_count(); ++i) {
    const double eps = w.eps_at(i);
    if (eps == 0.0) continue;
    const double n = static_cast<double>(w.mode_of_index(i));
    sum += eps * std::polar(1.0, kTwoPi * (n * dx + n * n * dt));
  }
  return sum;
}

CovarianceEstimate empirical_covariance(const SpectralWeights& w, double dx,
                                        double dt, long n_samples,
                                        std::uint64_t seed) {
  if (n_samples < 2) {
    throw std::invalid_argument("n_samples: must be >= 2");
  }
  const std::size_t n = static_cast<std::size_t>(n_samples);
  std::vector<double> re(n), im(n), pre(n), pim(n);
  for (std::size_t i = 0; i < n; ++i) {
    const DriverRealization r = sample_realization(w, derive_stream(seed, i));
    const Complex a = eval_field(w, r, dx, dt);
    const Complex b = eval_field(w, r, 0.0, 0.0);
    const Complex prod = a * std::conj(b);
    const Complex pseudo = a * b;
    re[i] = prod.real();
    im[i] = prod.imag();
    pre[i] = pseudo.real();
    pim[i] = pseudo.imag();
  }

  auto mean_of = [n](const std::vector<double>& v) {
    return pairwise_sum(v) / static_cast<double>(n);
  };
  auto var_of = [n](const std::vector<double>& v, double mean) {
    std::vector<double> sq(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      const double d = v[i] - mean;
      sq[i] = d * d;
    }
    return pairwise_sum(sq) / static_cast<double>(n - 1);
  };

  CovarianceEstimate est;
  est.n_samples = n_samples;
  const double mre = mean_of(re), mim = mean_of(im);
  const double mpre = mean_of(pre), mpim = mean_of(pim);
  est.mean = Complex(mre, mim);
  est.pseudo_mean = Complex(mpre, mpim);
  est.std_error =
      std::sqrt((var_of(re, mre) + var_of(im, mim)) / static_cast<double>(n));
  est.pseudo_std_error = std::sqrt((var_of(pre, mpre) + var_of(pim, mpim)) /
                                   static_cast<double>(n));
  return est;
}

double intensity_time_integral(const SpectralWeights& w,
                               const DriverRealization& r, double x) {
  // Only n = +-m terms survive the time integral over one period.
  double total = 0.0;
  for (int i = 0; i < w.mode_count(); ++i) {
    total += w.eps_at(i) * std::norm(r.s[i]);
  }
  for (int j = 1; j <= w.n_max(); ++j) {
    const double cross = std::sqrt(w.eps(j) * w.eps(-j));
    if (cross == 0.0) continue;
    const Complex pair = r.s[w.index_of_mode(j)] *
                         std::conj(r.s[w.index_of_mode(-j)]) *
                         std::polar(1.0, 2.0 * kTwoPi * j * x);
    total += 2.0 * cross * pair.real();
  }
  return total;
}

}  // namespace diffamp
