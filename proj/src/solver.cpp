#include "diffamp/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace diffamp {

void validate(const SolverConfig& cfg, int driver_n_max) {
  if (cfg.n_t < 1) {
    throw std::invalid_argument("solver.n_t: must be >= 1");
  }
  if (cfg.n_x < 8 || (cfg.n_x & (cfg.n_x - 1)) != 0) {
    throw std::invalid_argument("solver.n_x: must be a power of two >= 8");
  }
  if (cfg.n_x < 8 * driver_n_max) {
    throw std::invalid_argument(
        "solver.n_x: must be at least 8x the driver bandwidth");
  }
  if (cfg.kinetic == Kinetic::Diffusion &&
      !(cfg.diffusion_coefficient >= 0.0)) {
    throw std::invalid_argument("solver.diffusion_coefficient: must be >= 0");
  }
}

double grid_l2_norm(const VectorXc& values) {
  return values.norm() / std::sqrt(static_cast<double>(values.size()));
}

SplitStepSolver::SplitStepSolver(const SolverConfig& cfg) : cfg_(cfg) {
  validate(cfg, 0);
  const int n = cfg_.n_x;
  grid_ = VectorXr::LinSpaced(n, 0.0, static_cast<double>(n - 1)) /
          static_cast<double>(n);
  omega2_.resize(n);
  for (int p = 0; p < n; ++p) {
    const int q = p <= n / 2 ? p : p - n;
    omega2_[p] = kTwoPi * q * kTwoPi * q;
  }
  half_phase_ = VectorXc::Ones(n);
  spectrum_.resize(n);
  gain_scratch_.resize(n);
}

void SplitStepSolver::build_kinetic_phase(double dt) {
  if (dt == cached_dt_) return;
  cached_dt_ = dt;
  for (int p = 0; p < cfg_.n_x; ++p) {
    switch (cfg_.kinetic) {
      case Kinetic::Diffraction:
        half_phase_[p] = std::polar(1.0, -omega2_[p] * dt / 4.0);
        break;
      case Kinetic::Diffusion:
        half_phase_[p] =
            std::exp(-cfg_.diffusion_coefficient * omega2_[p] * dt / 2.0);
        break;
      case Kinetic::None:
        half_phase_[p] = 1.0;
        break;
    }
  }
}

void SplitStepSolver::run(VectorXc& field, double t0, double t1, int n_steps,
                          const GainIntegral& gain_integral,
                          const CheckpointFn& on_checkpoint) {
  if (n_steps < 1) {
    throw std::invalid_argument("n_steps: must be >= 1");
  }
  if (field.size() != cfg_.n_x) {
    throw std::invalid_argument("field: size does not match solver grid");
  }
  const double dt = (t1 - t0) / n_steps;

  std::vector<int> marks;
  if (on_checkpoint) {
    marks.reserve(16);
    for (int c = 1; c <= 16; ++c) {
      int s = static_cast<int>(
          std::llround(static_cast<double>(c) * n_steps / 16.0));
      s = std::clamp(s, 1, n_steps);
      if (marks.empty() || marks.back() != s) marks.push_back(s);
    }
  }
  std::size_t next_mark = 0;

  auto apply_gain = [&](int step) {
    gain_integral(t0 + step * dt, dt, gain_scratch_);
    for (int j = 0; j < cfg_.n_x; ++j) {
      field[j] *= std::exp(gain_scratch_[j]);
    }
  };

  if (cfg_.kinetic == Kinetic::None) {
    // no transforms needed; the product of substep exponentials telescopes
    for (int s = 0; s < n_steps; ++s) {
      apply_gain(s);
      if (next_mark < marks.size() && marks[next_mark] == s + 1) {
        on_checkpoint(t0 + (s + 1) * dt, grid_l2_norm(field));
        ++next_mark;
      }
    }
    return;
  }

  build_kinetic_phase(dt);
  fft_.fwd(spectrum_, field);
  for (int s = 0; s < n_steps; ++s) {
    spectrum_.array() *= half_phase_.array();
    fft_.inv(field, spectrum_);
    apply_gain(s);
    fft_.fwd(spectrum_, field);
    spectrum_.array() *= half_phase_.array();
    if (next_mark < marks.size() && marks[next_mark] == s + 1) {
      // Parseval: the L2 norm is available in spectral space for free
      on_checkpoint(t0 + (s + 1) * dt,
                    spectrum_.norm() / static_cast<double>(cfg_.n_x));
      ++next_mark;
    }
  }
  fft_.inv(field, spectrum_);
}

DriverIntensityIntegral::DriverIntensityIntegral(const SpectralWeights& w,
                                                 const DriverRealization& r,
                                                 int n_x) {
  if (r.s.size() != w.mode_count()) {
    throw std::invalid_argument("realization: size does not match weights");
  }
  const int m = w.mode_count();
  for (int a = 0; a < m; ++a) {
    const double eps_a = w.eps_at(a);
    if (eps_a == 0.0) continue;
    const int na = w.mode_of_index(a);
    for (int b = 0; b < m; ++b) {
      const double eps_b = w.eps_at(b);
      if (eps_b == 0.0) continue;
      const int nb = w.mode_of_index(b);
      const int d = na - nb;
      if (d < 0) continue;  // covered by the conjugate of the (b, a) term
      PairTerm term;
      term.weight = std::sqrt(eps_a * eps_b) * std::conj(r.s[a]) * r.s[b];
      term.d = d;
      const int freq = na * na - nb * nb;
      if (freq == 0) {
        term.freq_slot = -1;
      } else {
        auto it = std::find(freqs_.begin(), freqs_.end(), freq);
        if (it == freqs_.end()) {
          freqs_.push_back(freq);
          it = std::prev(freqs_.end());
        }
        term.freq_slot = static_cast<int>(it - freqs_.begin());
      }
      max_d_ = std::max(max_d_, d);
      pairs_.push_back(term);
    }
  }
  coeff_.assign(static_cast<std::size_t>(max_d_) + 1, Complex{0.0, 0.0});
  freq_factor_.assign(freqs_.size(), Complex{0.0, 0.0});
  psi_.assign(freqs_.size(), Complex{0.0, 0.0});
  phase_table_.resize(std::max(max_d_, 1), n_x);
  for (int d = 1; d <= max_d_; ++d) {
    for (int j = 0; j < n_x; ++j) {
      phase_table_(d - 1, j) =
          std::polar(1.0, -kTwoPi * d * j / static_cast<double>(n_x));
    }
  }
}

void DriverIntensityIntegral::operator()(double t, double dt, VectorXr& out) {
  const int n_x = static_cast<int>(phase_table_.cols());
  out.resize(n_x);

  if (dt != cached_dt_) {
    cached_dt_ = dt;
    for (std::size_t f = 0; f < freqs_.size(); ++f) {
      const double theta = -kTwoPi * freqs_[f];
      psi_[f] = (std::polar(1.0, theta * dt) - Complex{1.0, 0.0}) /
                Complex{0.0, theta};
    }
  }
  for (std::size_t f = 0; f < freqs_.size(); ++f) {
    freq_factor_[f] = std::polar(1.0, -kTwoPi * freqs_[f] * t) * psi_[f];
  }

  std::fill(coeff_.begin(), coeff_.end(), Complex{0.0, 0.0});
  for (const PairTerm& p : pairs_) {
    const Complex time_integral =
        p.freq_slot < 0 ? Complex{dt, 0.0} : freq_factor_[p.freq_slot];
    coeff_[p.d] += p.weight * time_integral;
  }

  const double base = coeff_[0].real();
  for (int j = 0; j < n_x; ++j) {
    double g = base;
    for (int d = 1; d <= max_d_; ++d) {
      const Complex& ph = phase_table_(d - 1, j);
      const Complex& c = coeff_[d];
      g += 2.0 * (c.real() * ph.real() - c.imag() * ph.imag());
    }
    out[j] = g;
  }
}

GridField evolve_stochastic(const SpectralWeights& w,
                            const DriverRealization& r, double lambda,
                            const SolverConfig& cfg) {
  validate(cfg, w.n_max());
  if (lambda < 0.0) {
    throw std::invalid_argument("lambda: must be >= 0");
  }
  SplitStepSolver solver(cfg);
  DriverIntensityIntegral intensity(w, r, cfg.n_x);

  GridField out;
  out.values = VectorXc::Ones(cfg.n_x);
  out.checkpoint_times.push_back(0.0);
  out.checkpoint_norms.push_back(grid_l2_norm(out.values));
  solver.run(
      out.values, 0.0, 1.0, cfg.n_t,
      [&](double t, double dt, VectorXr& g) {
        intensity(t, dt, g);
        g *= lambda;
      },
      [&](double t, double norm) {
        out.checkpoint_times.push_back(t);
        out.checkpoint_norms.push_back(norm);
      });
  out.time = 1.0;
  return out;
}

GridField evolve_potential(const SpaceTimePotential& potential, double scale,
                           const SolverConfig& cfg, double t_final) {
  validate(cfg, 0);
  if (!(t_final > 0.0)) {
    throw std::invalid_argument("t_final: must be > 0");
  }
  SplitStepSolver solver(cfg);
  const VectorXr& grid = solver.grid();

  GridField out;
  out.values = VectorXc::Ones(cfg.n_x);
  out.checkpoint_times.push_back(0.0);
  out.checkpoint_norms.push_back(grid_l2_norm(out.values));
  solver.run(
      out.values, 0.0, t_final, cfg.n_t,
      [&](double t, double dt, VectorXr& g) {
        const double t_mid = t + 0.5 * dt;
        for (int j = 0; j < cfg.n_x; ++j) {
          const double v = potential(grid[j], t_mid);
          if (!std::isfinite(v)) {
            throw std::domain_error("potential: non-finite value on the grid");
          }
          g[j] = -scale * v * dt;
        }
      },
      [&](double t, double norm) {
        out.checkpoint_times.push_back(t);
        out.checkpoint_norms.push_back(norm);
      });
  out.time = t_final;
  return out;
}

MomentEstimate mean_abs_e(const SpectralWeights& w, double lambda,
                          const SolverConfig& cfg, long n_samples,
                          std::uint64_t seed, unsigned threads) {
  validate(cfg, w.n_max());
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
        samples[i] = std::abs(evolve_stochastic(w, r, lambda, cfg).values[0]);
      },
      threads);
  return estimate_from_samples(samples);
}

InvariancePair unitary_invariance_check(const SpectralWeights& w,
                                        double lambda, const SolverConfig& cfg,
                                        long n_samples, std::uint64_t seed,
                                        unsigned threads) {
  validate(cfg, w.n_max());
  if (lambda < 0.0) {
    throw std::invalid_argument("lambda: must be >= 0");
  }
  if (n_samples < 100) {
    throw std::invalid_argument("n_samples: must be >= 100");
  }
  const ModeDecomposition dec = eigen_closed_form(w);
  std::vector<double> direct(static_cast<std::size_t>(n_samples));
  std::vector<double> rotated(direct.size());
  parallel_for(
      direct.size(),
      [&](std::size_t i) {
        const DriverRealization r =
            sample_realization(w, derive_stream(seed, i));
        direct[i] = std::abs(evolve_stochastic(w, r, lambda, cfg).values[0]);
        // conjugating the coupling by P is the same as driving with P s
        DriverRealization rot;
        rot.seed = r.seed;
        rot.s = dec.P * r.s;
        rotated[i] = std::abs(evolve_stochastic(w, rot, lambda, cfg).values[0]);
      },
      threads);

  InvariancePair out;
  out.direct = estimate_from_samples(direct);
  out.rotated = estimate_from_samples(rotated);
  out.overlap_3sigma = overlap_3sigma(out.direct, out.rotated);
  return out;
}

}  // namespace diffamp
