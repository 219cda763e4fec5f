#pragma once

#include <functional>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "diffamp/amplifier.hpp"

namespace diffamp {

enum class Kinetic {
  Diffraction,  // i/2 * Laplacian
  Diffusion,    // D * Laplacian
  None,         // pure gain
};

struct SolverConfig {
  int n_x = 256;
  int n_t = 1024;
  Kinetic kinetic = Kinetic::Diffraction;
  double diffusion_coefficient = 0.0;  // used only for Kinetic::Diffusion
};

// Throws std::invalid_argument naming the offending field. n_x must be a
// power of two and at least 8x the driver bandwidth so the gain factor is
// resolved with margin.
void validate(const SolverConfig& cfg, int driver_n_max);

// Complex field sampled at x_j = j/n_x on the unit circle, plus the L2
// norm recorded at ~16 uniform times during the evolution. The propagation
// domain is the circle with uniform initial data, which matches whole-line
// propagation of a 1-periodic problem.
struct GridField {
  VectorXc values;
  double time = 0.0;
  std::vector<double> checkpoint_times;
  std::vector<double> checkpoint_norms;
};

// sqrt of the grid approximation of integral |E|^2 dx over the circle.
double grid_l2_norm(const VectorXc& values);

// Strang split-step engine: half kinetic step in spectral space, full
// pointwise gain step, half kinetic step; second order in dt. One instance
// advances one field and must not be shared across threads; ensembles run
// independent instances.
class SplitStepSolver {
 public:
  // gain_integral(t, dt, out) fills out[j] with the exact exponent
  // integral_t^{t+dt} gain(x_j, tau) d tau applied in the pointwise substep.
  using GainIntegral = std::function<void(double t, double dt, VectorXr& out)>;
  using CheckpointFn = std::function<void(double t, double l2_norm)>;

  explicit SplitStepSolver(const SolverConfig& cfg);

  void run(VectorXc& field, double t0, double t1, int n_steps,
           const GainIntegral& gain_integral,
           const CheckpointFn& on_checkpoint = {});

  int n_x() const { return cfg_.n_x; }
  const VectorXr& grid() const { return grid_; }

 private:
  void build_kinetic_phase(double dt);

  SolverConfig cfg_;
  VectorXr grid_;        // x_j = j/n_x
  VectorXr omega2_;      // (2 pi q)^2 per FFT bin
  VectorXc half_phase_;  // kinetic multiplier for a half step
  double cached_dt_ = -1.0;
  Eigen::FFT<double> fft_;
  VectorXc spectrum_;
  VectorXr gain_scratch_;
};

// Exact substep integral of the driver intensity: |S(x,tau)|^2 is a
// trigonometric polynomial in both x and tau, so its integral over
// [t, t+dt] reduces to a short Fourier series in x with analytic
// coefficients. Not thread-safe; one instance per solver.
class DriverIntensityIntegral {
 public:
  DriverIntensityIntegral(const SpectralWeights& w, const DriverRealization& r,
                          int n_x);

  void operator()(double t, double dt, VectorXr& out);

 private:
  struct PairTerm {
    Complex weight;  // sqrt(eps_a eps_b) conj(s_a) s_b
    int freq_slot;   // index into freqs_, -1 when the time phase is constant
    int d;           // mode-number difference a - b, >= 0
  };

  std::vector<PairTerm> pairs_;
  std::vector<int> freqs_;  // distinct nonzero n_a^2 - n_b^2 values
  std::vector<Complex> freq_factor_;
  std::vector<Complex> coeff_;   // Fourier coefficients c_d of the integral
  MatrixXc phase_table_;         // e^{-2 i pi d x_j}, row d-1
  int max_d_ = 0;
  double cached_dt_ = -1.0;
  std::vector<Complex> psi_;     // (e^{i theta dt} - 1)/(i theta) per freq
};

using SpaceTimePotential = std::function<double(double x, double t)>;

// d/dt E = (kinetic) E + lambda |S(x,t)|^2 E with E(x,0) = 1, integrated to
// t = 1. The gain substep uses the analytic time integral of the
// intensity, so the splitting error is purely non-commutativity.
GridField evolve_stochastic(const SpectralWeights& w,
                            const DriverRealization& r, double lambda,
                            const SolverConfig& cfg);

// d/dt E = (kinetic) E - scale * V(x,t) E with E(x,0) = 1, integrated to
// t_final. Time-dependent potentials are sampled at the substep midpoint,
// which preserves second order.
GridField evolve_potential(const SpaceTimePotential& potential, double scale,
                           const SolverConfig& cfg, double t_final = 1.0);

// Monte Carlo mean of |E(0,1)| over driver realizations.
MomentEstimate mean_abs_e(const SpectralWeights& w, double lambda,
                          const SolverConfig& cfg, long n_samples,
                          std::uint64_t seed, unsigned threads = 0);

struct InvariancePair {
  MomentEstimate direct;   // coefficients s
  MomentEstimate rotated;  // coefficients P s, i.e. coupling P^dag gamma P
  bool overlap_3sigma = false;
};

// Estimates <|E(0,1)|> under the coupling gamma and under its unitary
// conjugation by the block diagonalizer P, drawing the same coefficient
// samples for both arms. The two estimates must agree statistically.
InvariancePair unitary_invariance_check(const SpectralWeights& w,
                                        double lambda, const SolverConfig& cfg,
                                        long n_samples, std::uint64_t seed,
                                        unsigned threads = 0);

}  // namespace diffamp
