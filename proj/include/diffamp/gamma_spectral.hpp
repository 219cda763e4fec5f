#pragma once

#include "diffamp/driver_field.hpp"

namespace diffamp {

// Closed-form eigensystem of the time-integrated coupling matrix.
//
// kappas holds the eigenvalues in storage order: eps_0 for the center
// block, then (eps_j + eps_-j, 0) for each pair block j. P is the
// block-diagonal unitary assembled from the 2x2 pair rotations;
// P^dag (integrated_gamma) P = diag(kappas).
struct ModeDecomposition {
  VectorXr kappas;
  MatrixXc P;
  double lambda_bar_c = 0.0;  // 1 / max kappa, the zero-diffraction critical coupling
  int m_index = 0;            // storage index of the top mode
  int k = 0;                  // pair index of the top mode; 0 for the center block
  double alpha_m = 0.0;       // 4 eps_k eps_-k for a pair block, else 0
};

// Rank-1 Hermitian coupling gamma(x,t) = a a^dag with
// a_n = sqrt(eps_n) exp(-2 i pi (n x + n^2 t)), so that
// s^dag gamma(x,t) s = |S(x,t)|^2. Trace is always 1.
MatrixXc gamma_at(const SpectralWeights& w, double x, double t);

// Analytic time integral of gamma(0,t) over one period: entry (n,m) is
// sqrt(eps_n eps_m) when n^2 = m^2 and 0 otherwise, i.e. block-diagonal
// in the interleaved storage order.
MatrixXc integrated_gamma(const SpectralWeights& w);

ModeDecomposition eigen_closed_form(const SpectralWeights& w);

double lambda_bar_c(const SpectralWeights& w);

// sigma^dag P^dag gamma(x,t) P sigma for sigma = z * (unit vector at the
// top mode), computed directly from the matrices. Equals
// [1/lambda_bar_c - alpha_m lambda_bar_c sin^2(2 pi k x)] |z|^2 and is
// independent of t.
double quadratic_form_direction(const SpectralWeights& w, double x, double t,
                                Complex z, const ModeDecomposition& dec);

}  // namespace diffamp
