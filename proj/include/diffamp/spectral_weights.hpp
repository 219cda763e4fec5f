#pragma once

#include <utility>
#include <vector>

#include "diffamp/types.hpp"

namespace diffamp {

// Nonnegative spectral weights eps_n of the driver field, n in [-N, N],
// forming a probability vector (sum = 1 within 1e-12; anything else is
// rejected rather than silently renormalized, so the covariance at zero
// lag stays exactly 1).
//
// Storage interleaves conjugate mode pairs: (0, 1, -1, 2, -2, ...). In
// this order the time-integrated coupling matrix is literally
// block-diagonal, with a 1x1 center block followed by one 2x2 block per
// pair index j.
class SpectralWeights {
 public:
  SpectralWeights(int n_max, const std::vector<std::pair<int, double>>& entries);

  int n_max() const { return n_max_; }
  int mode_count() const { return 2 * n_max_ + 1; }

  double eps(int n) const { return eps_[index_of_mode(n)]; }
  double eps_at(int storage_index) const;

  // storage index <-> signed mode number
  int index_of_mode(int n) const;
  int mode_of_index(int storage_index) const;

  const VectorXr& storage() const { return eps_; }

 private:
  int n_max_;
  VectorXr eps_;
};

}  // namespace diffamp
