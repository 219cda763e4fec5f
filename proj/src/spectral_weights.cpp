#include "diffamp/spectral_weights.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace diffamp {

SpectralWeights::SpectralWeights(
    int n_max, const std::vector<std::pair<int, double>>& entries)
    : n_max_(n_max) {
  if (n_max < 0) {
    throw std::invalid_argument("weights.n_max: must be >= 0");
  }
  eps_ = VectorXr::Zero(2 * n_max + 1);
  std::vector<bool> seen(static_cast<std::size_t>(2 * n_max + 1), false);
  for (const auto& [n, value] : entries) {
    if (n < -n_max || n > n_max) {
      throw std::invalid_argument("weights.entries: mode " + std::to_string(n) +
                                  " outside [-n_max, n_max]");
    }
    const int i = index_of_mode(n);
    if (seen[static_cast<std::size_t>(i)]) {
      throw std::invalid_argument("weights.entries: duplicate mode " +
                                  std::to_string(n));
    }
    seen[static_cast<std::size_t>(i)] = true;
    if (!(value >= 0.0) || !std::isfinite(value)) {
      throw std::invalid_argument("weights.entries: eps[" + std::to_string(n) +
                                  "] must be finite and >= 0");
    }
    eps_[i] = value;
  }
  if (std::abs(eps_.sum() - 1.0) > 1e-12) {
    throw std::invalid_argument(
        "weights.entries: eps must sum to 1 (got " +
        std::to_string(eps_.sum()) + "); renormalize the input explicitly");
  }
}

double SpectralWeights::eps_at(int storage_index) const {
  if (storage_index < 0 || storage_index >= mode_count()) {
    throw std::out_of_range("storage index out of range");
  }
  return eps_[storage_index];
}

int SpectralWeights::index_of_mode(int n) const {
  if (n < -n_max_ || n > n_max_) {
    throw std::out_of_range("mode number out of range");
  }
  if (n == 0) return 0;
  return n > 0 ? 2 * n - 1 : -2 * n;
}

int SpectralWeights::mode_of_index(int storage_index) const {
  if (storage_index < 0 || storage_index >= mode_count()) {
    throw std::out_of_range("storage index out of range");
  }
  if (storage_index == 0) return 0;
  return storage_index % 2 == 1 ? (storage_index + 1) / 2 : -storage_index / 2;
}

}  // namespace diffamp
