#include "diffamp/statistics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <thread>

namespace diffamp {

double pairwise_sum(const double* data, std::size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

double pairwise_sum(const std::vector<double>& v) {
  return pairwise_sum(v.data(), v.size());
}

MomentEstimate estimate_from_samples(const std::vector<double>& samples) {
  MomentEstimate e;
  e.n_samples = static_cast<long>(samples.size());
  if (samples.empty()) return e;

  const double total = pairwise_sum(samples);
  e.mean = total / static_cast<double>(samples.size());

  if (samples.size() > 1) {
    std::vector<double> sq(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const double d = samples[i] - e.mean;
      sq[i] = d * d;
    }
    const double var =
        pairwise_sum(sq) / static_cast<double>(samples.size() - 1);
    e.std_error = std::sqrt(var / static_cast<double>(samples.size()));
  }

  const double largest = *std::max_element(samples.begin(), samples.end());
  if (total > 0.0) {
    e.max_sample_fraction = largest / total;
  }
  e.diverged_flag = e.max_sample_fraction > 0.5;
  return e;
}

bool overlap_3sigma(const MomentEstimate& a, const MomentEstimate& b) {
  return std::abs(a.mean - b.mean) <= 3.0 * (a.std_error + b.std_error);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  unsigned threads) {
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  if (threads == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace diffamp
