#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace diffamp {

// Monte Carlo estimate of a nonnegative observable, with a crude
// heavy-tail diagnostic: when a single sample carries more than half of
// the total sum, the empirical mean is dominated by that one draw and
// the estimate cannot be trusted.
struct MomentEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  long n_samples = 0;
  double max_sample_fraction = 0.0;
  bool diverged_flag = false;
};

// Pairwise (cascade) summation; the result depends only on the order of
// the input vector, never on how many workers produced it.
double pairwise_sum(const double* data, std::size_t n);
double pairwise_sum(const std::vector<double>& v);

MomentEstimate estimate_from_samples(const std::vector<double>& samples);

// True when the 3-sigma intervals of the two estimates overlap.
bool overlap_3sigma(const MomentEstimate& a, const MomentEstimate& b);

// Runs body(i) for i in [0, n) across `threads` workers (0 = hardware
// concurrency). Each index must write only to its own slot of any shared
// output, which makes results independent of the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body,
                  unsigned threads = 0);

}  // namespace diffamp
