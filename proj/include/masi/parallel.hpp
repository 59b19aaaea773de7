#pragma once

#include <cstdint>
#include <exception>
#include <functional>
#include <vector>

#include "masi/matrix.hpp"

namespace masi {

/// Monte Carlo estimate: sample mean and std_error = s/√n with the n − 1
/// sample standard deviation.
struct McEstimate {
  Real mean = 0.0;
  Real std_error = 0.0;
  std::int64_t samples = 0;
};

using SampleFn = std::function<Real(std::int64_t)>;

/// Sums in index order; shared by both evaluation paths.
McEstimate reduce_samples(const std::vector<Real>& values);

/// Reference path: evaluates samples sequentially.
std::vector<Real> map_serial(std::int64_t count, const SampleFn& fn);

/// OpenMP path (falls back to serial without OpenMP). Each index is
/// evaluated independently and stored at its own slot, so the output equals
/// map_serial bit-for-bit. If several indices throw, the exception of the
/// lowest index is rethrown.
std::vector<Real> map_parallel(std::int64_t count, const SampleFn& fn);

McEstimate mc_estimate_serial(std::int64_t samples, const SampleFn& fn);
McEstimate mc_estimate(std::int64_t samples, const SampleFn& fn);

/// Generic ordered parallel loop for non-scalar work (sweep rows, etc.).
void for_each_index_parallel(std::int64_t count, const std::function<void(std::int64_t)>& fn);

int parallel_threads() noexcept;

}  // namespace masi
