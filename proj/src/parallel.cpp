#include "masi/parallel.hpp"

#include <cmath>

#include "masi/errors.hpp"

#ifdef MASI_HAVE_OPENMP
#include <omp.h>
#endif

namespace masi {

McEstimate reduce_samples(const std::vector<Real>& values) {
  const auto n = static_cast<std::int64_t>(values.size());
  if (n < 2) throw Error(ErrorKind::InvalidSampleCount, "need at least 2 samples");
  Real sum = 0.0;
  for (Real v : values) sum += v;
  const Real mean = sum / static_cast<Real>(n);
  Real ss = 0.0;
  for (Real v : values) ss += (v - mean) * (v - mean);
  const Real variance = ss / static_cast<Real>(n - 1);
  return {mean, std::sqrt(variance / static_cast<Real>(n)), n};
}

std::vector<Real> map_serial(std::int64_t count, const SampleFn& fn) {
  std::vector<Real> out(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(i);
  return out;
}

void for_each_index_parallel(std::int64_t count, const std::function<void(std::int64_t)>& fn) {
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
#ifdef MASI_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      fn(i);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::vector<Real> map_parallel(std::int64_t count, const SampleFn& fn) {
  std::vector<Real> out(static_cast<std::size_t>(count));
  for_each_index_parallel(count, [&](std::int64_t i) { out[static_cast<std::size_t>(i)] = fn(i); });
  return out;
}

McEstimate mc_estimate_serial(std::int64_t samples, const SampleFn& fn) {
  if (samples < 2) throw Error(ErrorKind::InvalidSampleCount, "samples must be >= 2");
  return reduce_samples(map_serial(samples, fn));
}

McEstimate mc_estimate(std::int64_t samples, const SampleFn& fn) {
  if (samples < 2) throw Error(ErrorKind::InvalidSampleCount, "samples must be >= 2");
  return reduce_samples(map_parallel(samples, fn));
}

int parallel_threads() noexcept {
#ifdef MASI_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace masi
