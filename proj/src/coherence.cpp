#include "masi/coherence.hpp"

#include <algorithm>
#include <cmath>

#include "masi/errors.hpp"
#include "masi/states.hpp"

namespace masi {

namespace {

Real coherence_of_columns(const SkewContext& ctx, const ComplexMatrix& columns) {
  Real sum = 0.0;
  for (std::size_t i = 0; i < columns.dim(); ++i) {
    const auto b = columns.column(i);
    sum += skew_information_outer(ctx, b, b);
  }
  return sum;
}

}  // namespace

Real coherence_wrt_basis(const SkewContext& ctx, const MeasurementBasis& basis) {
  if (basis.dim() != ctx.dim()) throw Error(ErrorKind::DimensionMismatch, "basis vs state dimension");
  return coherence_of_columns(ctx, basis.columns());
}

Real average_coherence_closed(const SkewContext& ctx) {
  const auto d = static_cast<Real>(ctx.dim());
  const Real tilde_sum = spectrum_tilde_sum(ctx.metric(), ctx.decomposition().values);
  return std::max<Real>(0.0, (d - tilde_sum) / (d + 1.0));
}

Real average_coherence_mub(const SkewContext& ctx, const MubFamily& family) {
  if (family.dim != ctx.dim()) throw Error(ErrorKind::DimensionMismatch, "MUB family vs state dimension");
  Real sum = 0.0;
  for (const auto& basis : family.bases) sum += coherence_wrt_basis(ctx, basis);
  return sum / static_cast<Real>(ctx.dim() + 1);
}

Real average_coherence_operator_basis(const SkewContext& ctx, std::span<const ComplexMatrix> basis) {
  Real sum = 0.0;
  for (const auto& g : basis) sum += skew_information(ctx, g);
  return sum / static_cast<Real>(ctx.dim() + 1);
}

Real average_coherence_operator_basis(const SkewContext& ctx) {
  const auto basis = hermitian_operator_basis(ctx.dim());
  return average_coherence_operator_basis(ctx, basis);
}

McEstimate average_coherence_haar_mc(const SkewContext& ctx, std::int64_t samples, std::uint64_t seed,
                                     Execution execution) {
  if (samples < 2) throw Error(ErrorKind::InvalidSampleCount, "samples must be >= 2");
  const std::size_t d = ctx.dim();
  const SampleFn integrand = [&](std::int64_t i) {
    return coherence_of_columns(ctx, haar_unitary(d, seed, static_cast<std::uint64_t>(i)));
  };
  return execution == Execution::Serial ? mc_estimate_serial(samples, integrand)
                                        : mc_estimate(samples, integrand);
}

Real AverageReport::max_exact_spread() const noexcept {
  Real spread = std::abs(closed_form - operator_basis_average);
  if (mub_average) {
    spread = std::max(spread, std::abs(closed_form - *mub_average));
    spread = std::max(spread, std::abs(operator_basis_average - *mub_average));
  }
  return spread;
}

AverageReport average_coherence_report(const SkewContext& ctx, std::int64_t samples, std::uint64_t seed) {
  AverageReport report;
  report.closed_form = average_coherence_closed(ctx);
  if (mub_supported(ctx.dim())) report.mub_average = average_coherence_mub(ctx, build_mub_family(ctx.dim()));
  report.operator_basis_average = average_coherence_operator_basis(ctx);
  if (samples > 0) report.haar_mc = average_coherence_haar_mc(ctx, samples, seed);
  return report;
}

}  // namespace masi
