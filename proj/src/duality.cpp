#include "masi/duality.hpp"

#include <cmath>

#include "masi/errors.hpp"

namespace masi {

namespace {

void require_dim(const SkewContext& ctx, const MeasurementBasis& basis) {
  if (basis.dim() != ctx.dim()) throw Error(ErrorKind::DimensionMismatch, "basis vs state dimension");
}

}  // namespace

Real wave_feature(const SkewContext& ctx, const MeasurementBasis& basis) {
  require_dim(ctx, basis);
  Real sum = 0.0;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const auto b = basis.vector(i);
    sum += skew_information_outer(ctx, b, b);
  }
  return sum;
}

Real particle_feature(const SkewContext& ctx, const MeasurementBasis& basis) {
  require_dim(ctx, basis);
  const std::size_t d = basis.dim();
  std::vector<std::vector<Complex>> b(d);
  for (std::size_t i = 0; i < d; ++i) b[i] = basis.vector(i);
  Real sum = 0.0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (i != j) sum += skew_information_outer(ctx, b[i], b[j]);
  return sum;
}

Real f_entropy(std::span<const Real> spectrum, const MonotoneFunction& metric) {
  return spectrum_tilde_sum(metric, spectrum) - 1.0;
}

DualityReport complementarity_report(const SkewContext& ctx, const MeasurementBasis& basis) {
  DualityReport r;
  r.dim = ctx.dim();
  r.wave = wave_feature(ctx, basis);
  r.particle = particle_feature(ctx, basis);
  r.f_entropy = f_entropy(ctx.state().eigenvalues(), ctx.metric());
  r.residual_prop4 = std::abs(r.wave + r.particle + r.f_entropy - static_cast<Real>(r.dim - 1));
  return r;
}

Real bipartite_complementarity_check(const BipartiteState& bp, const MonotoneFunction& metric,
                                     const MeasurementBasis& basis_a) {
  const auto& lambda = bp.state().eigenvalues();
  if (lambda.empty() || lambda.front() < 1.0 - kPureTolerance)
    throw Error(ErrorKind::NotPure, "total state is not pure");
  if (basis_a.dim() != bp.dim_a()) throw Error(ErrorKind::DimensionMismatch, "A-basis vs d_A");
  const SkewContext marginal(bp.reduced_a(), metric);
  const Real w = wave_feature(marginal, basis_a);
  const Real p = particle_feature(marginal, basis_a);
  const Real q = average_correlation_closed(bp, metric);
  const Real da = static_cast<Real>(bp.dim_a());
  const Real rhs = da - bp.reduced_b().purity();
  return std::abs(w + p + (da + 1.0) * q - rhs);
}

}  // namespace masi
