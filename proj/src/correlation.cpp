#include "masi/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "masi/errors.hpp"
#include "masi/states.hpp"

namespace masi {

namespace {

constexpr Real kModeTolerance = 1e-10;

std::vector<std::vector<Complex>> lifted_projector_vectors(const std::vector<Complex>& b, std::size_t dim_b) {
  std::vector<std::vector<Complex>> out(dim_b);
  const std::size_t dim_a = b.size();
  for (std::size_t mu = 0; mu < dim_b; ++mu) {
    out[mu].assign(dim_a * dim_b, Complex{0.0, 0.0});
    for (std::size_t a = 0; a < dim_a; ++a) out[mu][a * dim_b + mu] = b[a];
  }
  return out;
}

Real sum_of_projector_terms(const SkewContext& joint, const ComplexMatrix& columns, std::size_t dim_b) {
  Real sum = 0.0;
  for (std::size_t i = 0; i < columns.dim(); ++i)
    sum += skew_information_projector(joint, lifted_projector_vectors(columns.column(i), dim_b));
  return sum;
}

Real correlation_of_columns(const CorrelationContext& cc, const ComplexMatrix& columns) {
  const std::size_t db = cc.bipartite().dim_b();
  Real marginal = 0.0;
  for (std::size_t i = 0; i < columns.dim(); ++i) {
    const auto b = columns.column(i);
    marginal += skew_information_outer(cc.marginal(), b, b);
  }
  return sum_of_projector_terms(cc.joint(), columns, db) - marginal;
}

void require_basis(const BipartiteState& bp, std::size_t dim) {
  if (dim != bp.dim_a())
    throw Error(ErrorKind::DimensionMismatch,
                "A-basis dim " + std::to_string(dim) + " vs d_A " + std::to_string(bp.dim_a()));
}

/// Applies X ↦ ∫ (U ⊗ 1) X (U† ⊗ 1) dμ(U) block by block.
ComplexMatrix twirl_a_side(const ComplexMatrix& x, std::size_t dim_a, std::size_t dim_b) {
  const ComplexMatrix id = ComplexMatrix::identity(dim_a);
  ComplexMatrix out(x.dim());
  ComplexMatrix block(dim_a);
  for (std::size_t mu = 0; mu < dim_b; ++mu)
    for (std::size_t nu = 0; nu < dim_b; ++nu) {
      for (std::size_t a = 0; a < dim_a; ++a)
        for (std::size_t ap = 0; ap < dim_a; ++ap) block(a, ap) = x(a * dim_b + mu, ap * dim_b + nu);
      const ComplexMatrix twirled = twirl_second_moment(block, id, id);
      for (std::size_t a = 0; a < dim_a; ++a)
        for (std::size_t ap = 0; ap < dim_a; ++ap) out(a * dim_b + mu, ap * dim_b + nu) = twirled(a, ap);
    }
  return out;
}

Real expectation(const ComplexMatrix& m, std::span<const Complex> v) {
  return inner(v, m * v).real();
}

Real twirl_integrand(const CorrelationContext& cc, const ComplexMatrix& u) {
  const BipartiteState& bp = cc.bipartite();
  const ComplexMatrix lifted = tensor(u, ComplexMatrix::identity(bp.dim_b()));
  const Real da = static_cast<Real>(bp.dim_a());
  return da / (da + 1.0) * (skew_information(cc.joint(), lifted) - skew_information(cc.marginal(), u));
}

Real pair_overlap_sum(const BipartiteState& bp, const MonotoneFunction* metric) {
  const auto& modes = bp.modes();
  Real sum = 0.0;
  for (const auto& k : modes)
    for (const auto& l : modes) {
      Real c;
      if (metric) {
        c = tilde_c(*metric, k.lambda, l.lambda);
      } else {
        c = 2.0 * k.lambda * l.lambda / (k.lambda + l.lambda);
      }
      sum += c * trace_product(k.sigma_b, l.sigma_b).real();
    }
  return sum;
}

}  // namespace

BipartiteState::BipartiteState(DensityMatrix state, std::size_t dim_a, std::size_t dim_b)
    : state_(std::move(state)),
      dim_a_(dim_a),
      dim_b_(dim_b),
      reduced_a_(DensityMatrix::maximally_mixed(1)),
      reduced_b_(DensityMatrix::maximally_mixed(1)) {
  if (dim_a < 1 || dim_b < 1 || dim_a * dim_b != state_.dim())
    throw Error(ErrorKind::DimensionMismatch, "state dim " + std::to_string(state_.dim()) + " != " +
                                                  std::to_string(dim_a) + " x " + std::to_string(dim_b));
  reduced_a_ = DensityMatrix(partial_trace(state_.matrix(), dim_a, dim_b, Keep::A));
  reduced_b_ = DensityMatrix(partial_trace(state_.matrix(), dim_a, dim_b, Keep::B));

  const auto& spec = state_.spectrum();
  ComplexMatrix rebuilt(dim_b);
  for (std::size_t k = 0; k < spec.dim(); ++k) {
    if (spec.values[k] <= kModeCutoff) continue;
    EigenMode mode{spec.values[k], spec.vector(k), {}};
    mode.sigma_b = partial_trace(ComplexMatrix::projector(mode.vector), dim_a, dim_b, Keep::B);
    if (std::abs(mode.sigma_b.trace() - Complex{1.0, 0.0}) > kModeTolerance)
      throw Error(ErrorKind::NumericalError, "reduced eigenmode has trace != 1");
    rebuilt += Complex{mode.lambda, 0.0} * mode.sigma_b;
    modes_.push_back(std::move(mode));
  }
  Real defect = 0.0;
  for (std::size_t r = 0; r < dim_b; ++r)
    for (std::size_t c = 0; c < dim_b; ++c)
      defect = std::max(defect, std::abs(rebuilt(r, c) - reduced_b_.matrix()(r, c)));
  if (defect > kModeTolerance) throw Error(ErrorKind::NumericalError, "eigenmodes do not recover rho_B");
}

BipartiteState swap_parties(const BipartiteState& bp) {
  return BipartiteState(DensityMatrix(swap_factors(bp.state().matrix(), bp.dim_a(), bp.dim_b())), bp.dim_b(),
                        bp.dim_a());
}

CorrelationContext::CorrelationContext(const BipartiteState& bp, const MonotoneFunction& metric)
    : bp_(bp), joint_(bp.state(), metric), marginal_(bp.reduced_a(), metric) {}

Real local_coherence(const CorrelationContext& cc, const MeasurementBasis& basis_a) {
  require_basis(cc.bipartite(), basis_a.dim());
  return sum_of_projector_terms(cc.joint(), basis_a.columns(), cc.bipartite().dim_b());
}

Real local_coherence(const BipartiteState& bp, const MonotoneFunction& metric, const MeasurementBasis& basis_a) {
  return local_coherence(CorrelationContext(bp, metric), basis_a);
}

Real correlation_wrt_basis(const CorrelationContext& cc, const MeasurementBasis& basis_a) {
  require_basis(cc.bipartite(), basis_a.dim());
  return correlation_of_columns(cc, basis_a.columns());
}

Real correlation_wrt_basis(const BipartiteState& bp, const MonotoneFunction& metric,
                           const MeasurementBasis& basis_a) {
  return correlation_wrt_basis(CorrelationContext(bp, metric), basis_a);
}

Real average_correlation_closed(const BipartiteState& bp, const MonotoneFunction& metric) {
  const Real marginal = spectrum_tilde_sum(metric, bp.reduced_a().eigenvalues());
  return (marginal - pair_overlap_sum(bp, &metric)) / static_cast<Real>(bp.dim_a() + 1);
}

Real average_correlation_mub(const CorrelationContext& cc, const MubFamily& family) {
  require_basis(cc.bipartite(), family.dim);
  Real sum = 0.0;
  for (const auto& basis : family.bases) sum += correlation_of_columns(cc, basis.columns());
  return sum / static_cast<Real>(cc.bipartite().dim_a() + 1);
}

Real average_correlation_mub(const BipartiteState& bp, const MonotoneFunction& metric, const MubFamily& family) {
  return average_correlation_mub(CorrelationContext(bp, metric), family);
}

Real average_correlation_operator_basis(const CorrelationContext& cc) {
  const BipartiteState& bp = cc.bipartite();
  const ComplexMatrix id_b = ComplexMatrix::identity(bp.dim_b());
  Real sum = 0.0;
  for (const auto& g : hermitian_operator_basis(bp.dim_a()))
    sum += skew_information(cc.joint(), tensor(g, id_b)) - skew_information(cc.marginal(), g);
  return sum / static_cast<Real>(bp.dim_a() + 1);
}

Real average_correlation_operator_basis(const BipartiteState& bp, const MonotoneFunction& metric) {
  return average_correlation_operator_basis(CorrelationContext(bp, metric));
}

McEstimate average_correlation_haar_mc(const CorrelationContext& cc, std::int64_t samples, std::uint64_t seed,
                                       Execution execution) {
  if (samples < 2) throw Error(ErrorKind::InvalidSampleCount, "samples must be >= 2");
  const std::size_t da = cc.bipartite().dim_a();
  const SampleFn integrand = [&](std::int64_t i) {
    return correlation_of_columns(cc, haar_unitary(da, seed, static_cast<std::uint64_t>(i)));
  };
  return execution == Execution::Serial ? mc_estimate_serial(samples, integrand)
                                        : mc_estimate(samples, integrand);
}

McEstimate average_correlation_haar_mc(const BipartiteState& bp, const MonotoneFunction& metric,
                                       std::int64_t samples, std::uint64_t seed) {
  return average_correlation_haar_mc(CorrelationContext(bp, metric), samples, seed);
}

ComplexMatrix twirl_second_moment(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x) {
  const std::size_t n = a.dim();
  if (b.dim() != n || x.dim() != n) throw Error(ErrorKind::DimensionMismatch, "twirl operands differ in size");
  if (n < 2) throw Error(ErrorKind::UnsupportedDimension, "twirl formula needs d >= 2");
  const Real d = static_cast<Real>(n);
  const Complex tr_ab = trace_product(a, b);
  const Complex tr_a_tr_b = a.trace() * b.trace();
  const Real denom = d * (d * d - 1.0);
  const Complex alpha = (d * tr_ab - tr_a_tr_b) / denom;
  const Complex beta = (d * tr_a_tr_b - tr_ab) / denom;
  ComplexMatrix out = beta * x;
  const Complex shift = alpha * x.trace();
  for (std::size_t i = 0; i < n; ++i) out(i, i) += shift;
  return out;
}

Real average_correlation_twirl_exact(const CorrelationContext& cc) {
  const BipartiteState& bp = cc.bipartite();
  const MonotoneFunction& f = cc.metric();
  const std::size_t da = bp.dim_a();
  const std::size_t db = bp.dim_b();

  const auto& modes = bp.modes();
  std::vector<ComplexMatrix> twirled;
  twirled.reserve(modes.size());
  for (const auto& l : modes) twirled.push_back(twirl_a_side(ComplexMatrix::projector(l.vector), da, db));
  Real joint = bp.state().matrix().trace().real();
  for (std::size_t k = 0; k < modes.size(); ++k)
    for (std::size_t l = 0; l < modes.size(); ++l)
      joint -= tilde_c(f, modes[k].lambda, modes[l].lambda) * expectation(twirled[l], modes[k].vector);

  const auto& spec = bp.reduced_a().spectrum();
  const ComplexMatrix id = ComplexMatrix::identity(da);
  std::vector<ComplexMatrix> twirled_a;
  for (std::size_t j = 0; j < da; ++j)
    twirled_a.push_back(twirl_second_moment(ComplexMatrix::projector(spec.vector(j)), id, id));
  Real marginal = bp.reduced_a().matrix().trace().real();
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      marginal -= tilde_c(f, spec.values[i], spec.values[j]) * expectation(twirled_a[j], spec.vector(i));

  const Real d = static_cast<Real>(da);
  return d / (d + 1.0) * (joint - marginal);
}

Real average_correlation_twirl_exact(const BipartiteState& bp, const MonotoneFunction& metric) {
  return average_correlation_twirl_exact(CorrelationContext(bp, metric));
}

McEstimate average_correlation_twirl_mc(const CorrelationContext& cc, std::int64_t samples, std::uint64_t seed,
                                        Execution execution) {
  if (samples < 2) throw Error(ErrorKind::InvalidSampleCount, "samples must be >= 2");
  const std::size_t da = cc.bipartite().dim_a();
  const SampleFn integrand = [&](std::int64_t i) {
    return twirl_integrand(cc, haar_unitary(da, seed, static_cast<std::uint64_t>(i)));
  };
  return execution == Execution::Serial ? mc_estimate_serial(samples, integrand)
                                        : mc_estimate(samples, integrand);
}

Real average_correlation_wy_special(const BipartiteState& bp) {
  const Real root_trace = sqrt_psd(bp.reduced_a().matrix()).trace().real();
  const ComplexMatrix partial = partial_trace(sqrt_psd(bp.state().matrix()), bp.dim_a(), bp.dim_b(), Keep::B);
  const Real second = trace_product(partial, partial).real();
  return (root_trace * root_trace - second) / static_cast<Real>(bp.dim_a() + 1);
}

Real average_correlation_fisher_special(const BipartiteState& bp) {
  const auto& p = bp.reduced_a().eigenvalues();
  Real first = 0.0;
  for (Real pi : p)
    for (Real pj : p)
      if (pi + pj > 0.0) first += 2.0 * pi * pj / (pi + pj);
  return (first - pair_overlap_sum(bp, nullptr)) / static_cast<Real>(bp.dim_a() + 1);
}

}  // namespace masi
