#include "masi/skew.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "masi/errors.hpp"

namespace masi {

namespace {

constexpr Real kNegativeClamp = 1e-10;

Real finalize(Real value, Real scale) {
  if (value >= 0.0) return value;
  if (value >= -kNegativeClamp * std::max<Real>(1.0, scale)) return 0.0;
  throw Error(ErrorKind::NumericalError, "skew information " + std::to_string(value) + " < 0");
}

void require_dim(const SkewContext& ctx, std::size_t dim) {
  if (dim != ctx.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "operator dim " + std::to_string(dim) + " vs state dim " + std::to_string(ctx.dim()));
  }
}

}  // namespace

SkewContext::SkewContext(DensityMatrix state, MonotoneFunction metric)
    : state_(std::move(state)), metric_(std::move(metric)) {
  const auto& p = state_.eigenvalues();
  const std::size_t n = p.size();
  weights_.resize(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l)
      weights_[k * n + l] = 0.5 * (p[k] + p[l]) - tilde_c(metric_, p[k], p[l]);
}

ComplexMatrix SkewContext::to_eigenframe(const ComplexMatrix& a) const {
  const ComplexMatrix& v = decomposition().vectors;
  return v.adjoint() * a * v;
}

std::vector<Complex> SkewContext::to_eigenframe(std::span<const Complex> x) const {
  const ComplexMatrix& v = decomposition().vectors;
  const std::size_t n = dim();
  std::vector<Complex> y(n, Complex{0.0, 0.0});
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t r = 0; r < n; ++r) y[k] += std::conj(v(r, k)) * x[r];
  return y;
}

Real skew_information(const SkewContext& ctx, const ComplexMatrix& a) {
  require_dim(ctx, a.dim());
  const ComplexMatrix af = ctx.to_eigenframe(a);
  const std::size_t n = ctx.dim();
  Real sum = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) sum += ctx.weight(k, l) * std::norm(af(k, l));
  return finalize(sum, std::norm(frobenius_norm(a)));
}

Real skew_information_ratio_form(const SkewContext& ctx, const ComplexMatrix& a) {
  require_dim(ctx, a.dim());
  const ComplexMatrix af = ctx.to_eigenframe(a);
  const auto& p = ctx.decomposition().values;
  const MonotoneFunction& f = ctx.metric();
  const std::size_t n = ctx.dim();
  Real sum = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      if (p[k] == p[l]) continue;
      Real coefficient;
      if (p[l] == 0.0) {
        // y f(x/y) → x f(0) as y → 0+
        coefficient = 0.5 * p[k];
      } else if (p[k] == 0.0) {
        // p_l f(0) with f evaluated by its stored limit
        coefficient = 0.5 * p[l];
      } else {
        const Real diff = p[k] - p[l];
        coefficient = 0.5 * f.f0() * diff * diff / (p[l] * f(p[k] / p[l]));
      }
      sum += coefficient * std::norm(af(k, l));
    }
  return finalize(sum, std::norm(frobenius_norm(a)));
}

Real skew_information_outer(const SkewContext& ctx, std::span<const Complex> u,
                            std::span<const Complex> v) {
  require_dim(ctx, u.size());
  require_dim(ctx, v.size());
  const std::vector<Complex> yu = ctx.to_eigenframe(u);
  const std::vector<Complex> yv = ctx.to_eigenframe(v);
  const std::size_t n = ctx.dim();
  // ⟨ψ_k|u⟩⟨v|ψ_l⟩
  Real sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const Real ak = std::norm(yu[k]);
    for (std::size_t l = 0; l < n; ++l) sum += ctx.weight(k, l) * ak * std::norm(yv[l]);
  }
  return finalize(sum, norm(u) * norm(u) * norm(v) * norm(v));
}

Real skew_information_projector(const SkewContext& ctx, std::span<const std::vector<Complex>> vectors) {
  const std::size_t n = ctx.dim();
  const std::size_t m = vectors.size();
  std::vector<Complex> y(n * m);
  for (std::size_t j = 0; j < m; ++j) {
    require_dim(ctx, vectors[j].size());
    const std::vector<Complex> yj = ctx.to_eigenframe(vectors[j]);
    for (std::size_t k = 0; k < n; ++k) y[k * m + j] = yj[k];
  }
  Real sum = 0.0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      Complex akl{0.0, 0.0};
      for (std::size_t j = 0; j < m; ++j) akl += y[k * m + j] * std::conj(y[l * m + j]);
      sum += ctx.weight(k, l) * std::norm(akl);
    }
  return finalize(sum, static_cast<Real>(m));
}

Real symmetrized_second_moment(const DensityMatrix& rho, const ComplexMatrix& a) {
  if (a.dim() != rho.dim()) throw Error(ErrorKind::DimensionMismatch, "symmetrized_second_moment");
  const ComplexMatrix ad = a.adjoint();
  const ComplexMatrix s = ad * a + a * ad;
  return 0.5 * trace_product(rho.matrix(), s).real();
}

}  // namespace masi
