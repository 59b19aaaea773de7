#pragma once

#include <span>
#include <vector>

#include "masi/density.hpp"
#include "masi/monotone.hpp"

namespace masi {

/// State + metric, with the eigenframe weights precomputed:
///   w_kl = ½(p_k + p_l) − c̃_f(p_k, p_l)
/// so that I_ρ^c(A) = Σ_{k,l} w_kl |⟨ψ_k|A|ψ_l⟩|².
class SkewContext {
 public:
  SkewContext(DensityMatrix state, MonotoneFunction metric);

  std::size_t dim() const noexcept { return state_.dim(); }
  const DensityMatrix& state() const noexcept { return state_; }
  const SpectralDecomposition& decomposition() const noexcept { return state_.spectrum(); }
  const MonotoneFunction& metric() const noexcept { return metric_; }
  Real weight(std::size_t k, std::size_t l) const noexcept { return weights_[k * dim() + l]; }

  /// ⟨ψ_k|A|ψ_l⟩ for all k, l.
  ComplexMatrix to_eigenframe(const ComplexMatrix& a) const;
  /// ⟨ψ_k|v⟩ for all k.
  std::vector<Complex> to_eigenframe(std::span<const Complex> v) const;

 private:
  DensityMatrix state_;
  MonotoneFunction metric_;
  std::vector<Real> weights_;
};

/// Metric-adjusted skew information of an arbitrary (possibly non-Hermitian)
/// operator,
///   I = ½Tr[ρ(A†A + AA†)] − Σ_{k,l} c̃_f(p_k, p_l) |⟨ψ_k|A|ψ_l⟩|²,
/// with both terms evaluated in the eigenframe of ρ. Round-off in
/// [−1e-10, 0) is clamped to 0; lower values throw NumericalError.
Real skew_information(const SkewContext& ctx, const ComplexMatrix& a);

/// Same quantity through the ratio form
///   (f(0)/2) Σ_{k,l} (p_k − p_l)² / (p_l f(p_k/p_l)) |⟨ψ_k|A|ψ_l⟩|²,
/// with the p_l → 0 limit taken analytically. Kept as an oracle.
Real skew_information_ratio_form(const SkewContext& ctx, const ComplexMatrix& a);

/// I for A = |u⟩⟨v| in O(d²) after the frame change.
Real skew_information_outer(const SkewContext& ctx, std::span<const Complex> u,
                            std::span<const Complex> v);

/// I for A = Σ_j |v_j⟩⟨v_j|.
Real skew_information_projector(const SkewContext& ctx, std::span<const std::vector<Complex>> vectors);

/// ½Tr[ρ(A†A + AA†)] evaluated directly in the computational frame.
Real symmetrized_second_moment(const DensityMatrix& rho, const ComplexMatrix& a);

}  // namespace masi
