#pragma once

#include <span>

#include "masi/correlation.hpp"
#include "masi/mub.hpp"
#include "masi/skew.hpp"

namespace masi {

/// W = Σ_i I_ρ(|b_i⟩⟨b_i|)
Real wave_feature(const SkewContext& ctx, const MeasurementBasis& basis);

/// P = Σ_{i≠j} I_ρ(|b_i⟩⟨b_j|)
Real particle_feature(const SkewContext& ctx, const MeasurementBasis& basis);

/// S_f = Σ_{k,l} c̃_f(p_k, p_l) − 1. Throws InvalidSpectrum.
Real f_entropy(std::span<const Real> spectrum, const MonotoneFunction& metric);

struct DualityReport {
  Real wave = 0.0;
  Real particle = 0.0;
  Real f_entropy = 0.0;
  std::size_t dim = 0;
  /// |W + P + S_f − (d − 1)|
  Real residual_prop4 = 0.0;
};

DualityReport complementarity_report(const SkewContext& ctx, const MeasurementBasis& basis);

/// Largest eigenvalue at or above 1 − this counts as a pure total state.
inline constexpr Real kPureTolerance = 1e-9;

/// |W(ρ^A) + P(ρ^A) + (d_A + 1) Q(ρ^{AE}) − (d_A − Tr[(ρ^E)²])| for a pure
/// ρ^{AE}. Throws NotPure otherwise.
Real bipartite_complementarity_check(const BipartiteState& bp, const MonotoneFunction& metric,
                                     const MeasurementBasis& basis_a);

}  // namespace masi
