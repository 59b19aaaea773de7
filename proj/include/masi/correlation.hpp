#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "masi/coherence.hpp"
#include "masi/density.hpp"
#include "masi/monotone.hpp"
#include "masi/mub.hpp"
#include "masi/skew.hpp"

namespace masi {

/// Eigenmodes with λ_k above this cutoff carry a reduced state σ_k^B; the
/// rest contribute nothing since c̃_f(·, 0) = 0.
inline constexpr Real kModeCutoff = 1e-12;

struct EigenMode {
  Real lambda;
  std::vector<Complex> vector;  // |Ψ_k⟩ on A ⊗ B
  ComplexMatrix sigma_b;        // Tr_A |Ψ_k⟩⟨Ψ_k|
};

/// ρ^{AB} with subsystem dimensions, its reduced states, and the eigenmodes
/// feeding the closed form.
class BipartiteState {
 public:
  BipartiteState(DensityMatrix state, std::size_t dim_a, std::size_t dim_b);

  std::size_t dim_a() const noexcept { return dim_a_; }
  std::size_t dim_b() const noexcept { return dim_b_; }
  const DensityMatrix& state() const noexcept { return state_; }
  const DensityMatrix& reduced_a() const noexcept { return reduced_a_; }
  const DensityMatrix& reduced_b() const noexcept { return reduced_b_; }
  const std::vector<EigenMode>& modes() const noexcept { return modes_; }

 private:
  DensityMatrix state_;
  std::size_t dim_a_;
  std::size_t dim_b_;
  DensityMatrix reduced_a_;
  DensityMatrix reduced_b_;
  std::vector<EigenMode> modes_;
};

/// Exchanges the roles of A and B.
BipartiteState swap_parties(const BipartiteState& bp);

/// Joint and marginal skew contexts for one metric, built once and reused
/// across bases and samples.
class CorrelationContext {
 public:
  CorrelationContext(const BipartiteState& bp, const MonotoneFunction& metric);

  const BipartiteState& bipartite() const noexcept { return bp_; }
  const SkewContext& joint() const noexcept { return joint_; }
  const SkewContext& marginal() const noexcept { return marginal_; }
  const MonotoneFunction& metric() const noexcept { return joint_.metric(); }

 private:
  BipartiteState bp_;
  SkewContext joint_;
  SkewContext marginal_;
};

/// C_A(ρ^{AB}|Π^A) = Σ_i I_{ρ^{AB}}(|b_i⟩⟨b_i| ⊗ 1^B)
Real local_coherence(const CorrelationContext& cc, const MeasurementBasis& basis_a);
Real local_coherence(const BipartiteState& bp, const MonotoneFunction& metric, const MeasurementBasis& basis_a);

/// Q(ρ^{AB}|Π^A) = C_A(ρ^{AB}|Π^A) − C(ρ^A|Π^A)
Real correlation_wrt_basis(const CorrelationContext& cc, const MeasurementBasis& basis_a);
Real correlation_wrt_basis(const BipartiteState& bp, const MonotoneFunction& metric,
                           const MeasurementBasis& basis_a);

/// (Tr[c̃_f(L_{ρ^A}, R_{ρ^A})] − Σ_{k,l} c̃_f(λ_k, λ_l) Tr[σ_k^B σ_l^B]) / (d_A + 1)
Real average_correlation_closed(const BipartiteState& bp, const MonotoneFunction& metric);

Real average_correlation_mub(const CorrelationContext& cc, const MubFamily& family);
Real average_correlation_mub(const BipartiteState& bp, const MonotoneFunction& metric, const MubFamily& family);

/// (1/(d_A + 1)) Σ_i [I_{ρ^{AB}}(G_i ⊗ 1) − I_{ρ^A}(G_i)]; equals the
/// depolarizing-channel correlation.
Real average_correlation_operator_basis(const CorrelationContext& cc);
Real average_correlation_operator_basis(const BipartiteState& bp, const MonotoneFunction& metric);

McEstimate average_correlation_haar_mc(const CorrelationContext& cc, std::int64_t samples, std::uint64_t seed,
                                       Execution execution = Execution::Parallel);
McEstimate average_correlation_haar_mc(const BipartiteState& bp, const MonotoneFunction& metric,
                                       std::int64_t samples, std::uint64_t seed);

/// ∫ U†AU X U†BU dμ(U) =
///   [d Tr(AB) − Tr A Tr B]/(d(d²−1)) · Tr X · 1 + [d Tr A Tr B − Tr(AB)]/(d(d²−1)) · X
ComplexMatrix twirl_second_moment(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x);

/// Q_T = (d_A/(d_A + 1)) ∫ [I_{ρ^{AB}}(U ⊗ 1^B) − I_{ρ^A}(U)] dμ(U), integral
/// evaluated exactly through twirl_second_moment.
Real average_correlation_twirl_exact(const CorrelationContext& cc);
Real average_correlation_twirl_exact(const BipartiteState& bp, const MonotoneFunction& metric);

/// Same integral sampled over haar_unitary(d_A, seed, i).
McEstimate average_correlation_twirl_mc(const CorrelationContext& cc, std::int64_t samples, std::uint64_t seed,
                                        Execution execution = Execution::Parallel);

/// ((Tr √ρ^A)² − Tr[(Tr_A √ρ^{AB})²]) / (d_A + 1)
Real average_correlation_wy_special(const BipartiteState& bp);

/// (Σ_{i,j} 2p_ip_j/(p_i+p_j) − Σ_{k,l} 2λ_kλ_l/(λ_k+λ_l) Tr(σ_k^B σ_l^B)) / (d_A + 1)
Real average_correlation_fisher_special(const BipartiteState& bp);

}  // namespace masi
