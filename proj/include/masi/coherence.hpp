#pragma once

#include <cstdint>
#include <optional>

#include "masi/mub.hpp"
#include "masi/parallel.hpp"
#include "masi/skew.hpp"

namespace masi {

inline constexpr std::int64_t kDefaultSamples = 4096;

enum class Execution { Serial, Parallel };

/// C(ρ|Π) = Σ_i I_ρ(|b_i⟩⟨b_i|)
Real coherence_wrt_basis(const SkewContext& ctx, const MeasurementBasis& basis);

/// (d − Tr[c̃_f(L_ρ, R_ρ)]) / (d + 1)
Real average_coherence_closed(const SkewContext& ctx);

/// Mean of C(ρ|Π_t) over a complete MUB family.
Real average_coherence_mub(const SkewContext& ctx, const MubFamily& family);

/// Σ_i I_ρ(G_i) / (d + 1) over the Hermitian operator basis.
Real average_coherence_operator_basis(const SkewContext& ctx);
Real average_coherence_operator_basis(const SkewContext& ctx, std::span<const ComplexMatrix> basis);

/// Monte Carlo over Haar-random bases U|i⟩; sample i uses haar_unitary(d, seed, i).
McEstimate average_coherence_haar_mc(const SkewContext& ctx, std::int64_t samples, std::uint64_t seed,
                                     Execution execution = Execution::Parallel);

struct AverageReport {
  Real closed_form = 0.0;
  std::optional<Real> mub_average;  // empty when d has no MUB construction
  Real operator_basis_average = 0.0;
  std::optional<McEstimate> haar_mc;

  /// Largest pairwise gap among the exact entries.
  Real max_exact_spread() const noexcept;
};

/// All routes; the MUB route is skipped (left empty) for unsupported d and
/// the Haar route when samples == 0.
AverageReport average_coherence_report(const SkewContext& ctx, std::int64_t samples, std::uint64_t seed);

}  // namespace masi
