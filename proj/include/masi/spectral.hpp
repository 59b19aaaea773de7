#pragma once

#include <vector>

#include "masi/matrix.hpp"

namespace masi {

/// Eigenvalues in descending order; column k of `vectors` is the
/// eigenvector for `values[k]`.
struct SpectralDecomposition {
  std::vector<Real> values;
  ComplexMatrix vectors;

  std::size_t dim() const noexcept { return values.size(); }
  std::vector<Complex> vector(std::size_t k) const { return vectors.column(k); }
  /// V diag(λ) V†
  ComplexMatrix reconstruct() const;
};

struct EighOptions {
  int max_sweeps = 100;
  /// Stop once the off-diagonal Frobenius norm is below this times ‖H‖_F.
  Real relative_threshold = 1e-14;
  /// Relative Hermiticity tolerance on the input.
  Real hermitian_tolerance = 1e-8;
};

/// Cyclic Jacobi eigensolver for complex Hermitian matrices. Each rotation
/// is a 2×2 unitary that annihilates one off-diagonal pair.
/// Throws NotHermitian or NoConvergence.
SpectralDecomposition eigh(const ComplexMatrix& h, const EighOptions& options = {});

/// Eigenvalues in [-clamp, 0) are set to 0; anything lower throws NotPSD.
/// Positive eigenvalues at or below kRoundoffFloor·λ_max are also set to 0:
/// they are Jacobi round-off on rank-deficient input, and square-root
/// kernels would otherwise amplify them to ~1e-8.
inline constexpr Real kPsdClampTolerance = 1e-10;
inline constexpr Real kRoundoffFloor = 1e-13;
void clamp_psd(SpectralDecomposition& decomposition, Real tolerance = kPsdClampTolerance);

/// Principal square root of a PSD Hermitian matrix.
ComplexMatrix sqrt_psd(const ComplexMatrix& m);

/// Generalized Gell-Mann set plus I/√d; Tr(G_i G_j) = δ_ij. First element is
/// I/√d, then symmetric, antisymmetric and diagonal traceless elements.
/// Supported for 2 ≤ d ≤ 8.
std::vector<ComplexMatrix> hermitian_operator_basis(std::size_t dim);

}  // namespace masi
