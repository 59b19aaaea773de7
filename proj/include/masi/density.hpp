#pragma once

#include "masi/matrix.hpp"
#include "masi/spectral.hpp"

namespace masi {

struct DensityTolerances {
  Real hermitian = 1e-10;
  Real trace = 1e-10;
  Real psd = kPsdClampTolerance;
};

/// A validated quantum state. Construction diagonalizes once; the clamped
/// spectral decomposition is kept alongside the matrix.
class DensityMatrix {
 public:
  /// Throws NotHermitian, InvalidArgument (trace) or NotPSD.
  explicit DensityMatrix(ComplexMatrix m, const DensityTolerances& tol = {});

  static DensityMatrix maximally_mixed(std::size_t dim);
  /// |ψ⟩⟨ψ| / ⟨ψ|ψ⟩
  static DensityMatrix pure(std::span<const Complex> psi);

  std::size_t dim() const noexcept { return matrix_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  const SpectralDecomposition& spectrum() const noexcept { return spectrum_; }
  const std::vector<Real>& eigenvalues() const noexcept { return spectrum_.values; }
  Real purity() const;

 private:
  ComplexMatrix matrix_;
  SpectralDecomposition spectrum_;
};

/// U ρ U†, re-validated.
DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& u);
/// t ρ₁ + (1 − t) ρ₂
DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, Real t);

}  // namespace masi
