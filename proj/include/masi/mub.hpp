#pragma once

#include <vector>

#include "masi/matrix.hpp"

namespace masi {

/// Rank-one von Neumann measurement: the columns of an orthonormal matrix.
class MeasurementBasis {
 public:
  /// Throws InvalidArgument if ‖V†V − I‖ (max entry) exceeds `tolerance`.
  explicit MeasurementBasis(ComplexMatrix columns, Real tolerance = 1e-10);

  static MeasurementBasis computational(std::size_t dim);

  std::size_t dim() const noexcept { return columns_.dim(); }
  std::vector<Complex> vector(std::size_t i) const { return columns_.column(i); }
  const ComplexMatrix& columns() const noexcept { return columns_; }
  ComplexMatrix projector(std::size_t i) const;

 private:
  ComplexMatrix columns_;
};

/// Candidate family of mutually unbiased bases. Families returned by
/// build_mub_family are certified; hand-assembled ones can be checked with
/// certify_mub.
struct MubFamily {
  std::size_t dim = 0;
  std::vector<MeasurementBasis> bases;
};

struct MubCertificate {
  Real max_orthonormality_error = 0.0;
  Real max_unbiasedness_error = 0.0;
  bool complete = false;  // d + 1 bases
  bool accepted(Real tolerance = 1e-10) const noexcept {
    return max_orthonormality_error <= tolerance && max_unbiasedness_error <= tolerance;
  }
};

MubCertificate certify_mub(const MubFamily& family);

bool mub_supported(std::size_t dim) noexcept;

/// Complete (d + 1)-member family for d ∈ {2, 3, 4, 5, 7}: Pauli eigenbases
/// at d = 2, quadratic Weyl phases ω^{t j² + j k}/√d at odd primes, an
/// embedded table at d = 4. Throws UnsupportedDimension otherwise, and
/// NumericalError if the result fails certification.
MubFamily build_mub_family(std::size_t dim);

}  // namespace masi
