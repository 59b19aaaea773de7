#include "masi/density.hpp"

#include <cmath>
#include <string>

#include "masi/errors.hpp"

namespace masi {

DensityMatrix::DensityMatrix(ComplexMatrix m, const DensityTolerances& tol) : matrix_(std::move(m)) {
  const Real defect = hermiticity_defect(matrix_);
  if (defect > tol.hermitian) {
    throw Error(ErrorKind::NotHermitian, "density matrix ‖M − M†‖_F = " + std::to_string(defect));
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > tol.trace) {
    throw Error(ErrorKind::InvalidArgument, "density matrix trace " + std::to_string(tr.real()) +
                                                " + " + std::to_string(tr.imag()) + "i != 1");
  }
  spectrum_ = eigh(matrix_);
  clamp_psd(spectrum_, tol.psd);
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  m *= 1.0 / static_cast<Real>(dim);
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(std::span<const Complex> psi) {
  const Real n = norm(psi);
  if (n == 0.0) throw Error(ErrorKind::InvalidArgument, "zero state vector");
  ComplexMatrix m = ComplexMatrix::projector(psi);
  m *= 1.0 / (n * n);
  return DensityMatrix(std::move(m));
}

Real DensityMatrix::purity() const { return trace_product(matrix_, matrix_).real(); }

DensityMatrix conjugate(const DensityMatrix& rho, const ComplexMatrix& u) {
  return DensityMatrix(u * rho.matrix() * u.adjoint());
}

DensityMatrix mix(const DensityMatrix& a, const DensityMatrix& b, Real t) {
  return DensityMatrix(Complex{t, 0.0} * a.matrix() + Complex{1.0 - t, 0.0} * b.matrix());
}

}  // namespace masi
