#include "masi/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "masi/errors.hpp"

namespace masi {

ComplexMatrix SpectralDecomposition::reconstruct() const {
  const std::size_t n = dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Complex s{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) s += vectors(r, k) * values[k] * std::conj(vectors(c, k));
      out(r, c) = s;
    }
  return out;
}

namespace {

Real off_diagonal_norm(const ComplexMatrix& a) {
  Real s = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// Applies A <- J† A J and V <- V J for the rotation that zeroes A(p,q):
//   J = [[c, s e^{iφ}], [-s e^{-iφ}, c]] on rows/columns (p, q),
// where e^{iφ} = A(p,q)/|A(p,q)|.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const Real mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;
  const Real app = a(p, p).real();
  const Real aqq = a(q, q).real();
  const Real tau = (aqq - app) / (2.0 * mag);
  const Real t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const Real c = 1.0 / std::sqrt(1.0 + t * t);
  const Real s = t * c;
  const Complex sp = s * phase;             // s e^{iφ}
  const Complex sm = s * std::conj(phase);  // s e^{-iφ}
  const std::size_t n = a.dim();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - sm * akq;
    a(k, q) = sp * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - sp * aqk;
    a(q, k) = sm * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - sm * vkq;
    v(k, q) = sp * vkp + c * vkq;
  }
}

}  // namespace

SpectralDecomposition eigh(const ComplexMatrix& h, const EighOptions& options) {
  const std::size_t n = h.dim();
  const Real scale = std::max<Real>(1.0, frobenius_norm(h));
  const Real defect = hermiticity_defect(h);
  if (defect > options.hermitian_tolerance * scale) {
    throw Error(ErrorKind::NotHermitian, "‖H − H†‖_F = " + std::to_string(defect));
  }

  // Work on the exactly Hermitian part.
  ComplexMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));
  ComplexMatrix v = ComplexMatrix::identity(n);

  const Real threshold = options.relative_threshold * frobenius_norm(h);
  int sweep = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweep++ >= options.max_sweeps) {
      throw Error(ErrorKind::NoConvergence,
                  "Jacobi did not converge in " + std::to_string(options.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  SpectralDecomposition out{std::vector<Real>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

void clamp_psd(SpectralDecomposition& decomposition, Real tolerance) {
  Real top = 0.0;
  for (Real lambda : decomposition.values) top = std::max(top, lambda);
  const Real floor = kRoundoffFloor * top;
  for (auto& lambda : decomposition.values) {
    if (lambda < -tolerance) {
      throw Error(ErrorKind::NotPSD, "eigenvalue " + std::to_string(lambda) + " below -" +
                                         std::to_string(tolerance));
    }
    if (lambda <= floor) lambda = 0.0;
  }
}

ComplexMatrix sqrt_psd(const ComplexMatrix& m) {
  SpectralDecomposition dec = eigh(m);
  clamp_psd(dec);
  for (auto& lambda : dec.values) lambda = std::sqrt(lambda);
  return dec.reconstruct();
}

std::vector<ComplexMatrix> hermitian_operator_basis(std::size_t dim) {
  if (dim < 2 || dim > 8) {
    throw Error(ErrorKind::UnsupportedDimension,
                "operator basis supports 2 <= d <= 8, got " + std::to_string(dim));
  }
  const Real inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<ComplexMatrix> basis;
  basis.reserve(dim * dim);

  {
    ComplexMatrix id = ComplexMatrix::identity(dim);
    id *= 1.0 / std::sqrt(static_cast<Real>(dim));
    basis.push_back(std::move(id));
  }
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t k = j + 1; k < dim; ++k) {
      ComplexMatrix sym(dim);
      sym(j, k) = inv_sqrt2;
      sym(k, j) = inv_sqrt2;
      basis.push_back(std::move(sym));

      ComplexMatrix anti(dim);
      anti(j, k) = Complex{0.0, inv_sqrt2};
      anti(k, j) = Complex{0.0, -inv_sqrt2};
      basis.push_back(std::move(anti));
    }
  for (std::size_t l = 1; l < dim; ++l) {
    const Real factor = 1.0 / std::sqrt(static_cast<Real>(l * (l + 1)));
    ComplexMatrix diag(dim);
    for (std::size_t j = 0; j < l; ++j) diag(j, j) = factor;
    diag(l, l) = -static_cast<Real>(l) * factor;
    basis.push_back(std::move(diag));
  }
  return basis;
}

}  // namespace masi
