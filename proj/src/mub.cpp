#include "masi/mub.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "masi/errors.hpp"

namespace masi {

namespace {

Real orthonormality_error(const ComplexMatrix& v) {
  const ComplexMatrix gram = v.adjoint() * v;
  Real err = 0.0;
  for (std::size_t r = 0; r < gram.dim(); ++r)
    for (std::size_t c = 0; c < gram.dim(); ++c)
      err = std::max(err, std::abs(gram(r, c) - (r == c ? Complex{1.0, 0.0} : Complex{0.0, 0.0})));
  return err;
}

// Two-qubit MUBs; every entry is in {±1, ±i}/2. Rows are basis vectors.
constexpr int kD4Table[4][4][4][2] = {
    {{{1, 0}, {1, 0}, {1, 0}, {1, 0}},
     {{1, 0}, {1, 0}, {-1, 0}, {-1, 0}},
     {{1, 0}, {-1, 0}, {-1, 0}, {1, 0}},
     {{1, 0}, {-1, 0}, {1, 0}, {-1, 0}}},
    {{{1, 0}, {-1, 0}, {0, -1}, {0, -1}},
     {{1, 0}, {-1, 0}, {0, 1}, {0, 1}},
     {{1, 0}, {1, 0}, {0, 1}, {0, -1}},
     {{1, 0}, {1, 0}, {0, -1}, {0, 1}}},
    {{{1, 0}, {0, -1}, {0, -1}, {-1, 0}},
     {{1, 0}, {0, -1}, {0, 1}, {1, 0}},
     {{1, 0}, {0, 1}, {0, 1}, {-1, 0}},
     {{1, 0}, {0, 1}, {0, -1}, {1, 0}}},
    {{{1, 0}, {0, -1}, {-1, 0}, {0, -1}},
     {{1, 0}, {0, -1}, {1, 0}, {0, 1}},
     {{1, 0}, {0, 1}, {1, 0}, {0, -1}},
     {{1, 0}, {0, 1}, {-1, 0}, {0, 1}}},
};

MubFamily pauli_family() {
  const Real h = (1.0 / std::numbers::sqrt2);
  MubFamily family{2, {}};
  family.bases.push_back(MeasurementBasis::computational(2));
  family.bases.emplace_back(ComplexMatrix{{h, h}, {h, -h}});
  family.bases.emplace_back(ComplexMatrix{{h, h}, {Complex{0.0, h}, Complex{0.0, -h}}});
  return family;
}

MubFamily weyl_family(std::size_t d) {
  MubFamily family{d, {}};
  family.bases.push_back(MeasurementBasis::computational(d));
  const Real amplitude = 1.0 / std::sqrt(static_cast<Real>(d));
  for (std::size_t t = 0; t < d; ++t) {
    ComplexMatrix columns(d);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) {
        // exponent reduced mod d in integers before taking the phase
        const std::size_t e = (t * j * j + j * k) % d;
        const Real angle = 2.0 * std::numbers::pi * static_cast<Real>(e) / static_cast<Real>(d);
        columns(j, k) = std::polar(amplitude, angle);
      }
    family.bases.emplace_back(std::move(columns));
  }
  return family;
}

MubFamily table_family_d4() {
  MubFamily family{4, {}};
  family.bases.push_back(MeasurementBasis::computational(4));
  for (const auto& basis : kD4Table) {
    ComplexMatrix columns(4);
    for (std::size_t k = 0; k < 4; ++k)
      for (std::size_t j = 0; j < 4; ++j)
        columns(j, k) = Complex{0.5 * basis[k][j][0], 0.5 * basis[k][j][1]};
    family.bases.emplace_back(std::move(columns));
  }
  return family;
}

}  // namespace

MeasurementBasis::MeasurementBasis(ComplexMatrix columns, Real tolerance) : columns_(std::move(columns)) {
  const Real err = orthonormality_error(columns_);
  if (err > tolerance) {
    throw Error(ErrorKind::InvalidArgument, "basis is not orthonormal (error " + std::to_string(err) + ")");
  }
}

MeasurementBasis MeasurementBasis::computational(std::size_t dim) {
  return MeasurementBasis(ComplexMatrix::identity(dim));
}

ComplexMatrix MeasurementBasis::projector(std::size_t i) const {
  const auto v = vector(i);
  return ComplexMatrix::projector(v);
}

MubCertificate certify_mub(const MubFamily& family) {
  MubCertificate cert;
  const Real target = 1.0 / std::sqrt(static_cast<Real>(family.dim));
  for (const auto& basis : family.bases)
    cert.max_orthonormality_error = std::max(cert.max_orthonormality_error, orthonormality_error(basis.columns()));
  for (std::size_t s = 0; s < family.bases.size(); ++s)
    for (std::size_t t = s + 1; t < family.bases.size(); ++t) {
      const ComplexMatrix overlaps = family.bases[s].columns().adjoint() * family.bases[t].columns();
      for (const auto& o : overlaps.data())
        cert.max_unbiasedness_error = std::max(cert.max_unbiasedness_error, std::abs(std::abs(o) - target));
    }
  cert.complete = family.bases.size() == family.dim + 1;
  return cert;
}

bool mub_supported(std::size_t dim) noexcept {
  return dim == 2 || dim == 3 || dim == 4 || dim == 5 || dim == 7;
}

MubFamily build_mub_family(std::size_t dim) {
  if (!mub_supported(dim)) {
    throw Error(ErrorKind::UnsupportedDimension,
                "no MUB construction for d = " + std::to_string(dim) + " (supported: 2, 3, 4, 5, 7)");
  }
  MubFamily family = dim == 2 ? pauli_family() : dim == 4 ? table_family_d4() : weyl_family(dim);
  const MubCertificate cert = certify_mub(family);
  if (!cert.accepted() || !cert.complete) {
    throw Error(ErrorKind::NumericalError, "MUB family for d = " + std::to_string(dim) + " failed certification");
  }
  return family;
}

}  // namespace masi
