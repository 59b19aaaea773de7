#include <cmath>

#include "doctest.h"
#include "masi/errors.hpp"
#include "masi/mub.hpp"
#include "masi/states.hpp"

using namespace masi;

TEST_CASE("MUB families for supported dimensions") {
  for (std::size_t d : {2, 3, 4, 5, 7}) {
    CAPTURE(d);
    CHECK(mub_supported(d));
    const MubFamily fam = build_mub_family(d);
    REQUIRE(fam.bases.size() == d + 1);
    const MubCertificate cert = certify_mub(fam);
    CHECK(cert.complete);
    CHECK(cert.max_orthonormality_error <= 1e-12);
    CHECK(cert.max_unbiasedness_error <= 1e-12);
    const Real target = 1.0 / std::sqrt(static_cast<Real>(d));
    for (std::size_t s = 0; s < fam.bases.size(); ++s)
      for (std::size_t t = s + 1; t < fam.bases.size(); ++t)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            CHECK(std::abs(std::abs(inner(fam.bases[s].vector(i), fam.bases[t].vector(j))) - target) < 1e-12);
  }
}

TEST_CASE("unsupported dimensions") {
  for (std::size_t d : {1, 6, 8, 9, 10}) {
    CAPTURE(d);
    CHECK(!mub_supported(d));
    try {
      build_mub_family(d);
      FAIL("expected UnsupportedDimension");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnsupportedDimension);
    }
  }
}

TEST_CASE("certifier on hand-assembled families") {
  for (std::size_t d : {2, 3, 5}) {
    MubFamily twice{d, {MeasurementBasis::computational(d), MeasurementBasis::computational(d)}};
    const MubCertificate cert = certify_mub(twice);
    const Real r = 1.0 / std::sqrt(static_cast<Real>(d));
    CHECK(std::abs(cert.max_unbiasedness_error - std::max(1.0 - r, r)) < 1e-12);
    CHECK(!cert.complete);
    CHECK(!cert.accepted());
  }

  MubFamily fam = build_mub_family(3);
  const MubCertificate before = certify_mub(fam);
  for (std::size_t t = 0; t < fam.bases.size(); ++t) {
    ComplexMatrix cols = fam.bases[t].columns();
    for (std::size_t i = 0; i < 3; ++i) {
      const Complex phase = std::polar(1.0, 0.7 * static_cast<Real>(t * 3 + i) + 0.1);
      auto v = cols.column(i);
      for (auto& x : v) x *= phase;
      cols.set_column(i, v);
    }
    fam.bases[t] = MeasurementBasis(cols);
  }
  const MubCertificate after = certify_mub(fam);
  CHECK(std::abs(after.max_unbiasedness_error - before.max_unbiasedness_error) < 1e-14);
  CHECK(std::abs(after.max_orthonormality_error - before.max_orthonormality_error) < 1e-14);
}

TEST_CASE("measurement basis validation") {
  CHECK_NOTHROW(MeasurementBasis(haar_unitary(4, 1, 0)));
  ComplexMatrix bad = ComplexMatrix::identity(2);
  bad(0, 1) = 0.5;
  CHECK_THROWS_AS(MeasurementBasis{bad}, Error);
  const MeasurementBasis b = MeasurementBasis::computational(3);
  CHECK(b.projector(1)(1, 1) == Complex{1.0, 0.0});
  CHECK(b.projector(1).trace() == Complex{1.0, 0.0});
}

TEST_CASE("MUB projector sum equals identity plus swap") {
  for (std::size_t d : {2, 3, 4, 5, 7}) {
    const MubFamily fam = build_mub_family(d);
    ComplexMatrix sum(d * d);
    for (const auto& b : fam.bases)
      for (std::size_t i = 0; i < d; ++i) sum += tensor(b.projector(i), b.projector(i));
    const ComplexMatrix rhs = ComplexMatrix::identity(d * d) + swap_operator(d);
    CHECK(frobenius_norm(sum - rhs) < 1e-10);
  }
}
