#include <cmath>

#include "doctest.h"
#include "masi/coherence.hpp"
#include "masi/states.hpp"
#include "oracle.hpp"

using namespace masi;

namespace {

DensityMatrix diag2(Real a) {
  const std::vector<Real> d{a, 1.0 - a};
  return DensityMatrix(ComplexMatrix::diagonal(d));
}

MeasurementBasis x_basis() {
  const Real s = 1.0 / std::sqrt(2.0);
  return MeasurementBasis(ComplexMatrix{{s, s}, {s, -s}});
}

const Real kDiag34Closed = (2.0 - std::pow(std::sqrt(3.0) / 2.0 + 0.5, 2)) / 3.0;

}  // namespace

TEST_CASE("coherence relative to a basis") {
  const auto wy = MonotoneFunction::wigner_yanase();
  const auto sld = MonotoneFunction::sld();
  for (const auto& f : {wy, sld}) {
    CHECK(std::abs(coherence_wrt_basis(SkewContext(diag2(0.7), f), MeasurementBasis::computational(2))) < 1e-14);
    CHECK(std::abs(coherence_wrt_basis(SkewContext(max_coherent_state(2), f), MeasurementBasis::computational(2)) -
                   0.5) < 1e-12);
  }
  const Real x = coherence_wrt_basis(SkewContext(diag2(0.75), wy), x_basis());
  CHECK(std::abs(x - (1.0 - std::sqrt(3.0) / 2.0) / 2.0) < 1e-12);
  CHECK(std::abs(x - 0.0669873) < 1e-7);
}

TEST_CASE("closed-form average") {
  for (const auto& f : {MonotoneFunction::wigner_yanase(), MonotoneFunction::sld()}) {
    for (std::size_t d : {2, 3, 5}) CHECK(average_coherence_closed(SkewContext(DensityMatrix::maximally_mixed(d), f)) ==
                                          doctest::Approx(0.0).epsilon(1e-14));
    for (std::uint64_t i = 0; i < 5; ++i)
      CHECK(std::abs(average_coherence_closed(SkewContext(random_pure_state(2, 3, i), f)) - 1.0 / 3.0) < 1e-12);
  }
  const SkewContext ctx(diag2(0.75), MonotoneFunction::wigner_yanase());
  CHECK(std::abs(average_coherence_closed(ctx) - kDiag34Closed) < 1e-12);
  CHECK(std::abs(average_coherence_closed(ctx) - 0.0446582) < 1e-7);
}

TEST_CASE("closed form matches an independent oracle") {
  for (const auto m : {oracle::Metric::WY, oracle::Metric::SLD}) {
    const auto f = m == oracle::Metric::WY ? MonotoneFunction::wigner_yanase() : MonotoneFunction::sld();
    for (std::size_t d : {2, 3, 4, 7}) {
      const DensityMatrix rho = random_mixed_state(d, 12, d);
      CHECK(std::abs(average_coherence_closed(SkewContext(rho, f)) - oracle::coherence_closed(rho.matrix(), m)) <
            1e-10);
      const ComplexMatrix u = haar_unitary(d, 12, d);
      CHECK(std::abs(coherence_wrt_basis(SkewContext(rho, f), MeasurementBasis(u)) -
                     oracle::coherence_in_basis(rho.matrix(), u, m)) < 1e-9);
    }
  }
}

TEST_CASE("MUB and operator-basis averages") {
  const auto wy = MonotoneFunction::wigner_yanase();
  const SkewContext ctx(diag2(0.75), wy);
  CHECK(std::abs(average_coherence_mub(ctx, build_mub_family(2)) - kDiag34Closed) < 1e-12);
  CHECK(std::abs(average_coherence_operator_basis(ctx) - kDiag34Closed) < 1e-12);

  for (const auto& f : {wy, MonotoneFunction::sld()}) {
    const SkewContext ground(basis_state(2, 0), f);
    CHECK(std::abs(average_coherence_mub(ground, build_mub_family(2)) - 1.0 / 3.0) < 1e-12);
    const SkewContext mixed(DensityMatrix::maximally_mixed(3), f);
    CHECK(average_coherence_mub(mixed, build_mub_family(3)) == doctest::Approx(0.0));
    CHECK(average_coherence_operator_basis(mixed) == doctest::Approx(0.0));
    for (std::size_t d : {2, 3, 5}) {
      const SkewContext r(random_mixed_state(d, 9, d), f);
      const Real closed = average_coherence_closed(r);
      CHECK(std::abs(average_coherence_mub(r, build_mub_family(d)) - closed) < 1e-9);
      CHECK(std::abs(average_coherence_operator_basis(r) - closed) < 1e-9);
    }
  }
}

TEST_CASE("Haar Monte Carlo average") {
  const auto wy = MonotoneFunction::wigner_yanase();
  const McEstimate zero = average_coherence_haar_mc(SkewContext(DensityMatrix::maximally_mixed(2), wy), 256, 0);
  CHECK(zero.mean == 0.0);
  CHECK(zero.std_error == 0.0);

  const McEstimate pure = average_coherence_haar_mc(SkewContext(basis_state(2, 0), wy), 4096, 0);
  CHECK(std::abs(pure.mean - 1.0 / 3.0) <= 4.0 * pure.std_error);
  const McEstimate d34 = average_coherence_haar_mc(SkewContext(diag2(0.75), wy), 4096, 0);
  CHECK(std::abs(d34.mean - kDiag34Closed) <= 4.0 * d34.std_error);
  CHECK(d34.samples == 4096);

  const SkewContext r(random_mixed_state(3, 1, 1), MonotoneFunction::sld());
  const McEstimate a = average_coherence_haar_mc(r, 512, 5, Execution::Serial);
  const McEstimate b = average_coherence_haar_mc(r, 512, 5, Execution::Parallel);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("average report") {
  const SkewContext r(random_mixed_state(6, 2, 0), MonotoneFunction::wigner_yanase());
  const AverageReport rep = average_coherence_report(r, 0, 0);
  CHECK(!rep.mub_average.has_value());
  CHECK(!rep.haar_mc.has_value());
  CHECK(std::abs(rep.operator_basis_average - rep.closed_form) < 1e-9);
  const AverageReport rep3 = average_coherence_report(SkewContext(random_mixed_state(3, 2, 0),
                                                                  MonotoneFunction::wigner_yanase()),
                                                      64, 0);
  CHECK(rep3.mub_average.has_value());
  CHECK(rep3.haar_mc.has_value());
  CHECK(rep3.max_exact_spread() < 1e-9);
}
