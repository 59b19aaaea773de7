#include <cmath>

#include "doctest.h"
#include "masi/errors.hpp"
#include "masi/skew.hpp"
#include "masi/states.hpp"
#include "oracle.hpp"

using namespace masi;

namespace {

const ComplexMatrix kX{{0.0, 1.0}, {1.0, 0.0}};
const ComplexMatrix kZ{{1.0, 0.0}, {0.0, -1.0}};

DensityMatrix diag2(Real a) {
  const std::vector<Real> d{a, 1.0 - a};
  return DensityMatrix(ComplexMatrix::diagonal(d));
}

oracle::Metric to_oracle(const MonotoneFunction& f) {
  return f.name() == "wy" ? oracle::Metric::WY : oracle::Metric::SLD;
}

}  // namespace

TEST_CASE("skew information of simple states") {
  for (const auto& f : {MonotoneFunction::wigner_yanase(), MonotoneFunction::sld()}) {
    CAPTURE(f.name());
    const SkewContext ground(basis_state(2, 0), f);
    CHECK(std::abs(skew_information(ground, kX) - 1.0) < 1e-12);
    CHECK(std::abs(skew_information_ratio_form(ground, kX) - 1.0) < 1e-12);

    const SkewContext commuting(diag2(0.7), f);
    CHECK(std::abs(skew_information(commuting, kZ)) < 1e-14);
    CHECK(std::abs(skew_information_ratio_form(commuting, kZ)) < 1e-14);

    const SkewContext mixed(DensityMatrix::maximally_mixed(3), f);
    CHECK(skew_information(mixed, random_hermitian(3, 2, 0)) == 0.0);
    CHECK(skew_information_ratio_form(mixed, random_hermitian(3, 2, 0)) == 0.0);
  }
  const SkewContext wy(diag2(0.75), MonotoneFunction::wigner_yanase());
  const Real expected = 1.0 - std::sqrt(3.0) / 2.0;
  CHECK(std::abs(skew_information(wy, kX) - expected) < 1e-12);
  CHECK(std::abs(skew_information_ratio_form(wy, kX) - expected) < 1e-12);
  CHECK(std::abs(skew_information(wy, kX) - 0.1339746) < 1e-7);

  const SkewContext sld(diag2(0.75), MonotoneFunction::sld());
  CHECK(std::abs(skew_information(sld, kX) - (1.0 - 2.0 * 0.75 * 0.25 / 0.5) * 1.0) < 1e-12);
}

TEST_CASE("both forms agree with the independent oracle") {
  for (const auto& f : {MonotoneFunction::wigner_yanase(), MonotoneFunction::sld()}) {
    for (std::size_t d : {2, 3, 4, 6}) {
      for (std::uint64_t i = 0; i < 10; ++i) {
        CAPTURE(d);
        CAPTURE(i);
        const DensityMatrix rho = i % 3 == 2 ? random_pure_state(d, 4, i) : random_mixed_state(d, 4, i);
        const SkewContext ctx(rho, f);
        const ComplexMatrix a = random_complex_matrix(d, 5, i);
        const Real ref = oracle::skew_ratio(rho.matrix(), a, to_oracle(f));
        CHECK(std::abs(skew_information(ctx, a) - ref) < 1e-9);
        CHECK(std::abs(skew_information_ratio_form(ctx, a) - ref) < 1e-9);
      }
    }
  }
}

TEST_CASE("pure states and unitary input") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    const auto psi = random_pure_vector(3, 8, i);
    const ComplexMatrix u = haar_unitary(3, 8, i);
    const auto upsi = u * std::span<const Complex>(psi);
    const Real expected = 1.0 - std::norm(inner(psi, upsi));
    for (const auto& f : {MonotoneFunction::wigner_yanase(), MonotoneFunction::sld()}) {
      const SkewContext ctx(DensityMatrix::pure(psi), f);
      const Real v = skew_information(ctx, u);
      CHECK(std::abs(v - expected) < 1e-9);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("outer-product and projector shortcuts") {
  const auto f = MonotoneFunction::wigner_yanase();
  const SkewContext ctx(random_mixed_state(4, 1, 3), f);
  const auto u = random_pure_vector(4, 2, 0);
  const auto v = random_pure_vector(4, 2, 1);
  CHECK(std::abs(skew_information_outer(ctx, u, v) - skew_information(ctx, ComplexMatrix::outer(u, v))) < 1e-12);
  const std::vector<std::vector<Complex>> vs{u, v};
  const ComplexMatrix p = ComplexMatrix::projector(u) + ComplexMatrix::projector(v);
  CHECK(std::abs(skew_information_projector(ctx, vs) - skew_information(ctx, p)) < 1e-12);
  CHECK(std::abs(symmetrized_second_moment(ctx.state(), p) -
                 0.5 * (ctx.state().matrix() * (p.adjoint() * p + p * p.adjoint())).trace().real()) < 1e-12);
}

TEST_CASE("skew information rejects mismatched operators") {
  const SkewContext ctx(DensityMatrix::maximally_mixed(2), MonotoneFunction::sld());
  CHECK_THROWS_AS(skew_information(ctx, ComplexMatrix::identity(3)), Error);
  CHECK_THROWS_AS(skew_information_ratio_form(ctx, ComplexMatrix::identity(3)), Error);
}
