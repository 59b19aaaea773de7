#include <cmath>

#include "doctest.h"
#include "masi/errors.hpp"
#include "masi/spectral.hpp"
#include "masi/states.hpp"
#include "oracle.hpp"

using namespace masi;

namespace {

const ComplexMatrix kX{{0.0, 1.0}, {1.0, 0.0}};
const ComplexMatrix kY{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}};
const ComplexMatrix kZ{{1.0, 0.0}, {0.0, -1.0}};

Real max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  Real m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

}  // namespace

TEST_CASE("matrix arithmetic and helpers") {
  const ComplexMatrix a{{1.0, Complex{2.0, 1.0}}, {3.0, 4.0}};
  CHECK(a.trace() == Complex{5.0, 0.0});
  CHECK(a.adjoint()(0, 1) == Complex{3.0, 0.0});
  CHECK(a.adjoint()(1, 0) == Complex{2.0, -1.0});
  CHECK(max_abs_diff(a * ComplexMatrix::identity(2), a) == 0.0);
  CHECK(std::abs(trace_product(a, kX) - (a * kX).trace()) < 1e-15);
  CHECK(hermiticity_defect(kY) == 0.0);
  CHECK(hermiticity_defect(a) > 0.0);
  CHECK(frobenius_norm(commutator(kZ, kZ)) == 0.0);
  CHECK(max_abs_diff(commutator(kX, kY), Complex{0.0, 2.0} * kZ) < 1e-15);

  const std::vector<Complex> u{1.0, Complex{0.0, 1.0}};
  CHECK(norm(u) == doctest::Approx(std::sqrt(2.0)));
  CHECK(inner(u, u) == Complex{2.0, 0.0});
  const ComplexMatrix p = ComplexMatrix::projector(u);
  CHECK(p(0, 1) == Complex{0.0, -1.0});
  CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), Error);
}

TEST_CASE("tensor product layout") {
  CHECK(tensor(ComplexMatrix::identity(2), ComplexMatrix::identity(3)) == ComplexMatrix::identity(6));
  const std::vector<Real> e0{1.0, 0.0};
  const std::vector<Real> e00{1.0, 0.0, 0.0, 0.0};
  CHECK(tensor(ComplexMatrix::diagonal(e0), ComplexMatrix::diagonal(e0)) == ComplexMatrix::diagonal(e00));

  const ComplexMatrix a = random_complex_matrix(2, 5, 0);
  const ComplexMatrix b = random_complex_matrix(3, 5, 1);
  const ComplexMatrix ab = tensor(a, b);
  CHECK(std::abs(ab.trace() - a.trace() * b.trace()) < 1e-12);
  CHECK(ab(1 * 3 + 2, 0 * 3 + 1) == a(1, 0) * b(2, 1));

  CHECK_THROWS_AS(tensor(ComplexMatrix::identity(9), ComplexMatrix::identity(8)), Error);
  CHECK_NOTHROW(tensor(ComplexMatrix::identity(9), ComplexMatrix::identity(8), 72));
}

TEST_CASE("partial trace") {
  const ComplexMatrix bell = bell_state(2).matrix();
  CHECK(max_abs_diff(partial_trace(bell, 2, 2, Keep::A), 0.5 * ComplexMatrix::identity(2)) < 1e-15);
  CHECK(max_abs_diff(partial_trace(bell, 2, 2, Keep::B), 0.5 * ComplexMatrix::identity(2)) < 1e-15);

  const ComplexMatrix rho = random_mixed_state(2, 1, 0).matrix();
  const ComplexMatrix sigma = random_mixed_state(3, 1, 1).matrix();
  CHECK(max_abs_diff(partial_trace(tensor(rho, sigma), 2, 3, Keep::A), rho) < 1e-12);
  CHECK(max_abs_diff(partial_trace(tensor(rho, sigma), 2, 3, Keep::B), sigma) < 1e-12);

  const ComplexMatrix m = random_mixed_state(4, 3, 2).matrix();
  CHECK(std::abs(partial_trace(m, 2, 2, Keep::A).trace() - 1.0) < 1e-12);

  const ComplexMatrix g = random_complex_matrix(6, 3, 3);
  const auto ref_a = oracle::partial_trace_keep_a(oracle::to_eigen(g), 3, 2);
  const auto ref_b = oracle::partial_trace_keep_b(oracle::to_eigen(g), 3, 2);
  CHECK(max_abs_diff(partial_trace(g, 3, 2, Keep::A), oracle::from_eigen(ref_a)) < 1e-13);
  CHECK(max_abs_diff(partial_trace(g, 3, 2, Keep::B), oracle::from_eigen(ref_b)) < 1e-13);
  CHECK_THROWS_AS(partial_trace(g, 4, 2, Keep::A), Error);
}

TEST_CASE("swap of tensor factors") {
  const ComplexMatrix a = random_complex_matrix(2, 9, 0);
  const ComplexMatrix b = random_complex_matrix(3, 9, 1);
  CHECK(max_abs_diff(swap_factors(tensor(a, b), 2, 3), tensor(b, a)) < 1e-15);
  const ComplexMatrix f = swap_operator(3);
  CHECK(max_abs_diff(f * f, ComplexMatrix::identity(9)) == 0.0);
  CHECK(f(1 * 3 + 2, 2 * 3 + 1) == Complex{1.0, 0.0});
}

TEST_CASE("eigh on textbook cases") {
  const std::vector<Real> d31{3.0, 1.0};
  const SpectralDecomposition s = eigh(ComplexMatrix::diagonal(d31));
  CHECK(s.values[0] == 3.0);
  CHECK(s.values[1] == 1.0);
  CHECK(max_abs_diff(s.vectors, ComplexMatrix::identity(2)) == 0.0);

  const SpectralDecomposition x = eigh(kX);
  CHECK(x.values[0] == doctest::Approx(1.0));
  CHECK(x.values[1] == doctest::Approx(-1.0));
  CHECK(std::abs(std::abs(x.vectors(0, 0)) - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(x.vectors(0, 0) - x.vectors(1, 0)) < 1e-14);

  const SpectralDecomposition one = eigh(ComplexMatrix{{Complex{2.5, 0.0}}});
  CHECK(one.values[0] == 2.5);

  const SpectralDecomposition id = eigh(ComplexMatrix::identity(4));
  for (Real v : id.values) CHECK(v == 1.0);
}

TEST_CASE("eigh matches an independent solver") {
  for (std::size_t d : {2, 3, 6, 10, 24, 64}) {
    CAPTURE(d);
    const ComplexMatrix h = random_hermitian(d, 11, d);
    const SpectralDecomposition s = eigh(h);
    const auto ref = oracle::eigenvalues(h);
    for (std::size_t i = 0; i < d; ++i) CHECK(std::abs(s.values[i] - ref[i]) < 1e-11);
    for (std::size_t i = 1; i < d; ++i) CHECK(s.values[i - 1] >= s.values[i]);
    CHECK(frobenius_norm(s.reconstruct() - h) <= 1e-10 * std::max<Real>(1.0, frobenius_norm(h)));
    CHECK(frobenius_norm(s.vectors.adjoint() * s.vectors - ComplexMatrix::identity(d)) <= 1e-10);
  }
}

TEST_CASE("eigh rejects non-Hermitian input") {
  const ComplexMatrix a{{1.0, 2.0}, {0.0, 1.0}};
  CHECK_THROWS_AS(eigh(a), Error);
  try {
    eigh(a);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHermitian);
  }
  EighOptions opts;
  opts.max_sweeps = 0;
  try {
    eigh(random_hermitian(5, 1, 1), opts);
    FAIL("expected NoConvergence");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoConvergence);
  }
}

TEST_CASE("PSD clamping") {
  SpectralDecomposition s{{0.5, 1e-15, -1e-11}, ComplexMatrix::identity(3)};
  clamp_psd(s);
  CHECK(s.values[1] == 0.0);
  CHECK(s.values[2] == 0.0);
  SpectralDecomposition bad{{1.0, -1e-9}, ComplexMatrix::identity(2)};
  try {
    clamp_psd(bad);
    FAIL("expected NotPSD");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPSD);
  }
}

TEST_CASE("square root of PSD matrices") {
  const std::vector<Real> d49{4.0, 9.0};
  const std::vector<Real> d23{2.0, 3.0};
  CHECK(max_abs_diff(sqrt_psd(ComplexMatrix::diagonal(d49)), ComplexMatrix::diagonal(d23)) < 1e-14);
  for (std::size_t d : {2, 3, 5}) {
    const ComplexMatrix mixed = (1.0 / static_cast<Real>(d)) * ComplexMatrix::identity(d);
    CHECK(max_abs_diff(sqrt_psd(mixed), (1.0 / std::sqrt(static_cast<Real>(d))) * ComplexMatrix::identity(d)) <
          1e-14);
  }
  const ComplexMatrix rho = random_mixed_state(4, 2, 7).matrix();
  const ComplexMatrix r = sqrt_psd(rho);
  CHECK(frobenius_norm(r * r - rho) < 1e-9);
  const ComplexMatrix pure = random_pure_state(3, 2, 7).matrix();
  CHECK(frobenius_norm(sqrt_psd(pure) - pure) < 1e-12);
}

TEST_CASE("Hermitian operator basis") {
  const auto b2 = hermitian_operator_basis(2);
  REQUIRE(b2.size() == 4);
  const Real s = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(b2[0], s * ComplexMatrix::identity(2)) < 1e-15);
  CHECK(max_abs_diff(b2[1], s * kX) < 1e-15);
  CHECK(std::min(max_abs_diff(b2[2], s * kY), max_abs_diff(b2[2], -s * kY)) < 1e-15);
  CHECK(max_abs_diff(b2[3], s * kZ) < 1e-15);

  for (std::size_t d = 2; d <= 8; ++d) {
    CAPTURE(d);
    const auto g = hermitian_operator_basis(d);
    REQUIRE(g.size() == d * d);
    Real gram = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j)
        gram = std::max(gram, std::abs(trace_product(g[i], g[j]) - Complex{i == j ? 1.0 : 0.0, 0.0}));
    CHECK(gram < 1e-12);
    const ComplexMatrix x = random_complex_matrix(d, 4, d);
    ComplexMatrix sum(d);
    for (const auto& gi : g) sum += gi * x * gi;
    CHECK(max_abs_diff(sum, x.trace() * ComplexMatrix::identity(d)) < 1e-12);
  }
  CHECK_THROWS_AS(hermitian_operator_basis(1), Error);
  CHECK_THROWS_AS(hermitian_operator_basis(9), Error);
}
