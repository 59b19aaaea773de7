#include <cmath>

#include "doctest.h"
#include "masi/errors.hpp"
#include "masi/states.hpp"

using namespace masi;

namespace {

Real unitarity_defect(const ComplexMatrix& u) {
  return frobenius_norm(u.adjoint() * u - ComplexMatrix::identity(u.dim()));
}

}  // namespace

TEST_CASE("Haar unitaries") {
  const ComplexMatrix u1 = haar_unitary(1, 3, 0);
  CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) < 1e-14);
  for (std::size_t d : {2, 3, 5, 8})
    for (std::uint64_t i = 0; i < 50; ++i) CHECK(unitarity_defect(haar_unitary(d, 1, i)) <= 1e-10);
  CHECK(haar_unitary(3, 9, 4) == haar_unitary(3, 9, 4));
  CHECK(!(haar_unitary(3, 9, 4) == haar_unitary(3, 9, 5)));
}

TEST_CASE("random states are valid and deterministic") {
  for (std::size_t d : {2, 3, 4, 6}) {
    for (std::uint64_t i = 0; i < 200; ++i) {
      CHECK_NOTHROW(random_mixed_state(d, 2, i));
      CHECK_NOTHROW(random_pure_state(d, 2, i));
    }
    CHECK(std::abs(random_pure_state(d, 2, 0).purity() - 1.0) < 1e-12);
    CHECK(std::abs(norm(random_pure_vector(d, 2, 0)) - 1.0) < 1e-14);
  }
  CHECK(random_mixed_state(3, 7, 0).matrix() == random_mixed_state(3, 7, 0).matrix());
  StateSpec spec;
  spec.kind = StateKind::MixedGinibre;
  spec.dims = {3};
  spec.seed = 7;
  CHECK(materialize(spec).state.matrix() == materialize(spec).state.matrix());
  CHECK(frobenius_norm(random_hermitian(4, 1, 0) - random_hermitian(4, 1, 0).adjoint()) == 0.0);
}

TEST_CASE("named families") {
  const DensityMatrix bell = bell_state(2);
  CHECK(std::abs(bell.eigenvalues()[0] - 1.0) < 1e-12);
  for (std::size_t k = 1; k < 4; ++k) CHECK(std::abs(bell.eigenvalues()[k]) < 1e-12);
  CHECK(std::abs(bell.matrix()(0, 3) - 0.5) < 1e-15);

  const DensityMatrix singlet = werner_state(2, 1.0);
  const Real s = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> psi{0.0, s, -s, 0.0};
  CHECK(frobenius_norm(singlet.matrix() - ComplexMatrix::projector(psi)) < 1e-12);
  CHECK(frobenius_norm(werner_state(3, 0.0).matrix() - DensityMatrix::maximally_mixed(9).matrix()) < 1e-14);
  CHECK(frobenius_norm(isotropic_state(2, 1.0).matrix() - bell.matrix()) < 1e-14);
  CHECK(frobenius_norm(isotropic_state(3, 1.0 / 9.0).matrix() - DensityMatrix::maximally_mixed(9).matrix()) < 1e-14);
  CHECK(std::abs(max_coherent_state(3).matrix()(0, 2) - 1.0 / 3.0) < 1e-15);
  CHECK(basis_state(3, 2).matrix()(2, 2) == Complex{1.0, 0.0});

  for (Real p : {0.0, 0.25, 0.5, 1.0}) {
    CHECK_NOTHROW(werner_state(2, p));
    CHECK_NOTHROW(isotropic_state(3, p));
  }
  CHECK_THROWS_AS(werner_state(2, 1.2), Error);
  CHECK_THROWS_AS(isotropic_state(2, -0.1), Error);
}

TEST_CASE("materialize specs") {
  StateSpec bell;
  bell.kind = StateKind::Bell;
  bell.dims = {2, 2};
  const MaterializedState m = materialize(bell);
  CHECK(m.bipartite());
  CHECK(m.state.dim() == 4);

  StateSpec a;
  a.kind = StateKind::PureHaar;
  a.dims = {2};
  StateSpec b;
  b.kind = StateKind::MaxCoherent;
  b.dims = {3};
  StateSpec prod;
  prod.kind = StateKind::Product;
  prod.parts = {a, b};
  const MaterializedState p = materialize(prod);
  CHECK(p.dims == std::vector<std::size_t>{2, 3});

  StateSpec bad = bell;
  bad.dims = {2, 3};
  CHECK_THROWS_AS(materialize(bad), Error);
  StateSpec missing;
  missing.kind = StateKind::File;
  missing.path = "/nonexistent/state.json";
  try {
    materialize(missing);
    FAIL("expected FileError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::FileError);
  }
  CHECK(parse_state_kind("werner") == StateKind::Werner);
  CHECK(to_string(StateKind::Isotropic) == "isotropic");
  CHECK(is_parametric(StateKind::Werner));
  CHECK(!is_parametric(StateKind::Bell));
  CHECK_THROWS_AS(parse_state_kind("ghz"), Error);
}

TEST_CASE("density matrix validation") {
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix{{1.0, 1.0}, {0.0, 0.0}}), Error);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix{{0.6, 0.0}, {0.0, 0.6}}), Error);
  CHECK_THROWS_AS(DensityMatrix(ComplexMatrix{{1.2, 0.0}, {0.0, -0.2}}), Error);
  const DensityMatrix m = mix(basis_state(2, 0), basis_state(2, 1), 0.25);
  CHECK(std::abs(m.matrix()(0, 0) - 0.25) < 1e-15);
  CHECK(std::abs(m.purity() - (0.0625 + 0.5625)) < 1e-14);
}
