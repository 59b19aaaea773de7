#include "masi/states.hpp"

#include <cmath>

#include "masi/errors.hpp"
#include "masi/io.hpp"

namespace masi {

namespace {

// Projects out previous columns twice; keeps ‖U†U − I‖ at round-off level.
void orthonormalize_columns(ComplexMatrix& m) {
  const std::size_t n = m.dim();
  for (std::size_t c = 0; c < n; ++c) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t prev = 0; prev < c; ++prev) {
        Complex overlap{0.0, 0.0};
        for (std::size_t r = 0; r < n; ++r) overlap += std::conj(m(r, prev)) * m(r, c);
        for (std::size_t r = 0; r < n; ++r) m(r, c) -= overlap * m(r, prev);
      }
    Real nrm = 0.0;
    for (std::size_t r = 0; r < n; ++r) nrm += std::norm(m(r, c));
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) throw Error(ErrorKind::NumericalError, "degenerate Gaussian matrix");
    // Dividing by the positive norm makes the R diagonal real positive.
    for (std::size_t r = 0; r < n; ++r) m(r, c) /= nrm;
  }
}

ComplexMatrix gaussian_matrix(std::size_t dim, CounterStream& stream) {
  ComplexMatrix g(dim);
  for (auto& e : g.data()) e = stream.complex_normal();
  return g;
}

std::size_t single_dim(const StateSpec& spec, const char* kind) {
  if (spec.dims.size() == 1) return spec.dims[0];
  if (spec.dims.size() == 2) return spec.dims[0] * spec.dims[1];
  throw Error(ErrorKind::InvalidSpec, std::string(kind) + ": dims must be [d] or [d_A, d_B]");
}

std::size_t equal_pair_dim(const StateSpec& spec, const char* kind) {
  if (spec.dims.empty()) return 2;
  if (spec.dims.size() != 2 || spec.dims[0] != spec.dims[1])
    throw Error(ErrorKind::InvalidSpec, std::string(kind) + ": dims must be [d, d]");
  return spec.dims[0];
}

void require_unit_interval(Real x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorKind::InvalidSpec, std::string(what) + " must lie in [0, 1]");
}

}  // namespace

ComplexMatrix haar_unitary(std::size_t dim, std::uint64_t seed, std::uint64_t index) {
  CounterStream stream(seed, StreamDomain::HaarUnitary, index);
  ComplexMatrix u = gaussian_matrix(dim, stream);
  orthonormalize_columns(u);
  return u;
}

std::vector<Complex> random_pure_vector(std::size_t dim, std::uint64_t seed, std::uint64_t index) {
  CounterStream stream(seed, StreamDomain::PureState, index);
  std::vector<Complex> psi(dim);
  for (auto& e : psi) e = stream.complex_normal();
  const Real n = norm(psi);
  for (auto& e : psi) e /= n;
  return psi;
}

DensityMatrix random_pure_state(std::size_t dim, std::uint64_t seed, std::uint64_t index) {
  return DensityMatrix::pure(random_pure_vector(dim, seed, index));
}

DensityMatrix random_mixed_state(std::size_t dim, std::uint64_t seed, std::uint64_t index) {
  CounterStream stream(seed, StreamDomain::Ginibre, index);
  const ComplexMatrix g = gaussian_matrix(dim, stream);
  ComplexMatrix rho = g * g.adjoint();
  // exact Hermitian symmetrization before normalizing
  for (std::size_t r = 0; r < dim; ++r) {
    rho(r, r) = rho(r, r).real();
    for (std::size_t c = r + 1; c < dim; ++c) rho(c, r) = std::conj(rho(r, c));
  }
  rho *= 1.0 / rho.trace().real();
  return DensityMatrix(std::move(rho));
}

ComplexMatrix random_complex_matrix(std::size_t dim, std::uint64_t seed, std::uint64_t index) {
  CounterStream stream(seed, StreamDomain::TestData, index);
  return gaussian_matrix(dim, stream);
}

ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed, std::uint64_t index) {
  const ComplexMatrix g = random_complex_matrix(dim, seed, index);
  ComplexMatrix h(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) h(r, c) = 0.5 * (g(r, c) + std::conj(g(c, r)));
  return h;
}

DensityMatrix bell_state(std::size_t dim) {
  std::vector<Complex> psi(dim * dim, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < dim; ++i) psi[i * dim + i] = 1.0;
  return DensityMatrix::pure(psi);
}

DensityMatrix max_coherent_state(std::size_t dim) {
  std::vector<Complex> psi(dim, Complex{1.0, 0.0});
  return DensityMatrix::pure(psi);
}

DensityMatrix basis_state(std::size_t dim, std::size_t i) {
  if (i >= dim) throw Error(ErrorKind::InvalidSpec, "basis index out of range");
  std::vector<Complex> psi(dim, Complex{0.0, 0.0});
  psi[i] = 1.0;
  return DensityMatrix::pure(psi);
}

DensityMatrix werner_state(std::size_t dim, Real p) {
  require_unit_interval(p, "werner p");
  if (dim < 2) throw Error(ErrorKind::InvalidSpec, "werner state needs d >= 2");
  const std::size_t n = dim * dim;
  // P_anti = (I − F)/2
  ComplexMatrix anti = ComplexMatrix::identity(n) - swap_operator(dim);
  anti *= 0.5;
  const Real anti_rank = static_cast<Real>(dim * (dim - 1)) / 2.0;
  ComplexMatrix rho = Complex{p / anti_rank, 0.0} * anti;
  rho += Complex{(1.0 - p) / static_cast<Real>(n), 0.0} * ComplexMatrix::identity(n);
  return DensityMatrix(std::move(rho));
}

DensityMatrix isotropic_state(std::size_t dim, Real fidelity) {
  require_unit_interval(fidelity, "isotropic F");
  if (dim < 2) throw Error(ErrorKind::InvalidSpec, "isotropic state needs d >= 2");
  const std::size_t n = dim * dim;
  const ComplexMatrix phi = bell_state(dim).matrix();
  ComplexMatrix rho = Complex{fidelity, 0.0} * phi;
  rho += Complex{(1.0 - fidelity) / static_cast<Real>(n - 1), 0.0} * (ComplexMatrix::identity(n) - phi);
  return DensityMatrix(std::move(rho));
}

DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(tensor(a.matrix(), b.matrix()));
}

MaterializedState materialize(const StateSpec& spec) {
  switch (spec.kind) {
    case StateKind::PureHaar:
      return {random_pure_state(single_dim(spec, "pure_haar"), spec.seed, 0), spec.dims};
    case StateKind::MixedGinibre:
      return {random_mixed_state(single_dim(spec, "mixed_ginibre"), spec.seed, 0), spec.dims};
    case StateKind::Bell: {
      const std::size_t d = equal_pair_dim(spec, "bell");
      return {bell_state(d), {d, d}};
    }
    case StateKind::Werner: {
      const std::size_t d = equal_pair_dim(spec, "werner");
      return {werner_state(d, spec.param), {d, d}};
    }
    case StateKind::Isotropic: {
      const std::size_t d = equal_pair_dim(spec, "isotropic");
      return {isotropic_state(d, spec.param), {d, d}};
    }
    case StateKind::MaxCoherent: {
      if (spec.dims.size() != 1) throw Error(ErrorKind::InvalidSpec, "max_coherent: dims must be [d]");
      return {max_coherent_state(spec.dims[0]), spec.dims};
    }
    case StateKind::Basis: {
      if (spec.dims.size() != 1) throw Error(ErrorKind::InvalidSpec, "basis: dims must be [d]");
      if (spec.param < 0.0 || spec.param != std::floor(spec.param))
        throw Error(ErrorKind::InvalidSpec, "basis: param must be a nonnegative integer index");
      return {basis_state(spec.dims[0], static_cast<std::size_t>(spec.param)), spec.dims};
    }
    case StateKind::Product: {
      if (spec.parts.size() != 2) throw Error(ErrorKind::InvalidSpec, "product: needs exactly two parts");
      const MaterializedState a = materialize(spec.parts[0]);
      const MaterializedState b = materialize(spec.parts[1]);
      if (a.bipartite() || b.bipartite())
        throw Error(ErrorKind::InvalidSpec, "product: parts must be single-system states");
      return {product_state(a.state, b.state), {a.state.dim(), b.state.dim()}};
    }
    case StateKind::File:
      return load_state_file(spec.path);
  }
  throw Error(ErrorKind::InvalidSpec, "unknown state kind");
}

StateKind parse_state_kind(const std::string& name) {
  if (name == "pure_haar") return StateKind::PureHaar;
  if (name == "mixed_ginibre") return StateKind::MixedGinibre;
  if (name == "bell") return StateKind::Bell;
  if (name == "werner") return StateKind::Werner;
  if (name == "isotropic") return StateKind::Isotropic;
  if (name == "max_coherent") return StateKind::MaxCoherent;
  if (name == "basis") return StateKind::Basis;
  if (name == "product") return StateKind::Product;
  if (name == "file") return StateKind::File;
  throw Error(ErrorKind::InvalidSpec, "unknown state family '" + name + "'");
}

std::string to_string(StateKind kind) {
  switch (kind) {
    case StateKind::PureHaar: return "pure_haar";
    case StateKind::MixedGinibre: return "mixed_ginibre";
    case StateKind::Bell: return "bell";
    case StateKind::Werner: return "werner";
    case StateKind::Isotropic: return "isotropic";
    case StateKind::MaxCoherent: return "max_coherent";
    case StateKind::Basis: return "basis";
    case StateKind::Product: return "product";
    case StateKind::File: return "file";
  }
  return "unknown";
}

bool is_parametric(StateKind kind) noexcept { return kind == StateKind::Werner || kind == StateKind::Isotropic; }

}  // namespace masi
