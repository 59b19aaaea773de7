#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "masi/density.hpp"
#include "masi/philox.hpp"

namespace masi {

/// Haar-distributed unitary for stream (seed, index): a d×d complex Gaussian
/// matrix orthonormalized column by column (Gram–Schmidt, i.e. QR with a
/// positive real triangular diagonal).
ComplexMatrix haar_unitary(std::size_t dim, std::uint64_t seed, std::uint64_t index);

/// Normalized complex-Gaussian vector.
std::vector<Complex> random_pure_vector(std::size_t dim, std::uint64_t seed, std::uint64_t index);
DensityMatrix random_pure_state(std::size_t dim, std::uint64_t seed, std::uint64_t index);
/// GG†/Tr(GG†), G a d×d complex-Gaussian matrix (Hilbert–Schmidt measure).
DensityMatrix random_mixed_state(std::size_t dim, std::uint64_t seed, std::uint64_t index);

/// d×d matrix of independent complex Gaussians, TestData stream.
ComplexMatrix random_complex_matrix(std::size_t dim, std::uint64_t seed, std::uint64_t index);
/// (G + G†)/2 for G as above.
ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed, std::uint64_t index);

DensityMatrix bell_state(std::size_t dim = 2);          // Σ_i |ii⟩/√d
DensityMatrix max_coherent_state(std::size_t dim);      // Σ_i |i⟩/√d
DensityMatrix basis_state(std::size_t dim, std::size_t i);
/// p · P_anti/(d(d−1)/2) + (1 − p) · I/d² on C^d ⊗ C^d; p = 1 at d = 2 is the singlet.
DensityMatrix werner_state(std::size_t dim, Real p);
/// F |Φ⁺⟩⟨Φ⁺| + (1 − F)(I − |Φ⁺⟩⟨Φ⁺|)/(d² − 1) on C^d ⊗ C^d.
DensityMatrix isotropic_state(std::size_t dim, Real fidelity);
DensityMatrix product_state(const DensityMatrix& a, const DensityMatrix& b);

enum class StateKind { PureHaar, MixedGinibre, Bell, Werner, Isotropic, MaxCoherent, Basis, Product, File };

struct StateSpec {
  StateKind kind = StateKind::MixedGinibre;
  std::vector<std::size_t> dims;  // [d] or [d_A, d_B]
  std::uint64_t seed = 0;
  Real param = 0.0;               // p (werner), F (isotropic), index (basis)
  std::vector<StateSpec> parts;   // product factors
  std::string path;               // file kind
};

/// A state together with its subsystem dimensions.
struct MaterializedState {
  DensityMatrix state;
  std::vector<std::size_t> dims;
  bool bipartite() const noexcept { return dims.size() == 2; }
};

/// Deterministic for a fixed spec. Throws InvalidSpec / FileError.
MaterializedState materialize(const StateSpec& spec);

StateKind parse_state_kind(const std::string& name);
std::string to_string(StateKind kind);
bool is_parametric(StateKind kind) noexcept;

}  // namespace masi
