#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace masi {

using Real = double;
using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. All arithmetic below runs in a
/// fixed loop order so results are reproducible bit-for-bit on one build.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);
  /// Row-major nested initializer, e.g. {{0, 1}, {1, 0}}.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix diagonal(std::span<const Real> values);
  static ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);
  static ComplexMatrix projector(std::span<const Complex> v) { return outer(v, v); }

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> data() const noexcept { return entries_; }
  std::span<Complex> data() noexcept { return entries_; }

  Complex& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * dim_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * dim_ + c];
  }

  std::vector<Complex> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Complex> v);

  ComplexMatrix adjoint() const;
  Complex trace() const noexcept;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex s) noexcept;

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v);

Real frobenius_norm(const ComplexMatrix& m);
/// ‖M − M†‖_F
Real hermiticity_defect(const ComplexMatrix& m);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
/// Tr(A B) without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

Complex inner(std::span<const Complex> u, std::span<const Complex> v);  // ⟨u|v⟩
Real norm(std::span<const Complex> v);

/// Default cap on composite dimensions (8 ⊗ 8).
inline constexpr std::size_t kMaxDim = 64;

/// Kronecker product; entry (iA·dB + iB, jA·dB + jB) = A[iA,jA]·B[iB,jB].
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t cap = kMaxDim);

enum class Keep { A, B };
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b, Keep keep);

/// Permutes tensor factors: M on A⊗B becomes the same operator on B⊗A.
ComplexMatrix swap_factors(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);

/// Swap operator F|ψ⟩|φ⟩ = |φ⟩|ψ⟩ on C^d ⊗ C^d.
ComplexMatrix swap_operator(std::size_t dim);

}  // namespace masi
