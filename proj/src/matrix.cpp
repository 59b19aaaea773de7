#include "masi/matrix.hpp"

#include <cmath>
#include <string>

#include "masi/errors.hpp"

namespace masi {

namespace {

void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + ": " + std::to_string(a.dim()) +
                                                  " vs " + std::to_string(b.dim()));
  }
}

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DimensionOverflow: return "DimensionOverflow";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::InvalidSpectrum: return "InvalidSpectrum";
    case ErrorKind::NumericalError: return "NumericalError";
    case ErrorKind::InvalidSampleCount: return "InvalidSampleCount";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::FileError: return "FileError";
    case ErrorKind::NotPure: return "NotPure";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "matrix dimension must be >= 1");
  if (entries_.size() != dim * dim) {
    throw Error(ErrorKind::DimensionMismatch, "entries length " + std::to_string(entries_.size()) +
                                                  " != dim^2 = " + std::to_string(dim * dim));
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : ComplexMatrix(rows.size()) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    std::size_t c = 0;
    for (const auto& v : row) (*this)(r, c++) = v;
    ++r;
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Real> values) {
  ComplexMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "outer product");
  ComplexMatrix m(u.size());
  for (std::size_t r = 0; r < u.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) m(r, c) = u[r] * std::conj(v[c]);
  return m;
}

std::vector<Complex> ComplexMatrix::column(std::size_t c) const {
  std::vector<Complex> v(dim_);
  for (std::size_t r = 0; r < dim_; ++r) v[r] = (*this)(r, c);
  return v;
}

void ComplexMatrix::set_column(std::size_t c, std::span<const Complex> v) {
  if (v.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "set_column");
  for (std::size_t r = 0; r < dim_; ++r) (*this)(r, c) = v[r];
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(dim_);
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

Complex ComplexMatrix::trace() const noexcept {
  Complex t{0.0, 0.0};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "matrix addition");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_dim(*this, rhs, "matrix subtraction");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) noexcept {
  for (auto& e : entries_) e *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  require_same_dim(lhs, rhs, "matrix product");
  const std::size_t n = lhs.dim();
  ComplexMatrix out(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(r, k);
      if (a == Complex{0.0, 0.0}) continue;
      for (std::size_t c = 0; c < n; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v) {
  if (v.size() != m.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  std::vector<Complex> out(m.dim(), Complex{0.0, 0.0});
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) out[r] += m(r, c) * v[c];
  return out;
}

Real frobenius_norm(const ComplexMatrix& m) {
  Real s = 0.0;
  for (const auto& e : m.data()) s += std::norm(e);
  return std::sqrt(s);
}

Real hermiticity_defect(const ComplexMatrix& m) {
  Real s = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) s += std::norm(m(r, c) - std::conj(m(c, r)));
  return std::sqrt(s);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dim(a, b, "trace_product");
  Complex t{0.0, 0.0};
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t k = 0; k < a.dim(); ++k) t += a(r, k) * b(k, r);
  return t;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "inner product");
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < u.size(); ++i) s += std::conj(u[i]) * v[i];
  return s;
}

Real norm(std::span<const Complex> v) {
  Real s = 0.0;
  for (const auto& e : v) s += std::norm(e);
  return std::sqrt(s);
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b, std::size_t cap) {
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  if (da * db > cap) {
    throw Error(ErrorKind::DimensionOverflow,
                std::to_string(da) + "x" + std::to_string(db) + " exceeds cap " + std::to_string(cap));
  }
  ComplexMatrix out(da * db);
  for (std::size_t ia = 0; ia < da; ++ia)
    for (std::size_t ja = 0; ja < da; ++ja) {
      const Complex x = a(ia, ja);
      for (std::size_t ib = 0; ib < db; ++ib)
        for (std::size_t jb = 0; jb < db; ++jb) out(ia * db + ib, ja * db + jb) = x * b(ib, jb);
    }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b, Keep keep) {
  if (dim_a == 0 || dim_b == 0 || m.dim() != dim_a * dim_b) {
    throw Error(ErrorKind::DimensionMismatch, "partial_trace: dim " + std::to_string(m.dim()) +
                                                  " != " + std::to_string(dim_a) + "*" +
                                                  std::to_string(dim_b));
  }
  if (keep == Keep::A) {
    ComplexMatrix out(dim_a);
    for (std::size_t i = 0; i < dim_a; ++i)
      for (std::size_t j = 0; j < dim_a; ++j) {
        Complex s{0.0, 0.0};
        for (std::size_t b = 0; b < dim_b; ++b) s += m(i * dim_b + b, j * dim_b + b);
        out(i, j) = s;
      }
    return out;
  }
  ComplexMatrix out(dim_b);
  for (std::size_t i = 0; i < dim_b; ++i)
    for (std::size_t j = 0; j < dim_b; ++j) {
      Complex s{0.0, 0.0};
      for (std::size_t a = 0; a < dim_a; ++a) s += m(a * dim_b + i, a * dim_b + j);
      out(i, j) = s;
    }
  return out;
}

ComplexMatrix swap_factors(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  if (m.dim() != dim_a * dim_b) throw Error(ErrorKind::DimensionMismatch, "swap_factors");
  ComplexMatrix out(m.dim());
  for (std::size_t ia = 0; ia < dim_a; ++ia)
    for (std::size_t ib = 0; ib < dim_b; ++ib)
      for (std::size_t ja = 0; ja < dim_a; ++ja)
        for (std::size_t jb = 0; jb < dim_b; ++jb)
          out(ib * dim_a + ia, jb * dim_a + ja) = m(ia * dim_b + ib, ja * dim_b + jb);
  return out;
}

ComplexMatrix swap_operator(std::size_t dim) {
  ComplexMatrix f(dim * dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) f(j * dim + i, i * dim + j) = 1.0;
  return f;
}

}  // namespace masi
