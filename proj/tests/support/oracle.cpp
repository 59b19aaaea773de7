#include "oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace oracle {

Mat to_eigen(const masi::ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Mat out(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) out(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
  return out;
}

masi::ComplexMatrix from_eigen(const Mat& m) {
  masi::ComplexMatrix out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = m(r, c);
  return out;
}

namespace {

struct Eig {
  std::vector<double> p;
  Mat v;
};

Eig decompose(const masi::ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(to_eigen(h));
  Eig e{{}, solver.eigenvectors()};
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) e.p.push_back(solver.eigenvalues()(i));
  return e;
}

double snap(double x) { return std::abs(x) < 1e-13 ? 0.0 : x; }

}  // namespace

std::vector<double> eigenvalues(const masi::ComplexMatrix& h) {
  auto p = decompose(h).p;
  std::sort(p.begin(), p.end(), std::greater<>());
  return p;
}

double f(Metric m, double t) { return m == Metric::WY ? 0.25 * (1.0 + std::sqrt(t)) * (1.0 + std::sqrt(t)) : 0.5 * (1.0 + t); }

double f0(Metric m) { return m == Metric::WY ? 0.25 : 0.5; }

double tilde(Metric m, double x, double y) {
  if (x <= 0.0 || y <= 0.0) return 0.0;
  return m == Metric::WY ? std::sqrt(x * y) : 2.0 * x * y / (x + y);
}

double skew_ratio(const masi::ComplexMatrix& rho, const masi::ComplexMatrix& a, Metric m) {
  const Eig e = decompose(rho);
  const Mat af = e.v.adjoint() * to_eigen(a) * e.v;
  double sum = 0.0;
  for (std::size_t k = 0; k < e.p.size(); ++k)
    for (std::size_t l = 0; l < e.p.size(); ++l) {
      const double pk = snap(e.p[k]), pl = snap(e.p[l]);
      if (pk == pl) continue;
      double denom;
      if (pl == 0.0) {
        denom = pk * f0(m);
      } else {
        denom = pl * f(m, pk / pl);
      }
      sum += f0(m) / 2.0 * (pk - pl) * (pk - pl) / denom *
             std::norm(af(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)));
    }
  return sum;
}

Mat partial_trace_keep_a(const Mat& m, int da, int db) {
  Mat out = Mat::Zero(da, da);
  for (int a = 0; a < da; ++a)
    for (int ap = 0; ap < da; ++ap)
      for (int b = 0; b < db; ++b) out(a, ap) += m(a * db + b, ap * db + b);
  return out;
}

Mat partial_trace_keep_b(const Mat& m, int da, int db) {
  Mat out = Mat::Zero(db, db);
  for (int b = 0; b < db; ++b)
    for (int bp = 0; bp < db; ++bp)
      for (int a = 0; a < da; ++a) out(b, bp) += m(a * db + b, a * db + bp);
  return out;
}

double coherence_closed(const masi::ComplexMatrix& rho, Metric m) {
  const auto p = eigenvalues(rho);
  double s = 0.0;
  for (double x : p)
    for (double y : p) s += tilde(m, snap(x), snap(y));
  const double d = static_cast<double>(p.size());
  return (d - s) / (d + 1.0);
}

double correlation_closed(const masi::ComplexMatrix& rho, int da, int db, Metric m) {
  const Mat full = to_eigen(rho);
  const double marginal = [&] {
    const auto p = eigenvalues(from_eigen(partial_trace_keep_a(full, da, db)));
    double s = 0.0;
    for (double x : p)
      for (double y : p) s += tilde(m, snap(x), snap(y));
    return s;
  }();
  const Eig e = decompose(rho);
  std::vector<Mat> sigma;
  std::vector<double> lambda;
  for (std::size_t k = 0; k < e.p.size(); ++k) {
    if (e.p[k] <= 1e-12) continue;
    const Eigen::VectorXcd v = e.v.col(static_cast<Eigen::Index>(k));
    sigma.push_back(partial_trace_keep_b(v * v.adjoint(), da, db));
    lambda.push_back(e.p[k]);
  }
  double pair = 0.0;
  for (std::size_t k = 0; k < sigma.size(); ++k)
    for (std::size_t l = 0; l < sigma.size(); ++l)
      pair += tilde(m, lambda[k], lambda[l]) * (sigma[k] * sigma[l]).trace().real();
  return (marginal - pair) / static_cast<double>(da + 1);
}

double coherence_in_basis(const masi::ComplexMatrix& rho, const masi::ComplexMatrix& basis, Metric m) {
  double sum = 0.0;
  for (std::size_t i = 0; i < basis.dim(); ++i) {
    const auto b = basis.column(i);
    sum += skew_ratio(rho, masi::ComplexMatrix::projector(b), m);
  }
  return sum;
}

}  // namespace oracle
