#include "masi/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "masi/coherence.hpp"
#include "masi/correlation.hpp"
#include "masi/duality.hpp"
#include "masi/errors.hpp"
#include "masi/states.hpp"

namespace masi {

namespace {

constexpr Real kInf = std::numeric_limits<Real>::infinity();

struct Env {
  std::uint64_t seed;
  std::int64_t samples;
  Tolerances tol;
};

struct Outcome {
  Real residual = 0.0;
  std::size_t cases = 0;
  std::string note;

  void take(Real r) {
    if (std::isnan(r)) r = kInf;
    residual = std::max(residual, r);
    ++cases;
  }
};

using CheckFn = std::function<Outcome(const Env&)>;

struct Check {
  std::string name;
  CheckKind kind;
  std::function<Real(const Tolerances&)> tolerance;
  CheckFn run;
};

/// Stream index for draw i of a check lane; lanes never overlap.
std::uint64_t lane_index(std::uint64_t lane, std::uint64_t i) { return (lane << 24) + i; }

/// MC seed for one estimate, distinct per (user seed, lane, case).
std::uint64_t mc_seed(const Env& env, std::uint64_t lane, std::uint64_t i) {
  return env.seed * 0x9E3779B97F4A7C15ULL + lane_index(lane, i) + 1;
}

Real z_score(Real estimate, Real exact, Real std_error, const Tolerances& tol) {
  const Real scale = std::max(std::abs(std_error), tol.mc_floor / tol.mc_sigmas);
  return std::abs(estimate - exact) / scale;
}

Real max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  Real m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

const MonotoneFunction& metric_at(std::size_t i) {
  static const MonotoneFunction wy = MonotoneFunction::wigner_yanase();
  static const MonotoneFunction sld = MonotoneFunction::sld();
  return i % 2 == 0 ? wy : sld;
}

const std::vector<std::pair<std::size_t, std::size_t>>& bipartite_dims() {
  static const std::vector<std::pair<std::size_t, std::size_t>> dims{{2, 2}, {2, 3}, {3, 2}, {5, 2}};
  return dims;
}

/// V diag(p) V† with p₀ = p₁, so the leading block is degenerate; the
/// last entry is zeroed when `rank_deficient`.
struct DegenerateState {
  std::vector<Real> p;
  ComplexMatrix v;
  DensityMatrix rho;
};

DegenerateState degenerate_state(std::size_t d, std::uint64_t seed, std::uint64_t index, bool rank_deficient) {
  CounterStream s(seed, StreamDomain::TestData, index);
  std::vector<Real> p(d);
  for (auto& x : p) x = s.uniform_open_closed();
  p[1] = p[0];
  if (rank_deficient && d > 2) p[d - 1] = 0.0;
  const Real total = std::accumulate(p.begin(), p.end(), 0.0);
  for (auto& x : p) x /= total;
  ComplexMatrix v = haar_unitary(d, seed, index);
  ComplexMatrix m = v * ComplexMatrix::diagonal(p) * v.adjoint();
  for (std::size_t r = 0; r < d; ++r) {
    m(r, r) = m(r, r).real();
    for (std::size_t c = r + 1; c < d; ++c) m(c, r) = std::conj(m(r, c));
  }
  return {p, v, DensityMatrix(m)};
}

/// Replaces columns 0 and 1 of v by a random unitary mix of the two.
ComplexMatrix remix_leading_pair(const ComplexMatrix& v, std::uint64_t seed, std::uint64_t index) {
  const ComplexMatrix w = haar_unitary(2, seed, index);
  ComplexMatrix out = v;
  for (std::size_t r = 0; r < v.dim(); ++r) {
    out(r, 0) = v(r, 0) * w(0, 0) + v(r, 1) * w(1, 0);
    out(r, 1) = v(r, 0) * w(0, 1) + v(r, 1) * w(1, 1);
  }
  return out;
}

Real skew_from_frame(const MonotoneFunction& f, const std::vector<Real>& p, const ComplexMatrix& v,
                     const ComplexMatrix& a) {
  const ComplexMatrix af = v.adjoint() * a * v;
  Real sum = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k)
    for (std::size_t l = 0; l < p.size(); ++l)
      sum += (0.5 * (p[k] + p[l]) - tilde_c(f, p[k], p[l])) * std::norm(af(k, l));
  return sum;
}

Real closed_from_frame(const MonotoneFunction& f, const std::vector<Real>& lambda, const ComplexMatrix& v,
                       const DensityMatrix& rho_a, std::size_t da, std::size_t db) {
  std::vector<ComplexMatrix> sigma;
  std::vector<Real> kept;
  for (std::size_t k = 0; k < lambda.size(); ++k) {
    if (lambda[k] <= kModeCutoff) continue;
    sigma.push_back(partial_trace(ComplexMatrix::projector(v.column(k)), da, db, Keep::B));
    kept.push_back(lambda[k]);
  }
  Real pair = 0.0;
  for (std::size_t k = 0; k < kept.size(); ++k)
    for (std::size_t l = 0; l < kept.size(); ++l)
      pair += tilde_c(f, kept[k], kept[l]) * trace_product(sigma[k], sigma[l]).real();
  return (spectrum_tilde_sum(f, rho_a.eigenvalues()) - pair) / static_cast<Real>(da + 1);
}

ComplexMatrix permutation_matrix(std::size_t d, std::uint64_t seed, std::uint64_t index) {
  CounterStream s(seed, StreamDomain::TestData, index);
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = d - 1; i > 0; --i) std::swap(perm[i], perm[s.next_u64() % (i + 1)]);
  ComplexMatrix p(d);
  for (std::size_t i = 0; i < d; ++i) p(perm[i], i) = 1.0;
  return p;
}

DensityMatrix random_state_mixed_or_pure(std::size_t d, std::uint64_t seed, std::uint64_t index) {
  return index % 4 == 3 ? random_pure_state(d, seed, index) : random_mixed_state(d, seed, index);
}

// linalg

Outcome eigh_reconstruction(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d : {2, 3, 5, 8, 16, 32, 64}) {
    const int reps = d >= 32 ? 2 : 10;
    for (int r = 0; r < reps; ++r) {
      const ComplexMatrix h = random_hermitian(d, env.seed, lane_index(1, i++));
      const SpectralDecomposition s = eigh(h);
      o.take(frobenius_norm(s.reconstruct() - h));
      o.take(frobenius_norm(s.vectors.adjoint() * s.vectors - ComplexMatrix::identity(d)));
    }
  }
  return o;
}

Outcome partial_trace_tensor(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t da : {1, 2, 3, 4})
    for (std::size_t db : {1, 2, 3, 5}) {
      const ComplexMatrix a = random_complex_matrix(da, env.seed, lane_index(2, i++));
      const ComplexMatrix b = random_complex_matrix(db, env.seed, lane_index(2, i++));
      const ComplexMatrix ab = tensor(a, b);
      o.take(max_entry_diff(partial_trace(ab, da, db, Keep::A), b.trace() * a));
      o.take(max_entry_diff(partial_trace(ab, da, db, Keep::B), a.trace() * b));
    }
  return o;
}

Outcome operator_basis_gram(const Env&) {
  Outcome o;
  for (std::size_t d = 2; d <= 8; ++d) {
    const auto g = hermitian_operator_basis(d);
    if (g.size() != d * d) o.take(kInf);
    for (std::size_t i = 0; i < g.size(); ++i) {
      o.take(hermiticity_defect(g[i]));
      for (std::size_t j = 0; j < g.size(); ++j)
        o.take(std::abs(trace_product(g[i].adjoint(), g[j]) - Complex{i == j ? 1.0 : 0.0, 0.0}));
    }
  }
  return o;
}

Outcome sqrt_psd_degenerate(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d : {2, 3, 4, 5, 6})
    for (int r = 0; r < 10; ++r) {
      const std::uint64_t idx = lane_index(3, i++);
      const DegenerateState s = degenerate_state(d, env.seed, idx, r % 2 == 1);
      const ComplexMatrix v = remix_leading_pair(s.v, env.seed, idx);
      std::vector<Real> root(s.p.size());
      for (std::size_t k = 0; k < root.size(); ++k) root[k] = std::sqrt(s.p[k]);
      const ComplexMatrix reference = v * ComplexMatrix::diagonal(root) * v.adjoint();
      o.take(frobenius_norm(sqrt_psd(s.rho.matrix()) - reference));
    }
  return o;
}

// monotone

Outcome tilde_symmetry(const Env& env) {
  Outcome o;
  CounterStream s(env.seed, StreamDomain::TestData, lane_index(4, 0));
  for (int i = 0; i < 1000; ++i) {
    const Real x = s.uniform_open_closed();
    const Real y = s.uniform_open_closed();
    for (std::size_t m = 0; m < 2; ++m)
      o.take(std::abs(tilde_c(metric_at(m), x, y) - tilde_c(metric_at(m), y, x)));
  }
  return o;
}

Outcome tilde_closed_form(bool wy) {
  Outcome o;
  const MonotoneFunction& f = metric_at(wy ? 0 : 1);
  for (int i = 1; i <= 10; ++i)
    for (int j = 1; j <= 10; ++j) {
      const Real x = i / 10.0;
      const Real y = j / 10.0;
      const Real expected = wy ? std::sqrt(x * y) : 2.0 * x * y / (x + y);
      o.take(std::abs(tilde_c(f, x, y) - expected));
    }
  return o;
}

Outcome spectrum_sum_extremes(const Env&) {
  Outcome o;
  for (std::size_t d = 2; d <= 6; ++d)
    for (std::size_t m = 0; m < 2; ++m) {
      std::vector<Real> pure(d, 0.0);
      pure[0] = 1.0;
      std::vector<Real> mixed(d, 1.0 / static_cast<Real>(d));
      o.take(std::abs(spectrum_tilde_sum(metric_at(m), pure) - 1.0));
      o.take(std::abs(spectrum_tilde_sum(metric_at(m), mixed) - static_cast<Real>(d)));
    }
  return o;
}

Outcome spectrum_sum_strict(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d = 2; d <= 6; ++d)
    for (int r = 0; r < 100; ++r) {
      const DensityMatrix rho = random_mixed_state(d, env.seed, lane_index(5, i++));
      for (std::size_t m = 0; m < 2; ++m)
        o.take(std::max<Real>(0.0, 1.0 + 1e-9 - spectrum_tilde_sum(metric_at(m), rho.eigenvalues())));
    }
  return o;
}

// skew

Outcome skew_dual_formula(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d = 2; d <= 6; ++d)
    for (int r = 0; r < 200; ++r) {
      const std::uint64_t idx = lane_index(6, i++);
      const DensityMatrix rho = random_state_mixed_or_pure(d, env.seed, idx);
      const ComplexMatrix a = random_hermitian(d, env.seed, idx);
      for (std::size_t m = 0; m < 2; ++m) {
        const SkewContext ctx(rho, metric_at(m));
        o.take(std::abs(skew_information(ctx, a) - skew_information_ratio_form(ctx, a)));
      }
    }
  return o;
}

Outcome skew_convexity(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d = 2; d <= 6; ++d)
    for (int r = 0; r < 20; ++r) {
      const std::uint64_t idx = lane_index(7, i++);
      const DensityMatrix r1 = random_mixed_state(d, env.seed, 2 * idx);
      const DensityMatrix r2 = random_state_mixed_or_pure(d, env.seed, 2 * idx + 1);
      const ComplexMatrix a = random_hermitian(d, env.seed, idx);
      for (std::size_t m = 0; m < 2; ++m) {
        const Real i1 = skew_information(SkewContext(r1, metric_at(m)), a);
        const Real i2 = skew_information(SkewContext(r2, metric_at(m)), a);
        for (Real t : {0.25, 0.5, 0.75}) {
          const Real im = skew_information(SkewContext(mix(r1, r2, t), metric_at(m)), a);
          o.take(std::max<Real>(0.0, im - (t * i1 + (1.0 - t) * i2)));
        }
      }
    }
  return o;
}

Outcome skew_commuting_zero(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d = 2; d <= 6; ++d)
    for (int r = 0; r < 20; ++r) {
      const std::uint64_t idx = lane_index(8, i++);
      const DensityMatrix rho = random_mixed_state(d, env.seed, idx);
      CounterStream s(env.seed, StreamDomain::TestData, idx);
      std::vector<Real> diag(d);
      for (auto& x : diag) x = s.normal();
      const ComplexMatrix& v = rho.spectrum().vectors;
      const ComplexMatrix a = v * ComplexMatrix::diagonal(diag) * v.adjoint();
      if (frobenius_norm(commutator(rho.matrix(), a)) > 1e-12) continue;
      for (std::size_t m = 0; m < 2; ++m) o.take(skew_information(SkewContext(rho, metric_at(m)), a));
    }
  if (o.cases == 0) {
    o.residual = kInf;
    o.note = "no commuting pair reached the 1e-12 commutator threshold";
  }
  return o;
}

Outcome skew_noncommuting_positive(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d = 2; d <= 6; ++d)
    for (int r = 0; r < 40; ++r) {
      const std::uint64_t idx = lane_index(9, i++);
      const DensityMatrix rho = random_state_mixed_or_pure(d, env.seed, idx);
      const ComplexMatrix a = random_hermitian(d, env.seed, idx);
      if (frobenius_norm(commutator(rho.matrix(), a)) <= 0.1) continue;
      for (std::size_t m = 0; m < 2; ++m)
        o.take(std::max<Real>(0.0, 1e-6 - skew_information(SkewContext(rho, metric_at(m)), a)));
    }
  return o;
}

Outcome skew_degeneracy(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d : {2, 3, 4, 5, 6})
    for (int r = 0; r < 20; ++r) {
      const std::uint64_t idx = lane_index(10, i++);
      const DegenerateState s = degenerate_state(d, env.seed, idx, r % 2 == 1);
      const ComplexMatrix v = remix_leading_pair(s.v, env.seed, idx + 1);
      const ComplexMatrix a = random_hermitian(d, env.seed, idx);
      for (std::size_t m = 0; m < 2; ++m) {
        const Real base = skew_information(SkewContext(s.rho, metric_at(m)), a);
        o.take(std::abs(base - skew_from_frame(metric_at(m), s.p, v, a)));
        o.take(std::abs(base - skew_from_frame(metric_at(m), s.p, s.v, a)));
      }
    }
  return o;
}

Outcome skew_unitary_input(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d = 2; d <= 6; ++d)
    for (int r = 0; r < 20; ++r) {
      const std::uint64_t idx = lane_index(11, i++);
      const DensityMatrix rho = random_state_mixed_or_pure(d, env.seed, idx);
      const ComplexMatrix u = haar_unitary(d, env.seed, idx);
      o.take(std::abs(symmetrized_second_moment(rho, u) - 1.0));
      for (std::size_t m = 0; m < 2; ++m) {
        const Real value = skew_information(SkewContext(rho, metric_at(m)), u);
        o.take(std::max<Real>({0.0, -value, value - 1.0}));
      }
    }
  return o;
}

// mub

Outcome mub_certify(const Env&) {
  Outcome o;
  for (std::size_t d : {2, 3, 4, 5, 7}) {
    const MubCertificate c = certify_mub(build_mub_family(d));
    o.take(c.max_orthonormality_error);
    o.take(c.max_unbiasedness_error);
    if (!c.complete) o.take(kInf);
  }
  return o;
}

Outcome mub_projector_sum(const Env&) {
  Outcome o;
  for (std::size_t d : {2, 3, 4, 5, 7}) {
    const MubFamily family = build_mub_family(d);
    ComplexMatrix sum(d * d);
    for (const auto& basis : family.bases)
      for (std::size_t i = 0; i < d; ++i) {
        const ComplexMatrix p = basis.projector(i);
        sum += tensor(p, p);
      }
    o.take(frobenius_norm(sum - ComplexMatrix::identity(d * d) - swap_operator(d)));
  }
  return o;
}

// coherence

template <typename Fn>
void for_coherence_states(const Env& env, std::uint64_t lane, Fn&& fn) {
  std::uint64_t i = 0;
  for (std::size_t d : {2, 3, 5})
    for (int r = 0; r < 50; ++r) {
      const std::uint64_t idx = lane_index(lane, i++);
      const DensityMatrix rho = random_mixed_state(d, env.seed, idx);
      for (std::size_t m = 0; m < 2; ++m) fn(SkewContext(rho, metric_at(m)), idx * 2 + m);
    }
}

Outcome coherence_four_way(const Env& env) {
  Outcome o;
  for_coherence_states(env, 12, [&](const SkewContext& ctx, std::uint64_t) {
    const Real closed = average_coherence_closed(ctx);
    const Real mub = average_coherence_mub(ctx, build_mub_family(ctx.dim()));
    const Real ob = average_coherence_operator_basis(ctx);
    o.take(std::max({std::abs(closed - mub), std::abs(closed - ob), std::abs(mub - ob)}));
  });
  return o;
}

Outcome coherence_haar_mc(const Env& env) {
  Outcome o;
  for_coherence_states(env, 12, [&](const SkewContext& ctx, std::uint64_t idx) {
    const McEstimate mc = average_coherence_haar_mc(ctx, env.samples, mc_seed(env, 13, idx));
    o.take(z_score(mc.mean, average_coherence_closed(ctx), mc.std_error, env.tol));
  });
  return o;
}

Outcome coherence_unitary_invariance(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d = 2; d <= 6; ++d)
    for (int r = 0; r < 20; ++r) {
      const std::uint64_t idx = lane_index(14, i++);
      const DensityMatrix rho = random_state_mixed_or_pure(d, env.seed, idx);
      const DensityMatrix rotated = conjugate(rho, haar_unitary(d, env.seed, idx));
      for (std::size_t m = 0; m < 2; ++m)
        o.take(std::abs(average_coherence_closed(SkewContext(rho, metric_at(m))) -
                        average_coherence_closed(SkewContext(rotated, metric_at(m)))));
    }
  return o;
}

Outcome coherence_bound(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d = 2; d <= 6; ++d) {
    const Real bound = static_cast<Real>(d - 1) / static_cast<Real>(d + 1);
    for (int r = 0; r < 40; ++r) {
      const std::uint64_t idx = lane_index(15, i++);
      const DensityMatrix rho = random_state_mixed_or_pure(d, env.seed, idx);
      for (std::size_t m = 0; m < 2; ++m) {
        const Real c = average_coherence_closed(SkewContext(rho, metric_at(m)));
        o.take(std::max<Real>({0.0, -c, c - bound}));
        if (rho.purity() > 1.0 - 1e-9) o.take(std::abs(c - bound));
      }
    }
  }
  return o;
}

Outcome coherence_bound_strict(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d = 2; d <= 6; ++d) {
    const Real bound = static_cast<Real>(d - 1) / static_cast<Real>(d + 1);
    for (int r = 0; r < 40; ++r) {
      const DensityMatrix rho = random_mixed_state(d, env.seed, lane_index(16, i++));
      if (rho.purity() > 1.0 - 1e-9) continue;
      for (std::size_t m = 0; m < 2; ++m)
        o.take(std::max<Real>(0.0, average_coherence_closed(SkewContext(rho, metric_at(m))) - (bound - 1e-9)));
    }
  }
  return o;
}

// correlation

template <typename Fn>
void for_bipartite_states(const Env& env, std::uint64_t lane, int per_dims, Fn&& fn) {
  std::uint64_t i = 0;
  for (const auto& [da, db] : bipartite_dims())
    for (int r = 0; r < per_dims; ++r) {
      const std::uint64_t idx = lane_index(lane, i++);
      const BipartiteState bp(random_state_mixed_or_pure(da * db, env.seed, idx), da, db);
      fn(bp, idx);
    }
}

Outcome correlation_four_way(const Env& env) {
  Outcome o;
  for_bipartite_states(env, 17, 50, [&](const BipartiteState& bp, std::uint64_t) {
    const MubFamily family = build_mub_family(bp.dim_a());
    for (std::size_t m = 0; m < 2; ++m) {
      const CorrelationContext cc(bp, metric_at(m));
      const Real v[4] = {average_correlation_closed(bp, metric_at(m)), average_correlation_mub(cc, family),
                         average_correlation_operator_basis(cc), average_correlation_twirl_exact(cc)};
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) o.take(std::abs(v[a] - v[b]));
    }
  });
  return o;
}

Outcome correlation_mc(const Env& env) {
  Outcome o;
  for_bipartite_states(env, 17, 50, [&](const BipartiteState& bp, std::uint64_t idx) {
    for (std::size_t m = 0; m < 2; ++m) {
      const CorrelationContext cc(bp, metric_at(m));
      const Real closed = average_correlation_closed(bp, metric_at(m));
      const McEstimate haar = average_correlation_haar_mc(cc, env.samples, mc_seed(env, 18, 2 * idx + m));
      const McEstimate twirl = average_correlation_twirl_mc(cc, env.samples, mc_seed(env, 19, 2 * idx + m));
      o.take(z_score(haar.mean, closed, haar.std_error, env.tol));
      o.take(z_score(twirl.mean, closed, twirl.std_error, env.tol));
    }
  });
  return o;
}

Outcome correlation_local_unitary(const Env& env) {
  Outcome o;
  for_bipartite_states(env, 20, 20, [&](const BipartiteState& bp, std::uint64_t idx) {
    const ComplexMatrix u = tensor(haar_unitary(bp.dim_a(), env.seed, 2 * idx),
                                   haar_unitary(bp.dim_b(), env.seed, 2 * idx + 1));
    const BipartiteState rotated(conjugate(bp.state(), u), bp.dim_a(), bp.dim_b());
    for (std::size_t m = 0; m < 2; ++m)
      o.take(std::abs(average_correlation_closed(bp, metric_at(m)) -
                      average_correlation_closed(rotated, metric_at(m))));
  });
  return o;
}

Outcome correlation_special(const Env& env, bool wy) {
  Outcome o;
  for_bipartite_states(env, wy ? 21 : 22, 25, [&](const BipartiteState& bp, std::uint64_t) {
    const Real special = wy ? average_correlation_wy_special(bp) : average_correlation_fisher_special(bp);
    o.take(std::abs(special - average_correlation_closed(bp, metric_at(wy ? 0 : 1))));
  });
  return o;
}

Outcome correlation_product_zero(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (const auto& [da, db] : bipartite_dims())
    for (int r = 0; r < 25; ++r) {
      const std::uint64_t idx = lane_index(23, i++);
      const BipartiteState bp(product_state(random_state_mixed_or_pure(da, env.seed, 2 * idx),
                                            random_state_mixed_or_pure(db, env.seed, 2 * idx + 1)),
                              da, db);
      for (std::size_t m = 0; m < 2; ++m) o.take(std::abs(average_correlation_closed(bp, metric_at(m))));
    }
  return o;
}

Outcome correlation_degenerate_remix(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (const auto& [da, db] : bipartite_dims())
    for (int r = 0; r < 10; ++r) {
      const std::uint64_t idx = lane_index(24, i++);
      const DegenerateState s = degenerate_state(da * db, env.seed, idx, r % 2 == 1);
      const ComplexMatrix v = remix_leading_pair(s.v, env.seed, idx + 1);
      const BipartiteState bp(s.rho, da, db);
      for (std::size_t m = 0; m < 2; ++m) {
        const Real base = average_correlation_closed(bp, metric_at(m));
        o.take(std::abs(base - closed_from_frame(metric_at(m), s.p, v, bp.reduced_a(), da, db)));
        o.take(std::abs(base - closed_from_frame(metric_at(m), s.p, s.v, bp.reduced_a(), da, db)));
      }
    }
  for (std::size_t d : {2, 3})
    for (Real p : {0.0, 0.3, 0.7, 1.0}) {
      const BipartiteState w(werner_state(d, p), d, d);
      const BipartiteState f(isotropic_state(d, p), d, d);
      for (std::size_t m = 0; m < 2; ++m) {
        o.take(std::abs(average_correlation_closed(w, metric_at(m)) -
                        average_correlation_operator_basis(w, metric_at(m))));
        o.take(std::abs(average_correlation_closed(f, metric_at(m)) -
                        average_correlation_operator_basis(f, metric_at(m))));
      }
    }
  return o;
}

Outcome correlation_basis_nonnegative(const Env& env) {
  Outcome o;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::uint64_t idx = lane_index(25, i);
    const BipartiteState bp(random_state_mixed_or_pure(4, env.seed, idx), 2, 2);
    const MeasurementBasis basis(haar_unitary(2, env.seed, idx));
    for (std::size_t m = 0; m < 2; ++m)
      o.take(std::max<Real>(0.0, -correlation_wrt_basis(bp, metric_at(m), basis)));
  }
  return o;
}

// duality

Outcome prop4_identity(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d = 2; d <= 6; ++d)
    for (int r = 0; r < 200; ++r) {
      const std::uint64_t idx = lane_index(26, i++);
      const DensityMatrix rho = random_state_mixed_or_pure(d, env.seed, idx);
      const MeasurementBasis basis(haar_unitary(d, env.seed, idx));
      o.take(complementarity_report(SkewContext(rho, metric_at(idx)), basis).residual_prop4);
    }
  return o;
}

Outcome prop4_worked_example(const Env&) {
  Outcome o;
  const DensityMatrix rho(ComplexMatrix{{0.75, 0.0}, {0.0, 0.25}});
  const DualityReport r = complementarity_report(SkewContext(rho, metric_at(0)), MeasurementBasis::computational(2));
  o.take(std::abs(r.wave));
  o.take(std::abs(r.particle - (1.0 - std::sqrt(3.0) / 2.0)));
  o.take(std::abs(r.f_entropy - std::sqrt(3.0) / 2.0));
  o.take(r.residual_prop4);
  return o;
}

Outcome prop3_bound(const Env& env, bool pure_equality) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d = 2; d <= 6; ++d)
    for (int r = 0; r < 40; ++r) {
      const std::uint64_t idx = lane_index(pure_equality ? 27 : 28, i++);
      const DensityMatrix rho = pure_equality ? random_pure_state(d, env.seed, idx)
                                              : random_state_mixed_or_pure(d, env.seed, idx);
      const MeasurementBasis basis(haar_unitary(d, env.seed, idx));
      for (std::size_t m = 0; m < 2; ++m) {
        const SkewContext ctx(rho, metric_at(m));
        const Real wp = wave_feature(ctx, basis) + particle_feature(ctx, basis);
        const Real limit = static_cast<Real>(d - 1);
        o.take(pure_equality ? std::abs(wp - limit) : std::max<Real>(0.0, wp - limit));
      }
    }
  return o;
}

Outcome prop3_strict(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d = 2; d <= 6; ++d)
    for (int r = 0; r < 40; ++r) {
      const std::uint64_t idx = lane_index(29, i++);
      const DensityMatrix rho = random_mixed_state(d, env.seed, idx);
      if (rho.purity() >= 1.0 - 1e-6) continue;
      const MeasurementBasis basis(haar_unitary(d, env.seed, idx));
      for (std::size_t m = 0; m < 2; ++m) {
        const SkewContext ctx(rho, metric_at(m));
        const Real wp = wave_feature(ctx, basis) + particle_feature(ctx, basis);
        o.take(std::max<Real>(0.0, wp - (static_cast<Real>(d - 1) - 1e-9)));
      }
    }
  return o;
}

Outcome prop5_identity(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d : {2, 3}) {
    const MubFamily family = build_mub_family(d);
    for (int r = 0; r < 100; ++r) {
      const BipartiteState bp(random_pure_state(d * d, env.seed, lane_index(30, i++)), d, d);
      for (std::size_t m = 0; m < 2; ++m)
        for (const auto& basis : family.bases) o.take(bipartite_complementarity_check(bp, metric_at(m), basis));
    }
  }
  return o;
}

Outcome duality_convexity(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d = 2; d <= 6; ++d)
    for (int r = 0; r < 20; ++r) {
      const std::uint64_t idx = lane_index(31, i++);
      const DensityMatrix r1 = random_state_mixed_or_pure(d, env.seed, 2 * idx);
      const DensityMatrix r2 = random_state_mixed_or_pure(d, env.seed, 2 * idx + 1);
      const MeasurementBasis basis(haar_unitary(d, env.seed, idx));
      for (std::size_t m = 0; m < 2; ++m) {
        const SkewContext c1(r1, metric_at(m));
        const SkewContext c2(r2, metric_at(m));
        const Real w1 = wave_feature(c1, basis), w2 = wave_feature(c2, basis);
        const Real p1 = particle_feature(c1, basis), p2 = particle_feature(c2, basis);
        for (Real t : {0.25, 0.5, 0.75}) {
          const SkewContext cm(mix(r1, r2, t), metric_at(m));
          o.take(std::max<Real>(0.0, wave_feature(cm, basis) - (t * w1 + (1.0 - t) * w2)));
          o.take(std::max<Real>(0.0, particle_feature(cm, basis) - (t * p1 + (1.0 - t) * p2)));
        }
      }
    }
  return o;
}

Outcome duality_permutation(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d = 2; d <= 6; ++d)
    for (int r = 0; r < 20; ++r) {
      const std::uint64_t idx = lane_index(32, i++);
      const DensityMatrix rho = random_state_mixed_or_pure(d, env.seed, idx);
      const ComplexMatrix u = haar_unitary(d, env.seed, idx);
      const ComplexMatrix p = permutation_matrix(d, env.seed, idx);
      const MeasurementBasis basis(u);
      const MeasurementBasis relabeled(p * u * p.adjoint());
      const DensityMatrix moved = conjugate(rho, p);
      for (std::size_t m = 0; m < 2; ++m) {
        const SkewContext c1(rho, metric_at(m));
        const SkewContext c2(moved, metric_at(m));
        o.take(std::abs(wave_feature(c1, basis) - wave_feature(c2, relabeled)));
        o.take(std::abs(particle_feature(c1, basis) - particle_feature(c2, relabeled)));
      }
    }
  return o;
}

Outcome duality_wave_maximizer(const Env& env) {
  Outcome o;
  const MeasurementBasis basis = MeasurementBasis::computational(3);
  const Real limit = 1.0 - 1.0 / 3.0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const auto psi = random_pure_vector(3, env.seed, lane_index(33, i));
    const SkewContext ctx(DensityMatrix::pure(psi), metric_at(i));
    const Real w = wave_feature(ctx, basis);
    o.take(std::max<Real>(0.0, w - limit));
    if (std::abs(w - limit) <= 1e-9) {
      Real spread = 0.0;
      for (const auto& a : psi) spread = std::max(spread, std::abs(std::norm(a) - 1.0 / 3.0));
      if (spread > 1e-6) o.take(kInf);
    }
  }
  for (std::size_t m = 0; m < 2; ++m)
    o.take(std::abs(wave_feature(SkewContext(max_coherent_state(3), metric_at(m)), basis) - limit));
  return o;
}

Outcome duality_bounds(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d = 2; d <= 6; ++d) {
    const Real dd = static_cast<Real>(d);
    const MeasurementBasis computational = MeasurementBasis::computational(d);
    for (int r = 0; r < 40; ++r) {
      const std::uint64_t idx = lane_index(34, i++);
      const DensityMatrix rho = random_state_mixed_or_pure(d, env.seed, idx);
      const MeasurementBasis basis(haar_unitary(d, env.seed, idx));
      const DualityReport rep = complementarity_report(SkewContext(rho, metric_at(idx)), basis);
      o.take(std::max<Real>({0.0, -rep.wave, rep.wave - (1.0 - 1.0 / dd)}));
      o.take(std::max<Real>({0.0, -rep.particle, rep.particle - (dd - 1.0)}));
      o.take(std::max<Real>({0.0, -rep.f_entropy, rep.f_entropy - (dd - 1.0)}));
      std::vector<Real> diag(d);
      for (std::size_t k = 0; k < d; ++k) diag[k] = rho.matrix()(k, k).real();
      const DensityMatrix classical(ComplexMatrix::diagonal(diag));
      o.take(std::abs(wave_feature(SkewContext(classical, metric_at(idx)), computational)));
    }
    for (std::size_t m = 0; m < 2; ++m) {
      const SkewContext mixed(DensityMatrix::maximally_mixed(d), metric_at(m));
      const SkewContext corner(basis_state(d, 0), metric_at(m));
      o.take(std::abs(particle_feature(mixed, computational)));
      o.take(std::abs(particle_feature(corner, computational) - (dd - 1.0)));
      o.take(std::abs(f_entropy(mixed.state().eigenvalues(), metric_at(m)) - (dd - 1.0)));
    }
  }
  return o;
}

// states

Real state_defect(const ComplexMatrix& m) {
  const SpectralDecomposition s = eigh(m);
  return std::max({hermiticity_defect(m), std::abs(m.trace() - Complex{1.0, 0.0}),
                   std::max<Real>(0.0, -s.values.back())});
}

Outcome states_validity(const Env& env) {
  Outcome o;
  for (std::size_t d = 2; d <= 8; ++d)
    for (std::uint64_t i = 0; i < 1000; ++i) {
      o.take(state_defect(random_pure_state(d, env.seed, lane_index(35, d * 1000 + i)).matrix()));
      o.take(state_defect(random_mixed_state(d, env.seed, lane_index(35, d * 1000 + i)).matrix()));
    }
  for (std::size_t d : {2, 3, 4})
    for (int k = 0; k <= 10; ++k) {
      o.take(state_defect(werner_state(d, k / 10.0).matrix()));
      o.take(state_defect(isotropic_state(d, k / 10.0).matrix()));
    }
  return o;
}

Outcome states_unitarity(const Env& env) {
  Outcome o;
  for (std::size_t d = 1; d <= 8; ++d)
    for (std::uint64_t i = 0; i < 100; ++i) {
      const ComplexMatrix u = haar_unitary(d, env.seed, lane_index(36, d * 100 + i));
      o.take(frobenius_norm(u.adjoint() * u - ComplexMatrix::identity(d)));
    }
  return o;
}

/// Entrywise MC of an operator-valued Haar integral against an exact value.
Real entrywise_z(const Env& env, std::size_t d, std::int64_t samples, std::uint64_t seed,
                 const std::function<ComplexMatrix(const ComplexMatrix&)>& integrand, const ComplexMatrix& exact) {
  std::vector<ComplexMatrix> draws(static_cast<std::size_t>(samples));
  for_each_index_parallel(samples, [&](std::int64_t i) {
    draws[static_cast<std::size_t>(i)] = integrand(haar_unitary(d, seed, static_cast<std::uint64_t>(i)));
  });
  Real worst = 0.0;
  std::vector<Real> values(static_cast<std::size_t>(samples));
  for (std::size_t e = 0; e < d * d; ++e)
    for (int part = 0; part < 2; ++part) {
      for (std::size_t i = 0; i < values.size(); ++i) {
        const Complex z = draws[i].data()[e];
        values[i] = part == 0 ? z.real() : z.imag();
      }
      const McEstimate mc = reduce_samples(values);
      const Complex x = exact.data()[e];
      worst = std::max(worst, z_score(mc.mean, part == 0 ? x.real() : x.imag(), mc.std_error, env.tol));
    }
  return worst;
}

Outcome states_haar_first_moment(const Env& env) {
  Outcome o;
  for (std::size_t d : {2, 3, 4}) {
    const ComplexMatrix x = random_complex_matrix(d, env.seed, lane_index(37, d));
    const ComplexMatrix exact = (x.trace() / static_cast<Real>(d)) * ComplexMatrix::identity(d);
    o.take(entrywise_z(env, d, 8192, mc_seed(env, 37, d),
                       [&](const ComplexMatrix& u) { return u * x * u.adjoint(); }, exact));
  }
  return o;
}

Outcome twirl_second_moment_mc(const Env& env) {
  Outcome o;
  std::uint64_t i = 0;
  for (std::size_t d : {2, 3, 4})
    for (int r = 0; r < 20; ++r) {
      const std::uint64_t idx = lane_index(38, i++);
      const ComplexMatrix a = random_complex_matrix(d, env.seed, 3 * idx);
      const ComplexMatrix b = random_complex_matrix(d, env.seed, 3 * idx + 1);
      const ComplexMatrix x = random_complex_matrix(d, env.seed, 3 * idx + 2);
      o.take(entrywise_z(
          env, d, 8192, mc_seed(env, 38, idx),
          [&](const ComplexMatrix& u) {
            const ComplexMatrix ud = u.adjoint();
            return ud * a * u * x * ud * b * u;
          },
          twirl_second_moment(a, b, x)));
    }
  return o;
}

Outcome twirl_identities(const Env& env) {
  Outcome o;
  const ComplexMatrix z{{1.0, 0.0}, {0.0, -1.0}};
  const ComplexMatrix id2 = ComplexMatrix::identity(2);
  o.take(max_entry_diff(twirl_second_moment(z, z, id2), id2));
  for (std::size_t d = 2; d <= 5; ++d) {
    const ComplexMatrix id = ComplexMatrix::identity(d);
    o.take(max_entry_diff(twirl_second_moment(id, id, id), id));
  }
  const ComplexMatrix x = random_complex_matrix(2, env.seed, lane_index(39, 0));
  o.take(max_entry_diff(twirl_second_moment(z, id2, x), ComplexMatrix(2)));
  return o;
}

using Tol = std::function<Real(const Tolerances&)>;

const Tol kIdentity = [](const Tolerances& t) { return t.identity; };
const Tol kTight = [](const Tolerances& t) { return t.tight; };
const Tol kExact = [](const Tolerances& t) { return t.exact; };
const Tol kRemix = [](const Tolerances& t) { return t.degenerate_remix; };
const Tol kSigmas = [](const Tolerances& t) { return t.mc_sigmas; };
const Tol kZero = [](const Tolerances&) { return 0.0; };

const std::vector<Check>& registry() {
  using K = CheckKind;
  static const std::vector<Check> checks{
      {"linalg.eigh_reconstruction", K::Deterministic, kTight, eigh_reconstruction},
      {"linalg.partial_trace_tensor", K::Deterministic, kExact, partial_trace_tensor},
      {"linalg.operator_basis_gram", K::Deterministic, kExact, operator_basis_gram},
      {"linalg.sqrt_psd_degenerate", K::Deterministic, kTight, sqrt_psd_degenerate},
      {"monotone.tilde_symmetry", K::Deterministic, kExact, tilde_symmetry},
      {"monotone.wy_closed_form", K::Deterministic, kExact, [](const Env&) { return tilde_closed_form(true); }},
      {"monotone.sld_closed_form", K::Deterministic, kExact, [](const Env&) { return tilde_closed_form(false); }},
      {"monotone.spectrum_sum_extremes", K::Deterministic, kExact, spectrum_sum_extremes},
      {"monotone.spectrum_sum_strict", K::Strict, kZero, spectrum_sum_strict},
      {"skew.dual_formula", K::Deterministic, kIdentity, skew_dual_formula},
      {"skew.convexity", K::Deterministic, kIdentity, skew_convexity},
      {"skew.commuting_zero", K::Deterministic, kIdentity, skew_commuting_zero},
      {"skew.noncommuting_positive", K::Strict, kZero, skew_noncommuting_positive},
      {"skew.degeneracy", K::Deterministic, kIdentity, skew_degeneracy},
      {"skew.unitary_input", K::Deterministic, kExact, skew_unitary_input},
      {"mub.certify", K::Deterministic, kTight, mub_certify},
      {"mub.projector_sum_identity", K::Deterministic, kIdentity, mub_projector_sum},
      {"coherence.four_way_exact", K::Deterministic, kIdentity, coherence_four_way},
      {"coherence.haar_mc", K::Statistical, kSigmas, coherence_haar_mc},
      {"coherence.unitary_invariance", K::Deterministic, kTight, coherence_unitary_invariance},
      {"coherence.bound", K::Deterministic, kIdentity, coherence_bound},
      {"coherence.bound_strict", K::Strict, kZero, coherence_bound_strict},
      {"correlation.four_way_exact", K::Deterministic, kIdentity, correlation_four_way},
      {"correlation.mc", K::Statistical, kSigmas, correlation_mc},
      {"correlation.local_unitary", K::Deterministic, kIdentity, correlation_local_unitary},
      {"correlation.wy_special", K::Deterministic, kIdentity,
       [](const Env& e) { return correlation_special(e, true); }},
      {"correlation.fisher_special", K::Deterministic, kIdentity,
       [](const Env& e) { return correlation_special(e, false); }},
      {"correlation.product_zero", K::Deterministic, kIdentity, correlation_product_zero},
      {"correlation.degenerate_remix", K::Deterministic, kRemix, correlation_degenerate_remix},
      {"correlation.basis_nonnegative", K::Deterministic, kIdentity, correlation_basis_nonnegative},
      {"prop4.identity", K::Deterministic, kIdentity, prop4_identity},
      {"prop4.worked_example", K::Deterministic, kIdentity, prop4_worked_example},
      {"prop3.bound", K::Deterministic, kIdentity, [](const Env& e) { return prop3_bound(e, false); }},
      {"prop3.pure_equality", K::Deterministic, kIdentity, [](const Env& e) { return prop3_bound(e, true); }},
      {"prop3.strict", K::Strict, kZero, prop3_strict},
      {"prop5.identity", K::Deterministic, kIdentity, prop5_identity},
      {"duality.convexity", K::Deterministic, kIdentity, duality_convexity},
      {"duality.permutation", K::Deterministic, kTight, duality_permutation},
      {"duality.wave_maximizer", K::Deterministic, kIdentity, duality_wave_maximizer},
      {"duality.bounds", K::Deterministic, kIdentity, duality_bounds},
      {"states.validity", K::Deterministic, kTight, states_validity},
      {"states.unitarity", K::Deterministic, kTight, states_unitarity},
      {"states.haar_first_moment", K::Statistical, kSigmas, states_haar_first_moment},
      {"twirl.second_moment_mc", K::Statistical, kSigmas, twirl_second_moment_mc},
      {"twirl.identities", K::Deterministic, kExact, twirl_identities},
  };
  return checks;
}

}  // namespace

bool VerifyReport::all_passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::vector<std::string> verify_check_names() {
  std::vector<std::string> names;
  for (const auto& c : registry()) names.push_back(c.name);
  return names;
}

VerifyReport run_verify(const VerifyConfig& cfg) {
  Env env{cfg.seed, cfg.samples, {}};
  if (cfg.samples < 2) throw Error(ErrorKind::InvalidSampleCount, "samples must be >= 2");
  if (cfg.tolerance) {
    if (!(*cfg.tolerance >= 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be nonnegative");
    env.tol.override_all(*cfg.tolerance);
  }
  VerifyReport report;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& check : registry()) {
    if (!check.name.starts_with(cfg.only)) continue;
    CheckResult r;
    r.name = check.name;
    r.kind = check.kind;
    r.tolerance = check.tolerance(env.tol);
    try {
      const Outcome o = check.run(env);
      r.max_residual = o.residual;
      r.cases = o.cases;
      r.note = o.note;
    } catch (const std::exception& e) {
      r.max_residual = kInf;
      r.note = e.what();
    }
    r.pass = r.max_residual <= r.tolerance;
    report.checks.push_back(std::move(r));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (report.checks.empty()) throw Error(ErrorKind::InvalidArgument, "no check matches '" + cfg.only + "'");
  return report;
}

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Deterministic: return "deterministic";
    case CheckKind::Statistical: return "statistical";
    case CheckKind::Strict: return "strict";
  }
  return "unknown";
}

nlohmann::json to_json(const CheckResult& r) {
  nlohmann::json j{{"name", r.name},
                   {"kind", to_string(r.kind)},
                   {"max_residual", std::isfinite(r.max_residual) ? nlohmann::json(r.max_residual) : nlohmann::json()},
                   {"tolerance", r.tolerance},
                   {"pass", r.pass},
                   {"cases", r.cases}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const VerifyReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& c : r.checks) {
    checks.push_back(to_json(c));
    if (!c.pass) ++failed;
  }
  return {{"checks", std::move(checks)},
          {"total", r.checks.size()},
          {"failed", failed},
          {"pass", failed == 0}};
}

}  // namespace masi
