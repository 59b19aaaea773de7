#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "masi/matrix.hpp"

namespace masi {

/// A symmetric normalized operator monotone function f with its boundary
/// value f0 = lim_{t→0+} f(t). Only regular functions (f0 > 0) are accepted.
class MonotoneFunction {
 public:
  /// Validates f(1) = 1, f(t) = t f(1/t) at sample points, f0 > 0 and
  /// |f(1e-12) − f0| ≤ 1e-5. Throws DomainError otherwise.
  MonotoneFunction(std::string name, std::function<Real(Real)> f, Real f0);

  static MonotoneFunction wigner_yanase();  // f(t) = (1 + √t)²/4
  static MonotoneFunction sld();            // f(t) = (1 + t)/2

  const std::string& name() const noexcept { return name_; }
  Real f0() const noexcept { return f0_; }
  Real operator()(Real t) const { return f_(t); }

 private:
  std::string name_;
  std::function<Real(Real)> f_;
  Real f0_;
};

/// Immutable name → function table. Built-ins are "wy" and "sld".
class MonotoneRegistry {
 public:
  explicit MonotoneRegistry(std::vector<MonotoneFunction> functions);
  static MonotoneRegistry builtin();

  /// Throws InvalidArgument for unknown names.
  const MonotoneFunction& get(std::string_view name) const;
  bool contains(std::string_view name) const noexcept;
  std::vector<std::string> names() const;

 private:
  std::vector<MonotoneFunction> functions_;
};

/// Morozova–Chentsov function c_f(x, y) = 1/(y f(x/y)), x, y > 0.
Real c_f(const MonotoneFunction& f, Real x, Real y);

/// c̃_f(x, y) = ½[(x + y) − (x − y)² c_f(x, y) f(0)], extended by its limit
/// c̃_f(x, 0) = c̃_f(0, y) = 0 for regular metrics.
Real tilde_c(const MonotoneFunction& f, Real x, Real y);

/// Tr[c̃_f(L_ρ, R_ρ)] = Σ_{k,l} c̃_f(p_k, p_l) over a probability spectrum.
/// Throws InvalidSpectrum on negative entries or |Σp − 1| > 1e-9.
Real spectrum_tilde_sum(const MonotoneFunction& f, std::span<const Real> spectrum);

}  // namespace masi
