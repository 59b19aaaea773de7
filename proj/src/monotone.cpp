#include "masi/monotone.hpp"

#include <cmath>
#include <sstream>

#include "masi/errors.hpp"

namespace masi {

MonotoneFunction::MonotoneFunction(std::string name, std::function<Real(Real)> f, Real f0)
    : name_(std::move(name)), f_(std::move(f)), f0_(f0) {
  if (!f_) throw Error(ErrorKind::DomainError, name_ + ": empty function");
  if (!(f0_ > 0.0)) throw Error(ErrorKind::DomainError, name_ + ": f(0) must be > 0 (regular metric)");
  if (std::abs(f_(1.0) - 1.0) > 1e-12) throw Error(ErrorKind::DomainError, name_ + ": f(1) != 1");
  for (Real t : {0.1, 0.5, 2.0, 10.0}) {
    if (std::abs(f_(t) - t * f_(1.0 / t)) > 1e-10) {
      std::ostringstream os;
      os << name_ << ": symmetry f(t) = t f(1/t) fails at t = " << t;
      throw Error(ErrorKind::DomainError, os.str());
    }
  }
  if (std::abs(f_(1e-12) - f0_) > 1e-5) {
    throw Error(ErrorKind::DomainError, name_ + ": supplied f0 disagrees with f(1e-12)");
  }
}

MonotoneFunction MonotoneFunction::wigner_yanase() {
  return {"wy",
          [](Real t) {
            const Real s = 1.0 + std::sqrt(t);
            return 0.25 * s * s;
          },
          0.25};
}

MonotoneFunction MonotoneFunction::sld() {
  return {"sld", [](Real t) { return 0.5 * (1.0 + t); }, 0.5};
}

MonotoneRegistry::MonotoneRegistry(std::vector<MonotoneFunction> functions)
    : functions_(std::move(functions)) {
  for (std::size_t i = 0; i < functions_.size(); ++i)
    for (std::size_t j = i + 1; j < functions_.size(); ++j)
      if (functions_[i].name() == functions_[j].name())
        throw Error(ErrorKind::InvalidArgument, "duplicate monotone function " + functions_[i].name());
}

MonotoneRegistry MonotoneRegistry::builtin() {
  return MonotoneRegistry({MonotoneFunction::wigner_yanase(), MonotoneFunction::sld()});
}

const MonotoneFunction& MonotoneRegistry::get(std::string_view name) const {
  for (const auto& f : functions_)
    if (f.name() == name) return f;
  throw Error(ErrorKind::InvalidArgument, "unknown metric '" + std::string(name) + "'");
}

bool MonotoneRegistry::contains(std::string_view name) const noexcept {
  for (const auto& f : functions_)
    if (f.name() == name) return true;
  return false;
}

std::vector<std::string> MonotoneRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& f : functions_) out.push_back(f.name());
  return out;
}

Real c_f(const MonotoneFunction& f, Real x, Real y) {
  if (!(x > 0.0) || !(y > 0.0)) throw Error(ErrorKind::DomainError, "c_f requires x, y > 0");
  return 1.0 / (y * f(x / y));
}

Real tilde_c(const MonotoneFunction& f, Real x, Real y) {
  if (x < 0.0 || y < 0.0 || std::isnan(x) || std::isnan(y))
    throw Error(ErrorKind::DomainError, "tilde_c requires x, y >= 0");
  if (x == 0.0 || y == 0.0) return 0.0;
  if (x == y) return x;
  const Real diff = x - y;
  return 0.5 * ((x + y) - diff * diff * c_f(f, x, y) * f.f0());
}

Real spectrum_tilde_sum(const MonotoneFunction& f, std::span<const Real> spectrum) {
  Real total = 0.0;
  for (Real p : spectrum) {
    if (p < 0.0 || std::isnan(p)) throw Error(ErrorKind::InvalidSpectrum, "negative spectrum entry");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw Error(ErrorKind::InvalidSpectrum, "spectrum does not sum to 1");
  Real sum = 0.0;
  for (Real pk : spectrum)
    for (Real pl : spectrum) sum += tilde_c(f, pk, pl);
  return sum;
}

}  // namespace masi
