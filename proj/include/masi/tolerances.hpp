#pragma once

#include "masi/matrix.hpp"

namespace masi {

/// Default acceptance thresholds for the verification suite. A global
/// override replaces every deterministic threshold at once; statistical
/// checks keep their σ multiple.
struct Tolerances {
  Real identity = 1e-9;          // scheme agreement, duality identities, special forms
  Real tight = 1e-10;            // reconstruction, invariances, MUB certificates
  Real exact = 1e-12;            // kernel closed forms, partial trace, Gram matrix
  Real degenerate_remix = 1e-8;  // closed form under re-mixing of degenerate blocks
  Real mc_sigmas = 4.0;          // |mean − exact| ≤ mc_sigmas · std_error
  Real mc_floor = 1e-12;         // absolute slack for zero-variance integrands

  void override_all(Real value) noexcept {
    identity = tight = exact = degenerate_remix = value;
  }
};

}  // namespace masi
