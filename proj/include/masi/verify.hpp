#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "masi/tolerances.hpp"

namespace masi {

enum class CheckKind {
  Deterministic,  // residual against an overridable tolerance
  Statistical,    // residual is a z-score against mc_sigmas
  Strict,         // residual is a margin violation; tolerance fixed at 0
};

struct CheckResult {
  std::string name;
  CheckKind kind = CheckKind::Deterministic;
  Real max_residual = 0.0;
  Real tolerance = 0.0;
  bool pass = false;
  std::size_t cases = 0;
  std::string note;
};

struct VerifyConfig {
  std::uint64_t seed = 0;
  std::int64_t samples = 4096;
  std::optional<Real> tolerance;  // replaces every deterministic tolerance
  std::string only;               // name prefix filter, empty = all
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  bool all_passed() const noexcept;
};

/// Names of every registered check, in execution order.
std::vector<std::string> verify_check_names();

/// Runs every check whose name starts with cfg.only. Throws InvalidArgument
/// when the filter selects nothing.
VerifyReport run_verify(const VerifyConfig& cfg);

nlohmann::json to_json(const CheckResult& r);
nlohmann::json to_json(const VerifyReport& r);
std::string to_string(CheckKind kind);

}  // namespace masi
