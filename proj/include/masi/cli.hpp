#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "masi/mub.hpp"
#include "masi/states.hpp"
#include "masi/verify.hpp"

namespace masi {

enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitConfig = 2, kExitPartial = 3 };

struct RunConfig {
  std::string command;
  std::string metric = "wy";
  std::optional<std::string> state_file;
  std::optional<std::string> family;
  std::optional<Real> param;
  std::optional<std::size_t> dim;
  std::vector<std::size_t> dims;
  std::int64_t samples = 4096;  // 0 skips Monte Carlo routes
  std::uint64_t seed = 0;
  std::string out = "json";
  std::optional<Real> tol;
  std::string only;
  std::optional<std::string> basis;  // computational | mub:<t> | haar:<i> | file:<path>
  std::string grid = "0:0.1:1";      // start:step:stop or a comma list
};

/// A JSON body plus a flag set when some route was unavailable.
struct CommandOutput {
  nlohmann::json body;
  bool partial = false;
};

/// State from --state or --family/--param/--dim/--dims. A family without
/// dims defaults to [2] for single-system commands and [2, 2] otherwise.
MaterializedState resolve_state(const RunConfig& cfg, bool bipartite);

MeasurementBasis resolve_basis(const std::string& name, std::size_t dim, std::uint64_t seed);

/// Grid values for "start:step:stop" (inclusive) or "a,b,c".
std::vector<Real> parse_grid(const std::string& grid);

CommandOutput run_coherence(const RunConfig& cfg);
CommandOutput run_correlation(const RunConfig& cfg);
CommandOutput run_duality(const RunConfig& cfg);
CommandOutput run_mub_dump(const RunConfig& cfg);

struct SweepRow {
  Real param = 0.0;
  std::string metric;
  Real q_closed = 0.0;
  Real wave = 0.0;
  Real particle = 0.0;
  Real f_entropy = 0.0;
  std::optional<Real> residual_prop5;
};

std::vector<SweepRow> run_sweep(const RunConfig& cfg);
std::string sweep_csv(const std::vector<SweepRow>& rows);
nlohmann::json sweep_json(const std::vector<SweepRow>& rows);

/// Parses argv, dispatches, writes the report to `out` and diagnostics to
/// `err`, and returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace masi
