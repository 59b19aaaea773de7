#include "masi/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "masi/coherence.hpp"
#include "masi/correlation.hpp"
#include "masi/duality.hpp"
#include "masi/errors.hpp"
#include "masi/io.hpp"

namespace masi {

using nlohmann::json;

namespace {

json mc_json(const McEstimate& mc) {
  return {{"mean", mc.mean}, {"std_error", mc.std_error}, {"samples", mc.samples}};
}

json optional_json(const std::optional<Real>& v) { return v ? json(*v) : json(); }

json state_json(const RunConfig& cfg, const MaterializedState& ms) {
  json j;
  if (cfg.state_file) {
    j["file"] = *cfg.state_file;
  } else {
    j["family"] = *cfg.family;
    j["seed"] = cfg.seed;
    if (cfg.param) j["param"] = *cfg.param;
  }
  j["dims"] = ms.dims;
  return j;
}

void require_samples(const RunConfig& cfg) {
  if (cfg.samples != 0 && cfg.samples < 2)
    throw Error(ErrorKind::InvalidSampleCount, "--samples must be 0 (skip Monte Carlo) or >= 2");
}

const MonotoneFunction& resolve_metric(const RunConfig& cfg) {
  static const MonotoneRegistry registry = MonotoneRegistry::builtin();
  return registry.get(cfg.metric);
}

std::string format_number(Real x) { return json(x).dump(); }

}  // namespace

MaterializedState resolve_state(const RunConfig& cfg, bool bipartite) {
  if (cfg.state_file && cfg.family) throw Error(ErrorKind::InvalidArgument, "use either --state or --family");
  if (cfg.dim && !cfg.dims.empty()) throw Error(ErrorKind::InvalidArgument, "use either --dim or --dims");
  if (cfg.state_file) return load_state_file(*cfg.state_file);
  if (!cfg.family) throw Error(ErrorKind::InvalidArgument, "need --state <file> or --family <name>");

  StateSpec spec;
  spec.kind = parse_state_kind(*cfg.family);
  spec.seed = cfg.seed;
  if (spec.kind == StateKind::File) throw Error(ErrorKind::InvalidArgument, "use --state for file input");
  if (is_parametric(spec.kind) && !cfg.param)
    throw Error(ErrorKind::InvalidArgument, *cfg.family + " needs --param");
  if (cfg.param) spec.param = *cfg.param;

  const bool pair_family = spec.kind == StateKind::Bell || is_parametric(spec.kind);
  if (!cfg.dims.empty()) {
    spec.dims = cfg.dims;
  } else if (cfg.dim) {
    spec.dims = pair_family ? std::vector<std::size_t>{*cfg.dim, *cfg.dim} : std::vector<std::size_t>{*cfg.dim};
  } else if (pair_family || (bipartite && spec.kind != StateKind::MaxCoherent && spec.kind != StateKind::Basis)) {
    spec.dims = {2, 2};
  } else {
    spec.dims = {2};
  }

  if (spec.kind == StateKind::Product) {
    if (spec.dims.size() != 2) throw Error(ErrorKind::InvalidSpec, "product: dims must be [d_A, d_B]");
    StateSpec a{StateKind::MixedGinibre, {spec.dims[0]}, cfg.seed, 0.0, {}, {}};
    StateSpec b{StateKind::MixedGinibre, {spec.dims[1]}, cfg.seed + 1, 0.0, {}, {}};
    spec.parts = {a, b};
  }
  return materialize(spec);
}

MeasurementBasis resolve_basis(const std::string& name, std::size_t dim, std::uint64_t seed) {
  if (name == "computational") return MeasurementBasis::computational(dim);
  const auto colon = name.find(':');
  const std::string head = name.substr(0, colon);
  const std::string tail = colon == std::string::npos ? "" : name.substr(colon + 1);
  try {
    if (head == "mub") {
      const auto family = build_mub_family(dim);
      const std::size_t t = std::stoul(tail);
      if (t >= family.bases.size()) throw Error(ErrorKind::InvalidArgument, "mub index out of range");
      return family.bases[t];
    }
    if (head == "haar") return MeasurementBasis(haar_unitary(dim, seed, std::stoull(tail)));
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "bad basis index in '" + name + "'");
  }
  if (head == "file") {
    std::ifstream in(tail);
    if (!in) throw Error(ErrorKind::FileError, "cannot open '" + tail + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw Error(ErrorKind::FileError, e.what());
    }
    MeasurementBasis basis(matrix_from_json(j));
    if (basis.dim() != dim) throw Error(ErrorKind::DimensionMismatch, "basis file dim vs state dim");
    return basis;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown basis '" + name + "'");
}

std::vector<Real> parse_grid(const std::string& grid) {
  std::vector<Real> values;
  try {
    if (grid.find(':') != std::string::npos) {
      std::vector<Real> parts;
      std::stringstream ss(grid);
      std::string item;
      while (std::getline(ss, item, ':')) parts.push_back(std::stod(item));
      if (parts.size() != 3 || !(parts[1] > 0.0) || parts[2] < parts[0])
        throw Error(ErrorKind::InvalidArgument, "grid must be start:step:stop with step > 0");
      const auto steps = static_cast<long>(std::floor((parts[2] - parts[0]) / parts[1] + 1e-9));
      for (long k = 0; k <= steps; ++k)
        values.push_back(std::round((parts[0] + static_cast<Real>(k) * parts[1]) * 1e12) / 1e12);
    } else {
      std::stringstream ss(grid);
      std::string item;
      while (std::getline(ss, item, ',')) values.push_back(std::stod(item));
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "cannot parse grid '" + grid + "'");
  }
  if (values.empty()) throw Error(ErrorKind::InvalidArgument, "empty grid");
  return values;
}

CommandOutput run_coherence(const RunConfig& cfg) {
  require_samples(cfg);
  const MonotoneFunction& metric = resolve_metric(cfg);
  const MaterializedState ms = resolve_state(cfg, false);
  const SkewContext ctx(ms.state, metric);
  const std::size_t d = ctx.dim();

  CommandOutput out;
  json& j = out.body;
  j["command"] = "coherence";
  j["metric"] = metric.name();
  j["state"] = state_json(cfg, ms);
  j["dim"] = d;
  j["closed_form"] = average_coherence_closed(ctx);
  if (mub_supported(d)) {
    j["mub_average"] = average_coherence_mub(ctx, build_mub_family(d));
  } else {
    j["mub_average"] = nullptr;
    out.partial = true;
  }
  if (d >= 2 && d <= 8) {
    j["operator_basis_average"] = average_coherence_operator_basis(ctx);
  } else {
    j["operator_basis_average"] = nullptr;
    out.partial = true;
  }
  j["haar_mc"] = cfg.samples > 0 ? mc_json(average_coherence_haar_mc(ctx, cfg.samples, cfg.seed)) : json();
  if (cfg.basis) {
    const MeasurementBasis basis = resolve_basis(*cfg.basis, d, cfg.seed);
    j["basis"] = {{"name", *cfg.basis}, {"coherence", coherence_wrt_basis(ctx, basis)}};
  }
  return out;
}

CommandOutput run_correlation(const RunConfig& cfg) {
  require_samples(cfg);
  const MonotoneFunction& metric = resolve_metric(cfg);
  const MaterializedState ms = resolve_state(cfg, true);
  if (!ms.bipartite()) throw Error(ErrorKind::InvalidArgument, "correlation needs a bipartite state (dims [d_A, d_B])");
  const BipartiteState bp(ms.state, ms.dims[0], ms.dims[1]);
  const CorrelationContext cc(bp, metric);
  const std::size_t da = bp.dim_a();

  CommandOutput out;
  json& j = out.body;
  j["command"] = "correlation";
  j["metric"] = metric.name();
  j["state"] = state_json(cfg, ms);
  j["dims"] = {bp.dim_a(), bp.dim_b()};
  j["closed"] = average_correlation_closed(bp, metric);
  if (mub_supported(da)) {
    j["mub"] = average_correlation_mub(cc, build_mub_family(da));
  } else {
    j["mub"] = nullptr;
    out.partial = true;
  }
  if (da >= 2 && da <= 8) {
    j["ob"] = average_correlation_operator_basis(cc);
  } else {
    j["ob"] = nullptr;
    out.partial = true;
  }
  j["twirl_exact"] = da >= 2 ? json(average_correlation_twirl_exact(cc)) : json();
  if (cfg.samples > 0) {
    j["haar_mc"] = mc_json(average_correlation_haar_mc(cc, cfg.samples, cfg.seed));
    j["twirl_mc"] = mc_json(average_correlation_twirl_mc(cc, cfg.samples, cfg.seed));
  } else {
    j["haar_mc"] = nullptr;
    j["twirl_mc"] = nullptr;
  }
  if (metric.name() == "wy") {
    j["special"] = {{"form", "wy"}, {"value", average_correlation_wy_special(bp)}};
  } else if (metric.name() == "sld") {
    j["special"] = {{"form", "fisher"}, {"value", average_correlation_fisher_special(bp)}};
  } else {
    j["special"] = nullptr;
  }
  if (cfg.basis) {
    const MeasurementBasis basis = resolve_basis(*cfg.basis, da, cfg.seed);
    j["basis"] = {{"name", *cfg.basis},
                  {"local_coherence", local_coherence(cc, basis)},
                  {"correlation", correlation_wrt_basis(cc, basis)}};
  }
  return out;
}

CommandOutput run_duality(const RunConfig& cfg) {
  const MonotoneFunction& metric = resolve_metric(cfg);
  const MaterializedState ms = resolve_state(cfg, false);
  const std::string basis_name = cfg.basis.value_or("computational");

  CommandOutput out;
  json& j = out.body;
  j["command"] = "duality";
  j["metric"] = metric.name();
  j["state"] = state_json(cfg, ms);
  j["basis"] = basis_name;

  std::optional<BipartiteState> bp;
  if (ms.bipartite()) bp.emplace(ms.state, ms.dims[0], ms.dims[1]);
  const DensityMatrix& system = bp ? bp->reduced_a() : ms.state;
  const MeasurementBasis basis = resolve_basis(basis_name, system.dim(), cfg.seed);
  const SkewContext ctx(system, metric);
  const DualityReport r = complementarity_report(ctx, basis);

  j["system"] = bp ? "A" : "full";
  j["dim"] = r.dim;
  j["wave"] = r.wave;
  j["particle"] = r.particle;
  j["f_entropy"] = r.f_entropy;
  j["residual_prop4"] = r.residual_prop4;
  j["prop3_gap"] = static_cast<Real>(r.dim - 1) - (r.wave + r.particle);
  if (bp && bp->state().eigenvalues().front() >= 1.0 - kPureTolerance) {
    j["residual_prop5"] = bipartite_complementarity_check(*bp, metric, basis);
  } else {
    j["residual_prop5"] = nullptr;
  }
  return out;
}

CommandOutput run_mub_dump(const RunConfig& cfg) {
  const std::size_t d = cfg.dim ? *cfg.dim : (cfg.dims.size() == 1 ? cfg.dims[0] : 0);
  if (d == 0) throw Error(ErrorKind::InvalidArgument, "mub-dump needs --dim");
  CommandOutput out;
  json& j = out.body;
  j["command"] = "mub-dump";
  j["dim"] = d;
  if (!mub_supported(d)) {
    j["bases"] = nullptr;
    out.partial = true;
    return out;
  }
  const MubFamily family = build_mub_family(d);
  json bases = json::array();
  for (const auto& b : family.bases) bases.push_back(matrix_to_json(b.columns()));
  j["bases"] = std::move(bases);
  const MubCertificate c = certify_mub(family);
  j["certificate"] = {{"max_orthonormality_error", c.max_orthonormality_error},
                      {"max_unbiasedness_error", c.max_unbiasedness_error},
                      {"complete", c.complete}};
  return out;
}

std::vector<SweepRow> run_sweep(const RunConfig& cfg) {
  if (cfg.state_file || !cfg.family) throw Error(ErrorKind::InvalidArgument, "sweep needs --family werner|isotropic");
  const StateKind kind = parse_state_kind(*cfg.family);
  if (!is_parametric(kind)) throw Error(ErrorKind::InvalidArgument, "sweep needs a parametric family, got " + *cfg.family);
  const MonotoneFunction& metric = resolve_metric(cfg);
  const std::vector<Real> grid = parse_grid(cfg.grid);

  std::vector<SweepRow> rows(grid.size());
  for_each_index_parallel(static_cast<std::int64_t>(grid.size()), [&](std::int64_t i) {
    RunConfig row_cfg = cfg;
    row_cfg.param = grid[static_cast<std::size_t>(i)];
    const MaterializedState ms = resolve_state(row_cfg, true);
    const BipartiteState bp(ms.state, ms.dims[0], ms.dims[1]);
    const MeasurementBasis basis = resolve_basis(cfg.basis.value_or("computational"), bp.dim_a(), cfg.seed);
    const DualityReport r = complementarity_report(SkewContext(bp.reduced_a(), metric), basis);
    SweepRow& row = rows[static_cast<std::size_t>(i)];
    row.param = *row_cfg.param;
    row.metric = metric.name();
    row.q_closed = average_correlation_closed(bp, metric);
    row.wave = r.wave;
    row.particle = r.particle;
    row.f_entropy = r.f_entropy;
    if (bp.state().eigenvalues().front() >= 1.0 - kPureTolerance)
      row.residual_prop5 = bipartite_complementarity_check(bp, metric, basis);
  });
  return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "param,metric,Q_closed,W,P,S_f,residual_prop5\n";
  for (const auto& r : rows) {
    os << format_number(r.param) << ',' << r.metric << ',' << format_number(r.q_closed) << ','
       << format_number(r.wave) << ',' << format_number(r.particle) << ',' << format_number(r.f_entropy) << ','
       << (r.residual_prop5 ? format_number(*r.residual_prop5) : "") << '\n';
  }
  return os.str();
}

json sweep_json(const std::vector<SweepRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows)
    arr.push_back({{"param", r.param},
                   {"metric", r.metric},
                   {"Q_closed", r.q_closed},
                   {"W", r.wave},
                   {"P", r.particle},
                   {"S_f", r.f_entropy},
                   {"residual_prop5", optional_json(r.residual_prop5)}});
  return {{"command", "sweep"}, {"rows", std::move(arr)}};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Metric-adjusted skew information: coherence, correlation and duality checks", "masi"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::optional<std::string> out_format;

  auto add_state = [&](CLI::App* sub) {
    sub->add_option("--metric", cfg.metric, "Monotone metric (wy, sld)");
    sub->add_option("--state", cfg.state_file, "State JSON file");
    sub->add_option("--family", cfg.family,
                    "State family: pure_haar, mixed_ginibre, bell, werner, isotropic, max_coherent, basis, product");
    sub->add_option("--param", cfg.param, "Family parameter (werner p, isotropic F, basis index)");
    sub->add_option("--dim", cfg.dim, "Dimension");
    sub->add_option("--dims", cfg.dims, "Subsystem dimensions d_A,d_B")->delimiter(',')->expected(1, 2);
    sub->add_option("--seed", cfg.seed, "Random seed");
    sub->add_option("--basis", cfg.basis, "computational | mub:<t> | haar:<i> | file:<path>");
  };
  auto add_samples = [&](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "Monte Carlo samples, 0 to skip");
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", out_format, "Output format: json or csv"); };

  CLI::App* coherence = app.add_subcommand("coherence", "Average coherence by every route");
  add_state(coherence);
  add_samples(coherence);
  add_out(coherence);
  CLI::App* correlation = app.add_subcommand("correlation", "Average bipartite correlation by every route");
  add_state(correlation);
  add_samples(correlation);
  add_out(correlation);
  CLI::App* duality = app.add_subcommand("duality", "Wave, particle and f-entropy report");
  add_state(duality);
  add_out(duality);
  CLI::App* sweep = app.add_subcommand("sweep", "Werner or isotropic parameter sweep (CSV)");
  add_state(sweep);
  add_out(sweep);
  sweep->add_option("--grid", cfg.grid, "start:step:stop or comma list");
  CLI::App* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--seed", cfg.seed, "Random seed");
  add_samples(verify);
  add_out(verify);
  verify->add_option("--tol", cfg.tol, "Override every deterministic tolerance");
  verify->add_option("--only", cfg.only, "Run checks whose name starts with this prefix");
  CLI::App* mub_dump = app.add_subcommand("mub-dump", "Print the MUB family for a dimension");
  mub_dump->add_option("--dim", cfg.dim, "Dimension")->required();
  add_out(mub_dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  for (CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();
  const std::string format = out_format.value_or(cfg.command == "sweep" ? "csv" : "json");
  try {
    if (format != "json" && format != "csv") throw Error(ErrorKind::InvalidArgument, "--out must be json or csv");
    if (format == "csv" && cfg.command != "sweep")
      throw Error(ErrorKind::InvalidArgument, "csv output is only available for sweep");
    cfg.out = format;

    if (cfg.command == "sweep") {
      const auto rows = run_sweep(cfg);
      if (format == "csv") {
        out << sweep_csv(rows);
      } else {
        out << sweep_json(rows).dump(2) << '\n';
      }
      return kExitOk;
    }
    if (cfg.command == "verify") {
      VerifyConfig vc;
      vc.seed = cfg.seed;
      vc.samples = cfg.samples;
      vc.tolerance = cfg.tol;
      vc.only = cfg.only;
      const VerifyReport report = run_verify(vc);
      out << to_json(report).dump(2) << '\n';
      err << report.checks.size() << " checks in " << report.seconds << " s\n";
      return report.all_passed() ? kExitOk : kExitVerifyFailed;
    }
    CommandOutput result;
    if (cfg.command == "coherence") result = run_coherence(cfg);
    if (cfg.command == "correlation") result = run_correlation(cfg);
    if (cfg.command == "duality") result = run_duality(cfg);
    if (cfg.command == "mub-dump") result = run_mub_dump(cfg);
    out << result.body.dump(2) << '\n';
    return result.partial ? kExitPartial : kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

}  // namespace masi
