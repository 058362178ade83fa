#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <random>
#include <string>
#include <vector>

#include "corbit/batch.hpp"
#include "corbit/conformal.hpp"
#include "corbit/galilei.hpp"
#include "corbit/io.hpp"
#include "corbit/lie_poisson.hpp"
#include "corbit/orbit.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace corbit;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct SourceOptions {
  std::string builtin_name;
  std::string file_path;
};

void add_source_flags(CLI::App* cmd, SourceOptions& src) {
  auto* b = cmd->add_option("--builtin", src.builtin_name,
                            "Built-in algebra name");
  auto* f = cmd->add_option("--file", src.file_path, "Algebra file path");
  b->excludes(f);
}

// Returns the algebra plus a display label (builtin name or file path).
std::pair<LieAlgebra, std::string> resolve_algebra(const SourceOptions& src) {
  if (!src.builtin_name.empty())
    return {builtin(src.builtin_name), src.builtin_name};
  if (!src.file_path.empty())
    return {load_algebra_file(src.file_path), src.file_path};
  throw ConfigError("one of --builtin or --file is required");
}

Vec to_vec(const std::vector<double>& values, int expected,
           const std::string& what) {
  if (static_cast<int>(values.size()) != expected)
    throw ConfigError(what + ": expected " + std::to_string(expected) +
                      " comma-separated values, got " +
                      std::to_string(values.size()));
  Vec v(expected);
  for (int i = 0; i < expected; ++i) v[i] = values[i];
  return v;
}

std::string drift_str(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", x);
  return buf;
}

json table_json(const Table& table, const json& metadata) {
  json j;
  j["metadata"] = metadata;
  j["columns"] = table.columns;
  j["rows"] = json::array();
  for (const auto& row : table.rows) j["rows"].push_back(row);
  return j;
}

void write_table(const std::string& path, const std::string& format,
                 const Table& table, const json& metadata) {
  if (format == "csv")
    write_text_file(path, to_csv(table));
  else
    write_text_file(path, table_json(table, metadata).dump(2) + "\n");
}

// Output path for sweep member k: stem_007.ext.
std::string indexed_path(const std::string& path, int k) {
  char suffix[16];
  std::snprintf(suffix, sizeof(suffix), "_%03d", k);
  const auto dot = path.rfind('.');
  const auto slash = path.find_last_of('/');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

// ---------------------------------------------------------------- check ----

struct CheckOptions {
  SourceOptions src;
  double tol = 1e-12;
};

int run_check(const CheckOptions& opt) {
  const auto [algebra, label] = resolve_algebra(opt.src);
  const ValidationReport report = algebra.validate(opt.tol);
  std::printf("algebra: %s (dim %d)\n", label.c_str(), algebra.dim());
  std::printf("antisymmetry max residual: %s\n",
              drift_str(report.max_antisymmetry).c_str());
  std::printf("jacobi max residual: %s\n", drift_str(report.max_jacobi).c_str());
  for (std::size_t k = 0; k < std::min<std::size_t>(report.violations.size(), 3);
       ++k) {
    const auto& v = report.violations[k];
    std::printf("violation: %s at (%d, %d, %d, %d) residual %s\n",
                v.identity.c_str(), v.i, v.j, v.k, v.l,
                drift_str(v.residual).c_str());
  }
  std::printf("%s (tol %s)\n", report.pass ? "PASS" : "FAIL",
              drift_str(opt.tol).c_str());
  return report.pass ? kExitOk : kExitCheckFailed;
}

// ----------------------------------------------------------------- flow ----

struct FlowOptions {
  SourceOptions src;
  std::vector<double> alpha;
  std::vector<double> init;
  double t_final = 1.0;
  int steps = 1000;
  std::string method = "exact";
  std::string out;
  std::string format = "csv";
  double tol_casimir = 1e-10;
  int sweep = 0;
  unsigned long long seed = 12345;
};

Table flow_table(const LieAlgebra& algebra, const Trajectory& traj,
                 const std::vector<Observable>& casimirs) {
  Table table = trajectory_table(traj, algebra.names());
  for (const auto& c : casimirs) {
    table.columns.push_back("casimir_" + c.name);
    for (std::size_t r = 0; r < table.rows.size(); ++r)
      table.rows[r].push_back(c.value(traj.states[r].coeffs));
  }
  return table;
}

int run_flow(const FlowOptions& opt) {
  const auto [algebra, label] = resolve_algebra(opt.src);
  const int n = algebra.dim();
  const AlgebraVector alpha{to_vec(opt.alpha, n, "--alpha")};
  const DualVector init{to_vec(opt.init, n, "--init")};
  const FlowMethod method =
      opt.method == "exact" ? FlowMethod::kExact : FlowMethod::kRk4;
  const auto casimirs = builtin_casimirs(label);

  std::vector<DualVector> inits;
  if (opt.sweep > 0) {
    if (opt.out.empty())
      throw ConfigError("--sweep requires --out for the per-state files");
    // Sample the orbit of the requested point: random group displacements
    // keep every member on the same casimir level set.
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> dist(-0.5, 0.5);
    inits.reserve(opt.sweep);
    for (int k = 0; k < opt.sweep; ++k) {
      Vec xi(n);
      for (int i = 0; i < n; ++i) xi[i] = dist(rng);
      inits.push_back(coadjoint_exp(algebra, AlgebraVector{xi}, 1.0, init));
    }
  } else {
    inits.push_back(init);
  }

  const std::vector<Trajectory> trajs = flow_trajectory_batch(
      algebra, alpha, inits, opt.t_final, opt.steps, method);

  std::printf("algebra: %s (dim %d)\n", label.c_str(), n);
  std::printf("method: %s  t: %s  steps: %d  states: %d\n", opt.method.c_str(),
              drift_str(opt.t_final).c_str(), opt.steps,
              static_cast<int>(inits.size()));

  bool pass = true;
  for (const auto& c : casimirs) {
    const double drift = max_observable_drift(c, trajs);
    const bool ok = drift <= opt.tol_casimir;
    pass = pass && ok;
    std::printf("casimir %s: drift %s (tol %s) %s\n", c.name.c_str(),
                drift_str(drift).c_str(), drift_str(opt.tol_casimir).c_str(),
                ok ? "ok" : "FAIL");
  }

  if (method == FlowMethod::kRk4) {
    double worst = 0.0;
    for (std::size_t k = 0; k < inits.size(); ++k) {
      const Vec exact =
          flow_exact(algebra, alpha, inits[k], opt.t_final).coeffs;
      worst = std::max(worst, (trajs[k].states.back().coeffs - exact)
                                  .lpNorm<Eigen::Infinity>());
    }
    std::printf("endpoint vs exact: %s\n", drift_str(worst).c_str());
  }

  if (!opt.out.empty()) {
    json metadata;
    metadata["algebra"] = label;
    metadata["alpha"] = opt.alpha;
    metadata["method"] = opt.method;
    metadata["steps"] = opt.steps;
    metadata["t_final"] = opt.t_final;
    if (opt.sweep > 0) {
      for (std::size_t k = 0; k < trajs.size(); ++k) {
        metadata["sweep_index"] = k;
        write_table(indexed_path(opt.out, static_cast<int>(k)), opt.format,
                    flow_table(algebra, trajs[k], casimirs), metadata);
      }
      std::printf("wrote: %d files at %s\n", static_cast<int>(trajs.size()),
                  indexed_path(opt.out, 0).c_str());
    } else {
      write_table(opt.out, opt.format, flow_table(algebra, trajs[0], casimirs),
                  metadata);
      std::printf("wrote: %s\n", opt.out.c_str());
    }
  }
  return pass ? kExitOk : kExitCheckFailed;
}

// ---------------------------------------------------------------- orbit ----

struct OrbitOptions {
  SourceOptions src;
  std::vector<double> init;
  double tol = 1e-10;
  std::string out;
};

int run_orbit(const OrbitOptions& opt) {
  const auto [algebra, label] = resolve_algebra(opt.src);
  const DualVector zeta{to_vec(opt.init, algebra.dim(), "--init")};
  const OrbitReport report = orbit_report(algebra, label, zeta, opt.tol);

  json j;
  j["algebra"] = label;
  j["point"] = opt.init;
  j["dim"] = report.algebra_dim;
  j["stabilizer_dim"] = report.stabilizer_dim;
  j["orbit_dim"] = report.orbit_dim;
  j["singular_values"] = report.singular_values;
  auto matrix_json = [](const Mat& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
      rows.push_back(row);
    }
    return rows;
  };
  // Basis vectors listed one per entry (columns of the stored matrices).
  j["stabilizer_basis"] = matrix_json(report.stabilizer_basis.transpose());
  j["complement_basis"] = matrix_json(report.complement_basis.transpose());
  j["kirillov_form"] = matrix_json(report.kirillov_form);
  json cas = json::object();
  for (const auto& [name, value] : report.casimir_values) cas[name] = value;
  j["casimirs"] = cas;

  const std::string text = j.dump(2) + "\n";
  if (opt.out.empty())
    std::fputs(text.c_str(), stdout);
  else {
    write_text_file(opt.out, text);
    std::printf("wrote: %s\n", opt.out.c_str());
  }
  return kExitOk;
}

// -------------------------------------------------------------- example ----

struct ConformalOptions {
  double lambda = 1.0;
  double c1 = 0.0;
  double c2 = 0.0;
  int steps = 20000;
  std::string out;
  std::string format = "csv";
  double tol_casimir = 1e-10;
  double tol_energy = 1e-10;
  double tol_curve = 1e-8;
};

int run_example_conformal(const ConformalOptions& opt) {
  const LieAlgebra algebra = builtin("so21_m");
  const Observable casimir = builtin_casimirs("so21_m").front();
  const double tau_a = -M_PI + 0.2, tau_b = M_PI - 0.2;

  // Closed-form oracle: equations-of-motion residual by differencing the
  // curve in its parameter.
  double curve_residual = 0.0;
  const double h = 1e-5;
  for (double tau = tau_a; tau <= tau_b; tau += 0.01) {
    const ChartCurvePoint p = closed_form_curve(opt.c1, opt.c2, tau);
    const ChartCurvePoint a = closed_form_curve(opt.c1, opt.c2, tau - h);
    const ChartCurvePoint b = closed_form_curve(opt.c1, opt.c2, tau + h);
    const double dt = (b.t - a.t) / (2.0 * h);
    const auto field = chart_eom({p.w1, p.w2});
    curve_residual =
        std::max({curve_residual,
                  std::abs((b.w1 - a.w1) / (2.0 * h) / dt - field[0]),
                  std::abs((b.w2 - a.w2) / (2.0 * h) / dt - field[1])});
  }

  // Numerical trajectory between the curve endpoints.
  const ChartCurvePoint start = closed_form_curve(opt.c1, opt.c2, tau_a);
  const ChartCurvePoint end = closed_form_curve(opt.c1, opt.c2, tau_b);
  const ChartTrajectory traj =
      chart_flow_rk4({start.w1, start.w2}, start.t, end.t, opt.steps);

  double casimir_drift = 0.0, energy_drift = 0.0;
  const double e0 = chart_hamiltonian(traj.points.front(), opt.lambda);
  const double c0 = opt.lambda * opt.lambda;
  Table table;
  table.columns = {"t", "w1", "w2", "x", "p", "energy"};
  for (std::size_t k = 0; k < traj.points.size(); ++k) {
    const CosetCoords& w = traj.points[k];
    const double energy = chart_hamiltonian(w, opt.lambda);
    casimir_drift = std::max(
        casimir_drift,
        std::abs(casimir.value(embed_chart(w, opt.lambda).coeffs) - c0));
    energy_drift = std::max(energy_drift, std::abs(energy - e0));
    const CanonicalCoords c = chart_to_canonical(w, opt.lambda);
    table.rows.push_back({traj.times[k], w.w1, w.w2, c.x, c.p, energy});
  }
  const double endpoint_err = std::max(
      std::abs(traj.points.back().w1 - end.w1),
      std::abs(traj.points.back().w2 - end.w2));

  struct Check {
    const char* name;
    double value;
    double tol;
  } checks[] = {
      {"casimir_drift", casimir_drift, opt.tol_casimir},
      {"energy_drift", energy_drift, opt.tol_energy},
      {"closed_form_residual", curve_residual, opt.tol_curve},
      {"rk4_vs_closed_form", endpoint_err, opt.tol_curve},
  };
  bool pass = true;
  json report;
  for (const auto& c : checks) {
    const bool ok = c.value <= c.tol;
    pass = pass && ok;
    std::printf("check %s: %s (tol %s) %s\n", c.name,
                drift_str(c.value).c_str(), drift_str(c.tol).c_str(),
                ok ? "ok" : "FAIL");
    report[c.name] = c.value;
  }

  if (!opt.out.empty()) {
    json metadata;
    metadata["example"] = "conformal";
    metadata["lambda"] = opt.lambda;
    metadata["c1"] = opt.c1;
    metadata["c2"] = opt.c2;
    metadata["steps"] = opt.steps;
    metadata["report"] = report;
    write_table(opt.out, opt.format, table, metadata);
    std::printf("wrote: %s\n", opt.out.c_str());
  }
  return pass ? kExitOk : kExitCheckFailed;
}

struct GalileiOptions {
  double lambda = 1.0;
  std::vector<double> init;
  double t_final = 1.0;
  int steps = 10000;
  bool project = false;
  std::string out;
  std::string format = "csv";
  double tol_constraint = 1e-8;
  double tol_endpoint = 1e-7;
  double tol_energy = 1e-10;
};

int run_example_galilei(const GalileiOptions& opt) {
  const LieAlgebra algebra = builtin("galilei_n2_d3");
  ReducedState start = base_state(opt.lambda);
  if (!opt.init.empty()) {
    const Vec u = to_vec(opt.init, 12, "--init");
    start = unpack_state(Vec12(u), opt.lambda);
    validate_state(start);
  } else {
    // Give the base point some motion in the fiber directions; the third
    // column feeds eta, so the energy is not trivially zero.
    Mat3 z;
    z << 0.3, 0.0, 0.4, 0.0, -0.2, -0.25, 0.1, 0.0, 0.15;
    start = abelian_action(start, z);
  }

  const ReducedTrajectory traj =
      reduced_flow_rk4(start, opt.t_final, opt.steps, opt.project);

  double constraint_drift = 0.0, energy_drift = 0.0;
  const double e0 = reduced_hamiltonian(start);
  for (const auto& state : traj.states) {
    constraint_drift = std::max(constraint_drift, constraint_residual(state));
    energy_drift =
        std::max(energy_drift, std::abs(reduced_hamiltonian(state) - e0));
  }

  // Independent full-space route for the endpoint.
  Vec alpha_full = Vec::Zero(15);
  alpha_full[noncompact_index(0)] = 1.0;
  alpha_full[noncompact_index(1)] = -1.0;
  const Vec full_end = flow_exact(algebra, AlgebraVector{alpha_full},
                                  embed_reduced(start), opt.t_final)
                           .coeffs;
  const double endpoint_err =
      (embed_reduced(traj.states.back()).coeffs - full_end)
          .lpNorm<Eigen::Infinity>();

  struct Check {
    const char* name;
    double value;
    double tol;
  } checks[] = {
      {"constraint_drift", constraint_drift, opt.tol_constraint},
      {"energy_drift", energy_drift, opt.tol_energy},
      {"full_vs_reduced_endpoint", endpoint_err, opt.tol_endpoint},
  };
  bool pass = true;
  json report;
  for (const auto& c : checks) {
    const bool ok = c.value <= c.tol;
    pass = pass && ok;
    std::printf("check %s: %s (tol %s) %s\n", c.name,
                drift_str(c.value).c_str(), drift_str(c.tol).c_str(),
                ok ? "ok" : "FAIL");
    report[c.name] = c.value;
  }

  if (!opt.out.empty()) {
    json metadata;
    metadata["example"] = "galilei";
    metadata["lambda"] = opt.lambda;
    metadata["t_final"] = opt.t_final;
    metadata["steps"] = opt.steps;
    metadata["project"] = opt.project;
    metadata["report"] = report;
    write_table(opt.out, opt.format, reduced_trajectory_table(traj), metadata);
    std::printf("wrote: %s\n", opt.out.c_str());
  }
  return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coadjoint-orbit dynamics toolkit"};
  app.require_subcommand(1);

  CheckOptions check_opt;
  auto* check_cmd =
      app.add_subcommand("check", "Validate algebra identities");
  add_source_flags(check_cmd, check_opt.src);
  check_cmd->add_option("--tol", check_opt.tol, "Identity tolerance");

  FlowOptions flow_opt;
  auto* flow_cmd =
      app.add_subcommand("flow", "Integrate a linear-Hamiltonian flow");
  add_source_flags(flow_cmd, flow_opt.src);
  flow_cmd->add_option("--alpha", flow_opt.alpha, "Hamiltonian coefficients")
      ->delimiter(',')
      ->required();
  flow_cmd->add_option("--init", flow_opt.init, "Initial dual components")
      ->delimiter(',')
      ->required();
  flow_cmd->add_option("--t", flow_opt.t_final, "Final time")
      ->check(CLI::Number);
  flow_cmd->add_option("--steps", flow_opt.steps, "Sample/step count");
  flow_cmd->add_option("--method", flow_opt.method, "exact or rk4")
      ->check(CLI::IsMember({"exact", "rk4"}));
  flow_cmd->add_option("--out", flow_opt.out, "Trajectory output path");
  flow_cmd->add_option("--format", flow_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  flow_cmd->add_option("--tol-casimir", flow_opt.tol_casimir,
                       "Casimir drift tolerance");
  flow_cmd->add_option("--sweep", flow_opt.sweep,
                       "Fan out over N sampled initial conditions");
  flow_cmd->add_option("--seed", flow_opt.seed, "Sweep sampling seed");

  OrbitOptions orbit_opt;
  auto* orbit_cmd =
      app.add_subcommand("orbit", "Report orbit data at a dual point");
  add_source_flags(orbit_cmd, orbit_opt.src);
  orbit_cmd->add_option("--init", orbit_opt.init, "Dual-space point")
      ->delimiter(',')
      ->required();
  orbit_cmd->add_option("--tol", orbit_opt.tol, "Stabilizer rank threshold");
  orbit_cmd->add_option("--out", orbit_opt.out, "Report output path");

  auto* example_cmd = app.add_subcommand("example", "Run a worked example");
  example_cmd->require_subcommand(1);

  ConformalOptions conf_opt;
  auto* conf_cmd = example_cmd->add_subcommand(
      "conformal", "Coset-chart mechanics on the hyperboloid orbit");
  conf_cmd->add_option("--lambda", conf_opt.lambda, "Orbit label (> 0)");
  conf_cmd->add_option("--c1", conf_opt.c1, "Curve chart point, first");
  conf_cmd->add_option("--c2", conf_opt.c2, "Curve chart point, second");
  conf_cmd->add_option("--steps", conf_opt.steps, "Integrator steps");
  conf_cmd->add_option("--out", conf_opt.out, "Trajectory output path");
  conf_cmd->add_option("--format", conf_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  conf_cmd->add_option("--tol-casimir", conf_opt.tol_casimir,
                       "Casimir drift tolerance");
  conf_cmd->add_option("--tol-energy", conf_opt.tol_energy,
                       "Energy drift tolerance");
  conf_cmd->add_option("--tol-curve", conf_opt.tol_curve,
                       "Closed-form comparison tolerance");

  GalileiOptions gal_opt;
  auto* gal_cmd = example_cmd->add_subcommand(
      "galilei", "Reduced dynamics of the 15-dim algebra");
  gal_cmd->add_option("--lambda", gal_opt.lambda, "Orbit label (> 0)");
  gal_cmd->add_option("--init", gal_opt.init,
                      "12 packed components s,t,zeta,eta")
      ->delimiter(',');
  gal_cmd->add_option("--t", gal_opt.t_final, "Final time");
  gal_cmd->add_option("--steps", gal_opt.steps, "Integrator steps");
  gal_cmd->add_flag("--project", gal_opt.project,
                    "Reproject onto the constraints after each step");
  gal_cmd->add_option("--out", gal_opt.out, "Trajectory output path");
  gal_cmd->add_option("--format", gal_opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  gal_cmd->add_option("--tol-constraint", gal_opt.tol_constraint,
                      "Constraint drift tolerance");
  gal_cmd->add_option("--tol-endpoint", gal_opt.tol_endpoint,
                      "Full-vs-reduced endpoint tolerance");
  gal_cmd->add_option("--tol-energy", gal_opt.tol_energy,
                      "Energy drift tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (check_cmd->parsed()) return run_check(check_opt);
    if (flow_cmd->parsed()) {
      if (flow_opt.steps < 1)
        throw ConfigError("--steps must be at least 1");
      return run_flow(flow_opt);
    }
    if (orbit_cmd->parsed()) return run_orbit(orbit_opt);
    if (conf_cmd->parsed()) return run_example_conformal(conf_opt);
    if (gal_cmd->parsed()) return run_example_galilei(gal_opt);
    throw ConfigError("no command selected");
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const DimensionError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const InvalidStateError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitCheckFailed;
  }
}
