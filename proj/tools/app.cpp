#include "app.h"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "suites.h"
#include "volterra/config.h"
#include "volterra/criteria.h"
#include "volterra/csv.h"
#include "volterra/error.h"
#include "volterra/kernels.h"
#include "volterra/process.h"
#include "volterra/spde.h"

namespace volterra::app {

namespace {

namespace fs = std::filesystem;
using config::Tree;

constexpr int kUsage = 2;
constexpr int kFailure = 1;

struct Output {
  fs::path dir = ".";
  bool force = false;

  fs::path claim(const std::string& name) const {
    const fs::path p = dir / name;
    if (fs::exists(p) && !force)
      throw ConfigurationError(p.string() + " exists; pass --force to overwrite");
    return p;
  }
  void prepare() const { fs::create_directories(dir); }
};

GridSpec parse_grid(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) throw ConfigurationError("grid must be t_min:t_max:n_points, got '" + s + "'");
  try {
    std::size_t used = 0;
    const double a = std::stod(parts[0], &used);
    const double b = std::stod(parts[1]);
    const long n = std::stol(parts[2]);
    if (n < 2 || !(b > a)) throw ConfigurationError("grid needs t_max > t_min and n_points >= 2");
    return GridSpec(a, b, static_cast<std::size_t>(n));
  } catch (const std::logic_error&) {
    throw ConfigurationError("grid must be t_min:t_max:n_points, got '" + s + "'");
  }
}

Tree base_manifest(const std::string& command) {
  Tree t;
  t.put("schema.version", config::kSchemaVersion);
  t.put("manifest.command", command);
  t.put("manifest.library_version", VOLTERRA_VERSION);
  return t;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream os(p, std::ios::binary);
  if (!os) throw ConfigurationError("cannot write " + p.string());
  os << text;
}

std::uint64_t seed_of(const Tree& m) { return m.get<std::uint64_t>("run.seed"); }

int cmd_simulate(const Tree& m, const Output& out) {
  const std::string process = m.get<std::string>("run.process");
  const double H = m.get<double>("run.H");
  const GridSpec grid = parse_grid(m.get<std::string>("run.grid"));
  const auto paths = m.get<std::size_t>("run.paths");
  const auto seed = seed_of(m);
  std::optional<Ensemble> e;
  if (process == "fbm") {
    const std::string method = m.get<std::string>("run.method");
    if (method != "cholesky" && method != "circulant")
      throw ConfigurationError("method must be cholesky or circulant");
    e = simulate_fbm(grid, H, paths, seed,
                     method == "cholesky" ? FbmMethod::cholesky : FbmMethod::circulant);
  } else if (process == "rosenblatt") {
    const auto sch = RosenblattScheme::make(H, m.get<int>("run.cells_per_unit"),
                                            m.get<double>("run.disc_tol"));
    e = simulate_rosenblatt(grid, sch, paths, seed);
  } else {
    throw ConfigurationError("process must be fbm or rosenblatt");
  }
  const auto csv_path = out.claim("paths.csv");
  const auto man_path = out.claim("manifest.ini");
  out.prepare();
  std::ofstream os(csv_path, std::ios::binary);
  csv::write_paths(os, *e);
  write_text(man_path, config::to_text(m));
  std::cout << "wrote " << csv_path.string() << " (" << grid.size() << " rows, " << paths + 1
            << " columns)\n";
  return 0;
}

int cmd_solve(const Tree& m, const Output& out) {
  const EquationSpec spec = config::equation_from(m);
  const GridSpec grid = parse_grid(m.get<std::string>("run.grid"));
  const auto paths = m.get<std::size_t>("run.paths");
  const VectorEnsemble X = solve_mild(spec, grid, paths, seed_of(m), m.get<double>("run.T0"));
  const auto csv_path = out.claim("solution.csv");
  const auto man_path = out.claim("manifest.ini");
  out.prepare();
  std::ofstream os(csv_path, std::ios::binary);
  std::vector<std::string> row{"t", "mode"};
  for (std::size_t p = 0; p < paths; ++p) row.push_back("path_" + std::to_string(p));
  csv::write_row(os, row);
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t n = 0; n < X.coords.size(); ++n) {
      row.assign({csv::format(grid.time(i)), std::to_string(n)});
      for (std::size_t p = 0; p < paths; ++p)
        row.push_back(csv::format(X.coords[n](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(p))));
      csv::write_row(os, row);
    }
  write_text(man_path, config::to_text(m));
  std::cout << "wrote " << csv_path.string() << "\n";
  return 0;
}

int cmd_covariance(const Tree& m, const Output& out) {
  const EquationSpec spec = config::equation_from(m);
  const double t = m.get<double>("run.t");
  const auto s = m.get_optional<double>("run.s");
  const CovMatrix c = s ? covariance_g(spec, t, *s) : covariance_qt(spec, t);
  std::vector<std::string> header;
  for (Eigen::Index j = 0; j < c.m.cols(); ++j) header.push_back("m_" + std::to_string(j));
  const auto csv_path = out.claim("covariance.csv");
  const auto man_path = out.claim("manifest.ini");
  out.prepare();
  std::ofstream os(csv_path, std::ios::binary);
  csv::write_matrix(os, c.m, header);
  write_text(man_path, config::to_text(m));
  csv::write_matrix(std::cout, c.m, header);
  return 0;
}

int cmd_verify(const Tree& m, const std::optional<Output>& out) {
  SuiteOptions o;
  const std::string suite = m.get<std::string>("run.suite");
  o.H = m.get<double>("run.H");
  o.paths = m.get<std::size_t>("run.paths");
  o.seed = m.get<std::uint64_t>("run.seed", 0);
  o.family = m.get<std::string>("run.family");
  o.x0 = m.get<std::string>("run.x0");
  const SuiteReport r = run_suite(suite, o);
  std::cout << summary(r);
  if (out) {
    const auto csv_path = out->claim("report.csv");
    const auto man_path = out->claim("manifest.ini");
    out->prepare();
    std::ofstream os(csv_path, std::ios::binary);
    csv::write_row(os, {"suite", "check", "pass", "detail"});
    for (const auto& c : r.checks)
      for (const auto& d : c.details) csv::write_row(os, {suite, c.name, c.pass ? "1" : "0", d});
    write_text(man_path, config::to_text(m));
  }
  return r.pass() ? 0 : kFailure;
}

int cmd_criteria(const Tree& m, const std::optional<Output>& out) {
  const std::string table = m.get<std::string>("run.table");
  const auto Hs = config::parse_list(m.get<std::string>("run.H"));
  std::ostringstream os;
  if (table == "threshold") {
    csv::write_row(os, {"H", "beta", "limiting_measure", "wiener_limit", "sup_trace", "note"});
    for (const auto& row : criteria::threshold_table(Hs)) {
      csv::write_row(os, {csv::format(row.H), csv::format(row.beta),
                          row.verdict.limiting_measure ? "1" : "0", row.verdict.wiener_limit ? "1" : "0",
                          csv::format(row.verdict.sup_trace), row.verdict.note});
    }
  } else if (table == "heat") {
    csv::write_row(os, {"d", "H", "admissible", "fitted_exponent", "expected_exponent"});
    for (int d = 1; d <= 3; ++d)
      for (double H : Hs) {
        const auto r = criteria::heat_admissibility(d, H);
        csv::write_row(os, {std::to_string(d), csv::format(H), r.admissible ? "1" : "0",
                            csv::format(r.fitted_exponent), csv::format(r.expected_exponent)});
      }
  } else {
    throw ConfigurationError("table must be threshold or heat");
  }
  std::cout << os.str();
  if (out) {
    const auto csv_path = out->claim("criteria.csv");
    const auto man_path = out->claim("manifest.ini");
    out->prepare();
    write_text(csv_path, os.str());
    write_text(man_path, config::to_text(m));
  }
  return 0;
}

int dispatch(const Tree& m, const Output& out, bool out_given) {
  const std::string cmd = m.get<std::string>("manifest.command");
  const std::optional<Output> opt_out = out_given ? std::optional<Output>(out) : std::nullopt;
  if (cmd == "simulate") return cmd_simulate(m, out);
  if (cmd == "solve") return cmd_solve(m, out);
  if (cmd == "covariance") return cmd_covariance(m, out);
  if (cmd == "verify") return cmd_verify(m, opt_out);
  if (cmd == "criteria") return cmd_criteria(m, opt_out);
  throw ConfigurationError("manifest names unknown command '" + cmd + "'");
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Volterra-driven processes and linear evolution equations"};
  app.require_subcommand(1);
  app.fallthrough();
  int workers = 0;
  Output out;
  app.add_option("--workers", workers, "Cap on worker threads (0 = OpenMP default)")
      ->check(CLI::NonNegativeNumber);
  auto* out_opt = app.add_option("--out", out.dir, "Output directory");
  app.add_flag("--force", out.force, "Overwrite existing outputs");

  std::optional<std::uint64_t> seed;
  std::string grid, process = "fbm", method = "cholesky", config_path, suite, family = "fbm",
                    x0 = "deterministic", table = "threshold", Hs = "0.6,0.75,0.9", manifest_path;
  double H = 0.75, T0 = 1.0, t = 1.0;
  std::optional<double> s;
  std::size_t paths = 0;
  int cells_per_unit = 512;
  double disc_tol = 0.01;

  auto* sim = app.add_subcommand("simulate", "Simulate fBm or Rosenblatt paths to paths.csv");
  sim->add_option("--process", process, "fbm or rosenblatt")->check(CLI::IsMember({"fbm", "rosenblatt"}));
  sim->add_option("--H", H, "Hurst parameter in (1/2, 1)");
  sim->add_option("--grid", grid, "t_min:t_max:n_points")->required();
  sim->add_option("--paths", paths, "Number of paths")->required();
  sim->add_option("--seed", seed, "Random seed (required)");
  sim->add_option("--method", method, "fBm method: cholesky or circulant")
      ->check(CLI::IsMember({"cholesky", "circulant"}));
  sim->add_option("--cells-per-unit", cells_per_unit, "Rosenblatt cells per unit time");
  sim->add_option("--disc-tol", disc_tol, "Rosenblatt relative variance bias cap");

  auto* solve = app.add_subcommand("solve", "Solve the mild equation to solution.csv");
  solve->add_option("--config", config_path, "Equation file (INI)")->required()->check(CLI::ExistingFile);
  solve->add_option("--grid", grid, "0:t_max:n_points")->required();
  solve->add_option("--paths", paths, "Number of paths")->required();
  solve->add_option("--seed", seed, "Random seed (required)");
  solve->add_option("--T0", T0, "T_0 of the Hypothesis (H) integral");

  auto* cov = app.add_subcommand("covariance", "q_t or g(t, s) to covariance.csv");
  cov->add_option("--config", config_path, "Equation file (INI)")->required()->check(CLI::ExistingFile);
  cov->add_option("--t", t, "Time t >= 0");
  cov->add_option("--s", s, "Second time; gives g(t, s)");

  auto* ver = app.add_subcommand("verify", "Run an invariant suite; exit 0 iff it passes");
  ver->add_option("--suite", suite, "kernel, isometry, law-symmetry, stationarity, limit or criteria")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  ver->add_option("--H", H, "Hurst parameter");
  ver->add_option("--paths", paths, "Number of paths (0 = suite default)");
  ver->add_option("--seed", seed, "Random seed (required for stochastic suites)");
  ver->add_option("--family", family, "fbm or rosenblatt")->check(CLI::IsMember({"fbm", "rosenblatt"}));
  ver->add_option("--x0", x0, "deterministic or x-infinity")
      ->check(CLI::IsMember({"deterministic", "x-infinity"}));

  auto* crit = app.add_subcommand("criteria", "Threshold or heat tables as CSV");
  crit->add_option("--table", table, "threshold or heat")->check(CLI::IsMember({"threshold", "heat"}));
  crit->add_option("--H", Hs, "Comma-separated H values");

  auto* rerun = app.add_subcommand("rerun", "Repeat a run from its manifest");
  rerun->add_option("--manifest", manifest_path, "manifest.ini of an earlier run")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  kernels::set_workers(workers);
  const bool out_given = out_opt->count() > 0;
  try {
    Tree m;
    auto need_seed = [&](CLI::App* sub) {
      if (!seed) {
        std::cerr << "error: --seed is required for stochastic commands\n" << sub->help();
        throw CLI::RuntimeError(kUsage);
      }
      m.put("run.seed", *seed);
    };
    if (sim->parsed()) {
      m = base_manifest("simulate");
      need_seed(sim);
      m.put("run.process", process);
      m.put("run.H", csv::format(H));
      m.put("run.grid", grid);
      m.put("run.paths", paths);
      m.put("run.method", method);
      m.put("run.cells_per_unit", cells_per_unit);
      m.put("run.disc_tol", csv::format(disc_tol));
    } else if (solve->parsed()) {
      m = base_manifest("solve");
      need_seed(solve);
      config::equation_into(m, config::equation_from(config::read_file(config_path)));
      m.put("run.grid", grid);
      m.put("run.paths", paths);
      m.put("run.T0", csv::format(T0));
    } else if (cov->parsed()) {
      m = base_manifest("covariance");
      config::equation_into(m, config::equation_from(config::read_file(config_path)));
      m.put("run.t", csv::format(t));
      if (s) m.put("run.s", csv::format(*s));
    } else if (ver->parsed()) {
      m = base_manifest("verify");
      if (suite_is_stochastic(suite)) need_seed(ver);
      else m.put("run.seed", seed.value_or(0));
      m.put("run.suite", suite);
      m.put("run.H", csv::format(H));
      m.put("run.paths", paths ? paths : default_paths(suite));
      m.put("run.family", family);
      m.put("run.x0", x0);
    } else if (crit->parsed()) {
      m = base_manifest("criteria");
      m.put("run.table", table);
      m.put("run.H", Hs);
    } else {
      m = config::read_file(manifest_path);
      if (!out_given) out.dir = fs::path(manifest_path).parent_path() / "rerun";
      return dispatch(m, out, true);
    }
    return dispatch(m, out, out_given);
  } catch (const CLI::RuntimeError& e) {
    return e.get_exit_code();
  } catch (const ConfigurationError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const AlignmentError& e) {
    std::cerr << "grid alignment: " << e.what() << "\n";
    return kUsage;
  } catch (const boost::property_tree::ptree_error& e) {
    std::cerr << "manifest error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace volterra::app
