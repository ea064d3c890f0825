// isingcoh: thermal local coherence of a target qubit coupled to an Ising
// ring. Subcommands: point, sweep, figure, phase-diagram, verify.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "isingcoh/dataset.hpp"
#include "isingcoh/limits.hpp"
#include "isingcoh/observables.hpp"
#include "isingcoh/spectrum.hpp"
#include "isingcoh/sweep.hpp"
#include "isingcoh/verify.hpp"

#ifndef ISINGCOH_VERSION
#define ISINGCOH_VERSION "dev"
#endif

using namespace isingcoh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitCheckFailed = 2;

struct CommonFlags {
  ModelParams params{10.0, 2.0, 3.0, 4.0, 8};
  double t = 1.0;
  std::string output;
  std::string manifest;
  std::string format = "csv";
};

void add_model_flags(CLI::App* app, CommonFlags& f, bool with_j = true) {
  app->add_option("--omega0", f.params.omega0, "target gap")->capture_default_str();
  app->add_option("--omega-a", f.params.omega_a, "source gap")->capture_default_str();
  app->add_option("--gamma", f.params.gamma, "target-source coupling")->capture_default_str();
  if (with_j) app->add_option("--j", f.params.j, "Ising coupling")->capture_default_str();
  app->add_option("--n", f.params.n, "number of source spins")->capture_default_str();
}

void add_output_flags(CLI::App* app, CommonFlags& f) {
  app->add_option("--output", f.output, "CSV output path (default stdout)");
  app->add_option("--manifest", f.manifest,
                  "manifest path (default <output>.manifest when --output is set)");
  app->add_option("--format", f.format, "output format")
      ->check(CLI::IsMember({"csv"}))
      ->capture_default_str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::string joined_argv(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i) out += ' ';
    out += argv[i];
  }
  return out;
}

void emit(const Dataset& data, const CommonFlags& f, const std::string& command,
          const std::string& argv) {
  if (f.output.empty()) {
    write_csv(std::cout, data);
  } else {
    std::ofstream os(f.output, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + f.output);
    write_csv(os, data);
  }
  std::string manifest_path = f.manifest;
  if (manifest_path.empty() && !f.output.empty()) manifest_path = f.output + ".manifest";
  if (manifest_path.empty()) return;

  std::vector<std::pair<std::string, std::string>> entries{
      {"command", command},
      {"argv", argv},
      {"dataset", data.id},
      {"tool_version", ISINGCOH_VERSION},
      {"timestamp", utc_timestamp()},
      {"output", f.output.empty() ? "-" : f.output},
  };
  entries.insert(entries.end(), data.manifest.begin(), data.manifest.end());
  std::ofstream ms(manifest_path, std::ios::binary);
  if (!ms) throw std::runtime_error("cannot open " + manifest_path);
  write_manifest(ms, entries);
}

int run_point(const CommonFlags& f) {
  const ModelParams p = validate(f.params);
  const Temperature t(f.t);
  const double c = coherence(p, t);
  const PhaseInfo phase = phase_classify(p);
  const auto j_pt = transition_j(p);

  if (f.format == "csv" && !f.output.empty()) {
    Dataset row;
    row.id = "point";
    row.columns = {"omega0", "omega_a", "gamma", "J", "N", "T", "C", "C_ub", "C_lb", "phase"};
    row.rows.push_back({p.omega0, p.omega_a, p.gamma, p.j, static_cast<double>(p.n), f.t, c,
                        upper_bound(p, t), lower_bound(p, t), std::string(to_string(phase.label))});
    std::ofstream os(f.output, std::ios::binary);
    write_csv(os, row);
  }

  std::cout << "parameters   " << describe(p) << "\n";
  std::cout << "T            " << format_real(f.t) << "\n";
  std::cout << "C            " << format_real(c) << "\n";
  if (!t.is_zero()) {
    const Rho0 r = rho0(p, t);
    std::cout << "rho_e        " << format_real(r.rho_e) << "\n";
    std::cout << "rho_g        " << format_real(r.rho_g) << "\n";
    std::cout << "rho_ge       " << format_real(r.rho_ge) << "\n";
  }
  std::cout << "C_ub         " << format_real(upper_bound(p, t)) << "\n";
  std::cout << "C_lb         " << format_real(lower_bound(p, t)) << "\n";
  std::cout << "C0           " << format_real(ground_manifold_coherence(p)) << "\n";
  std::cout << "phase        " << to_string(phase.label) << "\n";
  std::cout << "delta_e_min  " << format_real(phase.delta_e_min) << "\n";
  std::cout << "J_pt         " << (j_pt ? format_real(*j_pt) : std::string("none")) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal local coherence of a qubit coupled to an Ising ring"};
  app.set_version_flag("--version", ISINGCOH_VERSION);
  app.require_subcommand(1);

  CommonFlags point_flags;
  auto* point = app.add_subcommand("point", "evaluate C, rho0, bounds and phase at one point");
  add_model_flags(point, point_flags);
  point->add_option("--t", point_flags.t, "temperature (0 = ground state)")->capture_default_str();
  point->add_option("--output", point_flags.output, "also write a single CSV row here");
  point->add_option("--format", point_flags.format, "row format")
      ->check(CLI::IsMember({"csv"}))
      ->capture_default_str();

  CommonFlags sweep_flags;
  std::string sweep_var = "T";
  double sweep_from = 0.01, sweep_to = 100.0;
  int sweep_points = 200;
  std::string spacing = "log";
  bool sweep_bounds = false, sweep_asym = false;
  unsigned sweep_threads = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate C along a one-parameter grid");
  add_model_flags(sweep_cmd, sweep_flags);
  add_output_flags(sweep_cmd, sweep_flags);
  sweep_cmd->add_option("--t", sweep_flags.t, "temperature when sweeping another variable")
      ->capture_default_str();
  sweep_cmd->add_option("--var", sweep_var, "T, J, omega_a, gamma or N")->capture_default_str();
  sweep_cmd->add_option("--from", sweep_from, "first grid value")->capture_default_str();
  sweep_cmd->add_option("--to", sweep_to, "last grid value")->capture_default_str();
  sweep_cmd->add_option("--points", sweep_points, "grid size")->capture_default_str();
  sweep_cmd->add_option("--spacing", spacing, "log or linear")
      ->check(CLI::IsMember({"log", "linear"}))
      ->capture_default_str();
  sweep_cmd->add_flag("--bounds", sweep_bounds, "add C_ub and C_lb columns");
  sweep_cmd->add_flag("--asymptotics", sweep_asym, "add high-temperature estimates");
  sweep_cmd->add_option("--threads", sweep_threads, "worker threads (0 = all cores)");

  CommonFlags fig_flags;
  std::string fig_id;
  auto* fig = app.add_subcommand("figure", "emit a figure preset dataset");
  fig->add_option("id", fig_id, "one of fig1a fig1b fig1c fig2a fig2b fig2c fig3a fig3b fig3c fig3d")
      ->required();
  add_output_flags(fig, fig_flags);

  CommonFlags pd_flags;
  pd_flags.params = {20.0, 12.0, 3.0, 0.0, 8};
  double j_min = -12, j_max = 2, wa_min = 0.5, wa_max = 24;
  int j_steps = 57, wa_steps = 48;
  auto* pd = app.add_subcommand("phase-diagram", "ground-state phase on a (J, omega_a) grid");
  add_model_flags(pd, pd_flags, false);
  add_output_flags(pd, pd_flags);
  pd->add_option("--j-min", j_min)->capture_default_str();
  pd->add_option("--j-max", j_max)->capture_default_str();
  pd->add_option("--j-steps", j_steps)->capture_default_str();
  pd->add_option("--omega-a-min", wa_min)->capture_default_str();
  pd->add_option("--omega-a-max", wa_max)->capture_default_str();
  pd->add_option("--omega-a-steps", wa_steps)->capture_default_str();

  verify::VerifyConfig vcfg;
  auto* ver = app.add_subcommand("verify", "run the oracle-equivalence and property suites");
  ver->add_option("--max-n-enum", vcfg.max_n_enum, "largest N for enumeration")->capture_default_str();
  ver->add_option("--max-n-dense", vcfg.max_n_dense, "largest N for dense diagonalization")
      ->capture_default_str();
  ver->add_option("--cases", vcfg.cases, "random cases per suite")->capture_default_str();
  ver->add_option("--seed", vcfg.seed, "RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  const std::string args = joined_argv(argc, argv);
  try {
    if (*point) return run_point(point_flags);

    if (*sweep_cmd) {
      const ModelParams p = validate(sweep_flags.params);
      const auto grid = spacing == "log" ? log_grid(sweep_from, sweep_to, sweep_points)
                                         : linear_grid(sweep_from, sweep_to, sweep_points);
      const SweepResult res = sweep(p, Temperature(sweep_flags.t), parse_sweep_variable(sweep_var),
                                    grid, {sweep_bounds, sweep_asym, sweep_threads});
      Dataset data = sweep_dataset(res);
      data.manifest = {{"base_params", describe(p)},
                       {"base_t", format_real(sweep_flags.t)},
                       {"grid", spacing + " " + format_real(sweep_from) + " " +
                                    format_real(sweep_to) + " " + std::to_string(sweep_points)}};
      emit(data, sweep_flags, "sweep", args);
      return kExitOk;
    }

    if (*fig) {
      emit(figure_dataset(fig_id), fig_flags, "figure " + fig_id, args);
      return kExitOk;
    }

    if (*pd) {
      const ModelParams p = validate(pd_flags.params);
      Dataset data =
          phase_diagram(p, linear_grid(j_min, j_max, j_steps), linear_grid(wa_min, wa_max, wa_steps));
      emit(data, pd_flags, "phase-diagram", args);
      return kExitOk;
    }

    if (*ver) {
      verify::check_config(vcfg);
      bool all_ok = true;
      std::cout << "seed=" << vcfg.seed << " cases=" << vcfg.cases
                << " max_n_enum=" << vcfg.max_n_enum << " max_n_dense=" << vcfg.max_n_dense << "\n";
      for (const auto& r : verify::run_all(vcfg)) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  cases=" << r.cases
                  << " worst=" << format_real(r.worst) << " tol=" << format_real(r.tolerance)
                  << "\n";
        if (!r.passed) {
          std::cout << "  counterexample: " << r.counterexample << "\n";
          all_ok = false;
        }
      }
      return all_ok ? kExitOk : kExitCheckFailed;
    }
  } catch (const std::invalid_argument& e) {
    // ModelError, SweepError, UnknownFigure and bad grids all land here.
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}
