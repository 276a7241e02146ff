#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "vpdg/cli/runner.hpp"
#include "vpdg/dispersion.hpp"
#include "vpdg/recurrence.hpp"

using namespace vpdg;

int main(int argc, char** argv) {
  CLI::App app{"DG Vlasov-Poisson solver and recurrence analysis"};
  app.require_subcommand(1);

  std::string config_path, output_override;
  auto* run = app.add_subcommand("run", "Run a configuration (INI file or a previous manifest.json)");
  run->add_option("config", config_path, "Configuration file")->required()->check(CLI::ExistingFile);
  run->add_option("-o,--output", output_override, "Override the output directory");

  std::string show_path;
  auto* show = app.add_subcommand("config", "Print the resolved configuration in canonical form");
  show->add_option("config", show_path, "Configuration file")->required()->check(CLI::ExistingFile);

  double k = 0.5;
  auto* disp = app.add_subcommand("dispersion", "Least-damped Landau root of the Maxwellian dielectric");
  disp->add_option("--k", k, "Wavenumber in [0.2, 1]")->required();

  std::string basis = "q1", scenario = "advection_maxwellian", rec_dir = ".";
  int nx = 40, nv = 40;
  auto* rec = app.add_subcommand("recurrence", "Predicted versus measured recurrence time");
  rec->add_option("--basis", basis, "Polynomial space, e.g. q1, p2")->capture_default_str();
  rec->add_option("--scenario", scenario, "Advection scenario")->capture_default_str();
  rec->add_option("--nx", nx, "Cells in x")->capture_default_str();
  rec->add_option("--nv", nv, "Cells in v")->capture_default_str();
  rec->add_option("-o,--output", rec_dir, "Directory for recurrence_report.csv")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      cli::RunConfig c = cli::load_config_file(config_path);
      if (!output_override.empty()) c.output_dir = output_override;
      return cli::execute(c, std::cerr);
    }
    if (*show) {
      std::cout << cli::to_ini(cli::load_config_file(show_path));
      return cli::kOk;
    }
    if (*disp) {
      const LandauRoot r = solve_landau_root(k);
      std::printf("k,omega,gamma,residual\n%.17g,%.17g,%.17g,%.17g\n", r.k, r.omega_real, r.gamma, r.residual);
      if (!r.converged) {
        std::fprintf(stderr, "warning: Newton iteration did not converge\n");
        return cli::kSolverFailure;
      }
      return cli::kOk;
    }
    if (*rec) {
      RecurrenceOptions opt;
      opt.nx = nx;
      opt.nv = nv;
      const RecurrenceReport r = predict_vs_measure(make_scenario(scenario), parse_basis(basis), opt);
      std::filesystem::create_directories(rec_dir);
      std::ofstream out(std::filesystem::path(rec_dir) / "recurrence_report.csv");
      write_recurrence_csv(out, r);
      std::printf("basis,scenario,predicted_tr,measured_tr,relative_error,peaks_found\n%s,%s,%.15g,%.15g,%.3g,%d\n",
                  r.basis.c_str(), r.scenario.c_str(), r.predicted_tr, r.measured_tr, r.relative_error,
                  r.peaks_found);
      if (!r.ok) {
        std::fprintf(stderr, "error: %s\n", r.message.c_str());
        return cli::kSolverFailure;
      }
      return cli::kOk;
    }
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return cli::kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kSolverFailure;
  }
  return cli::kOk;
}
