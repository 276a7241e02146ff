#include "vpdg/cli/runner.hpp"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vpdg/diagnostics.hpp"
#include "vpdg/integrator.hpp"
#include "vpdg/recurrence.hpp"

#ifndef VPDG_VERSION
#define VPDG_VERSION "unknown"
#endif

namespace vpdg::cli {

namespace fs = std::filesystem;

std::string time_tag(double t) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, t);
  return std::string(buf, r.ptr);
}

int effective_threads(const RunConfig& c) {
  if (const char* env = std::getenv("VPDG_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return c.threads;
}

namespace {

nlohmann::ordered_json build_stamp() {
  nlohmann::ordered_json b;
  b["version"] = VPDG_VERSION;
#ifdef __VERSION__
  b["compiler"] = __VERSION__;
#endif
#ifdef NDEBUG
  b["assertions"] = false;
#else
  b["assertions"] = true;
#endif
  return b;
}

void write_manifest(const fs::path& dir, const RunConfig& c, const nlohmann::ordered_json& result) {
  nlohmann::ordered_json m;
  m["program"] = "vpdg";
  m["build"] = build_stamp();
  m["config"] = to_json(c);
  m["result"] = result;
  std::ofstream out(dir / "manifest.json");
  out << m.dump(2) << '\n';
}

std::ofstream open_out(const fs::path& p) {
  std::ofstream out(p);
  if (!out) throw std::runtime_error("cannot write '" + p.string() + "'");
  return out;
}

}  // namespace

int execute(const RunConfig& c, std::ostream& log) {
  const fs::path dir(c.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    log << "error: cannot create output directory '" << c.output_dir << "': " << ec.message() << '\n';
    return kUsageError;
  }
#ifdef _OPENMP
  if (const int n = effective_threads(c); n > 0) omp_set_num_threads(n);
#endif

  const Scenario sc = resolve_scenario(c);
  const Mesh mesh = build_mesh(c.nx, c.nv, sc.length, sc.vc);
  const BasisSpec spec(c.family, c.degree);

  nlohmann::ordered_json result;
  result["status"] = "running";
  result["outputs"] = nlohmann::ordered_json::array();
  write_manifest(dir, c, result);
  std::vector<std::string> outputs = {"diagnostics.csv"};

  std::ofstream diag = open_out(dir / "diagnostics.csv");
  write_diagnostics_header(diag);
  std::ofstream ecenter;
  if (sc.system == SystemKind::Driven) {
    ecenter = open_out(dir / "ecenter.csv");
    ecenter << "t,e0\n";
    outputs.push_back("ecenter.csv");
  }

  StepControl ctl;
  ctl.cfl = c.cfl;
  ctl.t_end = c.t_end;
  ctl.diag_every = c.diag_every;
  ctl.snapshot_times = c.snapshot_times;
  ctl.limiter = c.limiter;

  std::vector<double> rec_t, rec_rho;
  RunHooks hooks;
  hooks.on_diagnostics = [&](const DiagnosticsRecord& r) {
    write_diagnostics_row(diag, r);
    diag.flush();
  };
  hooks.on_step = [&](double t, const DGField& f, const ElectricFieldPoly& E) {
    if (sc.system == SystemKind::Advection) {
      rec_t.push_back(t);
      rec_rho.push_back(density_max(density(f)));
    }
    if (ecenter.is_open()) {
      char buf[80];
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", t, E.eval_E(0.0));
      ecenter << buf;
    }
  };
  hooks.on_snapshot = [&](double t, const DGField& f, const ElectricFieldPoly& E) {
    const std::string tag = time_tag(t);
    std::ofstream snap = open_out(dir / ("snapshot_t" + tag + ".csv"));
    write_snapshot_csv(f, snap);
    outputs.push_back("snapshot_t" + tag + ".csv");
    if (sc.nonlinear()) {
      std::ofstream bgk = open_out(dir / ("bgk_t" + tag + ".csv"));
      write_bgk_csv(bgk, bgk_scatter(f, E));
      outputs.push_back("bgk_t" + tag + ".csv");
    }
  };

  log << "vpdg: " << sc.name << " on " << mesh.Nx << "x" << mesh.Nv << " " << spec.name() << ", t_end " << c.t_end
      << (ctl.limiter && sc.nonlinear() ? ", limiter on" : "") << '\n';

  int status = kOk;
  try {
    const RunResult r = run(sc, mesh, spec, ctl, hooks);
    result["status"] = "completed";
    result["steps"] = r.steps;
    result["final_time"] = r.t;
    result["limiter"] = {{"cells_limited", r.limiter.cells_limited},
                         {"negative_averages", r.limiter.negative_averages}};
    if (sc.system == SystemKind::Advection) {
      const RecurrenceReport rep = recurrence_analysis(sc, mesh, spec, std::move(rec_t), std::move(rec_rho));
      std::ofstream rr = open_out(dir / "recurrence_report.csv");
      write_recurrence_csv(rr, rep);
      outputs.push_back("recurrence_report.csv");
      result["recurrence"] = {{"predicted_tr", rep.predicted_tr},
                              {"measured_tr", rep.ok ? nlohmann::ordered_json(rep.measured_tr) : nullptr},
                              {"peaks_found", rep.peaks_found}};
      if (!rep.ok) log << "vpdg: recurrence fit: " << rep.message << '\n';
    }
    log << "vpdg: " << r.steps << " steps, t = " << r.t << '\n';
  } catch (const std::exception& e) {
    result["status"] = "failed";
    result["error"] = e.what();
    log << "error: " << e.what() << '\n';
    status = kSolverFailure;
  }
  diag.close();
  if (ecenter.is_open()) ecenter.close();
  result["outputs"] = outputs;
  write_manifest(dir, c, result);
  return status;
}

}  // namespace vpdg::cli
