#include "vpdg/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace vpdg {

void ssp_rk3(std::vector<double>& u, double t, double dt, const FlatRhs& rhs, const FlatMap& limit) {
  const std::size_t n = u.size();
  std::vector<double> h(n), s(n);
  rhs(u, t, h);
  for (std::size_t k = 0; k < n; ++k) s[k] = u[k] + dt * h[k];
  if (limit) limit(s);
  rhs(s, t + dt, h);
  for (std::size_t k = 0; k < n; ++k) s[k] = 0.75 * u[k] + 0.25 * (s[k] + dt * h[k]);
  if (limit) limit(s);
  rhs(s, t + 0.5 * dt, h);
  for (std::size_t k = 0; k < n; ++k) u[k] = u[k] / 3.0 + 2.0 / 3.0 * (s[k] + dt * h[k]);
  if (limit) limit(u);
}

Stepper::Stepper(const Scenario& scenario, const Mesh& mesh, const BasisSpec& spec, bool limiter)
    : scenario_(scenario), op_(mesh, spec) {
  if (scenario.system == SystemKind::Linear) {
    const Equilibrium eq = scenario.equilibrium;
    op_.set_equilibrium_derivative([eq](double v) { return eq.derivative(v); });
  }
  if (limiter && scenario.nonlinear()) limiter_.emplace(spec);
}

ElectricFieldPoly Stepper::field(const DGField& f) const {
  switch (scenario_.system) {
    case SystemKind::Advection: return zero_field(f.mesh(), f.spec().degree());
    case SystemKind::Linear: return solve_linear(density(f));
    case SystemKind::Nonlinear:
    case SystemKind::Driven: return solve_nonlinear(density(f));
  }
  return zero_field(f.mesh(), f.spec().degree());
}

void Stepper::rhs(const DGField& f, double t, DGField& out) const {
  switch (scenario_.system) {
    case SystemKind::Advection: op_.advection(f, out); return;
    case SystemKind::Linear: op_.linear(f, op_.sample_field(field(f)), out); return;
    case SystemKind::Nonlinear: op_.transport(f, op_.sample_field(field(f)), out); return;
    case SystemKind::Driven: {
      const DriveSpec d = *scenario_.drive;
      ExternalField ext;
      if (drive_amplitude(d, t) != 0.0) ext = [d, t](double x) { return external_field(d, x, t); };
      op_.transport(f, op_.sample_field(field(f), ext), out);
      return;
    }
  }
}

double Stepper::field_bound(const ElectricFieldPoly& E, double t) const {
  double b = E.max_abs();
  if (scenario_.drive && t < scenario_.drive->shutoff()) b += scenario_.drive->A_m;
  return b;
}

double Stepper::stable_dt(const ElectricFieldPoly& E, double t, double cfl) const {
  const Mesh& m = op_.mesh();
  double h = m.dx / m.Vc;
  // The linear system has no transport in v.
  if (scenario_.nonlinear()) {
    const double eb = field_bound(E, t);
    if (eb > 0.0) h = std::min(h, m.dv / eb);
  }
  return cfl * h / (2 * op_.spec().degree() + 1);
}

void Stepper::limit(DGField& f) const {
  if (!limiter_) return;
  const LimiterStats s = limiter_->apply(f);
  totals_.cells_limited += s.cells_limited;
  totals_.negative_averages += s.negative_averages;
}

void Stepper::step(DGField& f, double t, double dt) const {
  DGField in(f.mesh(), f.spec());
  DGField out(f.mesh(), f.spec());
  const FlatRhs h = [&](const std::vector<double>& u, double tt, std::vector<double>& du) {
    std::copy(u.begin(), u.end(), in.coeffs().begin());
    rhs(in, tt, out);
    std::copy(out.coeffs().begin(), out.coeffs().end(), du.begin());
  };
  FlatMap lim;
  if (limiter_) {
    lim = [&](std::vector<double>& u) {
      std::copy(u.begin(), u.end(), in.coeffs().begin());
      limit(in);
      std::copy(in.coeffs().begin(), in.coeffs().end(), u.begin());
    };
  }
  ssp_rk3(f.coeffs(), t, dt, h, lim);
  for (double c : f.coeffs()) {
    if (!std::isfinite(c)) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "non-finite coefficient after step at t=%.6g (dt=%.3g)", t + dt, dt);
      throw std::runtime_error(buf);
    }
  }
}

DGField rk3_step(const Stepper& stepper, const DGField& f, double t, double dt) {
  DGField g = f;
  stepper.step(g, t, dt);
  return g;
}

RunResult run(const Scenario& scenario, const Mesh& mesh, const BasisSpec& spec, const StepControl& control,
              const RunHooks& hooks) {
  if (control.t_end < 0.0) throw std::invalid_argument("t_end must be non-negative");
  if (!(control.cfl > 0.0)) throw std::invalid_argument("cfl must be positive");
  if (control.fixed_dt && !(*control.fixed_dt > 0.0)) throw std::invalid_argument("fixed dt must be positive");

  const Stepper stepper(scenario, mesh, spec, control.limiter);
  RunResult res{project([&](double x, double v) { return scenario.initial(x, v); }, mesh, spec), {}, 0.0, 0, {}};
  DGField& f = res.final_state;
  stepper.limit(f);

  const Equilibrium* eq =
      scenario.system == SystemKind::Linear && scenario.equilibrium.has_energy_weight() ? &scenario.equilibrium : nullptr;

  std::vector<double> snaps;
  for (double s : control.snapshot_times)
    if (s >= 0.0 && s <= control.t_end) snaps.push_back(s);
  std::sort(snaps.begin(), snaps.end());
  snaps.erase(std::unique(snaps.begin(), snaps.end()), snaps.end());
  std::size_t next_snap = 0;
  long diag_index = 0;

  auto emit = [&](double t, const ElectricFieldPoly& E, bool diag_due) {
    if (hooks.on_step) hooks.on_step(t, f, E);
    if (diag_due) {
      res.series.push_back(record(f, E, t, eq));
      if (hooks.on_diagnostics) hooks.on_diagnostics(res.series.back());
    }
    while (next_snap < snaps.size() && snaps[next_snap] <= t) {
      if (hooks.on_snapshot) hooks.on_snapshot(t, f, E);
      ++next_snap;
    }
  };

  double t = 0.0;
  ElectricFieldPoly E = stepper.field(f);
  emit(t, E, true);
  const double eps = 1e-12 * std::max(1.0, control.t_end);
  while (t < control.t_end - eps) {
    double dt = control.fixed_dt ? *control.fixed_dt : stepper.stable_dt(E, t, control.cfl);
    double target = control.t_end;
    if (next_snap < snaps.size()) target = std::min(target, snaps[next_snap]);
    bool diag_due = control.diag_every <= 0.0;
    if (!diag_due) {
      const double next_diag = (diag_index + 1) * control.diag_every;
      target = std::min(target, next_diag);
    }
    if (t + dt >= target - eps) dt = target - t;
    stepper.step(f, t, dt);
    ++res.steps;
    t = (std::abs(t + dt - target) <= eps) ? target : t + dt;
    if (!diag_due && control.diag_every > 0.0 &&
        std::abs(t - (diag_index + 1) * control.diag_every) <= eps) {
      diag_due = true;
      ++diag_index;
    }
    if (std::abs(t - control.t_end) <= eps) {
      t = control.t_end;
      diag_due = true;
    }
    E = stepper.field(f);
    emit(t, E, diag_due);
  }
  res.t = t;
  res.limiter = stepper.limiter_totals();
  if (res.limiter.negative_averages > 0) {
    std::fprintf(stderr, "warning: %ld negative cell averages encountered by the limiter\n",
                 res.limiter.negative_averages);
  }
  return res;
}

}  // namespace vpdg
