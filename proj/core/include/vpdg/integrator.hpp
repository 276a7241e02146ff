#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "vpdg/diagnostics.hpp"
#include "vpdg/field.hpp"
#include "vpdg/limiter.hpp"
#include "vpdg/poisson.hpp"
#include "vpdg/scenarios.hpp"
#include "vpdg/vlasov_rhs.hpp"

namespace vpdg {

/// Right-hand side H(u, t) -> du/dt on a flat coefficient vector.
using FlatRhs = std::function<void(const std::vector<double>& u, double t, std::vector<double>& du)>;
/// Optional in-place post-stage map (the positivity limiter).
using FlatMap = std::function<void(std::vector<double>& u)>;

/// Three-stage SSP (TVD) Runge-Kutta step:
///   u1 = u + dt H(u, t)
///   u2 = 3/4 u + 1/4 (u1 + dt H(u1, t + dt))
///   u  = 1/3 u + 2/3 (u2 + dt H(u2, t + dt/2))
/// `limit`, when set, is applied to u1, u2 and the new u, so every stage starts from a limited state.
void ssp_rk3(std::vector<double>& u, double t, double dt, const FlatRhs& rhs, const FlatMap& limit = nullptr);

struct StepControl {
  double cfl = 0.3;
  double t_end = 0.0;
  double diag_every = 0.0;  ///< time between diagnostics rows; 0 records every step
  std::vector<double> snapshot_times;
  std::optional<double> fixed_dt;  ///< overrides the CFL estimate (still clipped to output times)
  bool limiter = false;            ///< honoured for nonlinear and driven systems only
};

/// Couples the DG operator, Poisson solve, drive and limiter for one scenario.
class Stepper {
 public:
  Stepper(const Scenario& scenario, const Mesh& mesh, const BasisSpec& spec, bool limiter);

  const Scenario& scenario() const { return scenario_; }
  const VlasovOperator& op() const { return op_; }
  bool limiting() const { return limiter_.has_value(); }

  /// Self-consistent field of f (zero for advection runs).
  ElectricFieldPoly field(const DGField& f) const;
  /// df/dt at time t.
  void rhs(const DGField& f, double t, DGField& out) const;
  /// Bound on |E| used by the step size (adds the drive amplitude while the drive is on).
  double field_bound(const ElectricFieldPoly& E, double t) const;
  /// CFL step from the current field.
  double stable_dt(const ElectricFieldPoly& E, double t, double cfl) const;
  /// One RK step in place. Throws std::runtime_error on non-finite coefficients.
  void step(DGField& f, double t, double dt) const;
  /// Applies the limiter (if enabled) in place.
  void limit(DGField& f) const;

  const LimiterStats& limiter_totals() const { return totals_; }

 private:
  Scenario scenario_;
  VlasovOperator op_;
  std::optional<PositivityLimiter> limiter_;
  mutable LimiterStats totals_;
};

/// Free-function form of one step.
DGField rk3_step(const Stepper& stepper, const DGField& f, double t, double dt);

struct RunHooks {
  /// After every accepted step (and once at t = 0).
  std::function<void(double t, const DGField& f, const ElectricFieldPoly& E)> on_step;
  std::function<void(const DiagnosticsRecord&)> on_diagnostics;
  std::function<void(double t, const DGField& f, const ElectricFieldPoly& E)> on_snapshot;
};

struct RunResult {
  DGField final_state;
  std::vector<DiagnosticsRecord> series;
  double t = 0.0;
  long steps = 0;
  LimiterStats limiter;
};

/// Projects the scenario's initial condition and integrates it to control.t_end.
RunResult run(const Scenario& scenario, const Mesh& mesh, const BasisSpec& spec, const StepControl& control,
              const RunHooks& hooks = {});

}  // namespace vpdg
