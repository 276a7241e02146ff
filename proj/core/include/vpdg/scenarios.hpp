#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vpdg/basis.hpp"

namespace vpdg {

enum class EquilibriumKind { Maxwellian, Lorentzian, TwoStream };

/// Spatially uniform background distribution f_eq(v).
struct Equilibrium {
  EquilibriumKind kind = EquilibriumKind::Maxwellian;

  double value(double v) const;
  double derivative(double v) const;
  /// -v / f'_eq(v), the weight in the linear energy. Throws for TwoStream.
  double energy_weight(double v) const;
  bool has_energy_weight() const { return kind != EquilibriumKind::TwoStream; }
  std::string name() const;
};

enum class DriveKind { J, A };

/// External field E_ext(x, t) = A_d(t) sin(k x - omega t).
struct DriveSpec {
  DriveKind kind = DriveKind::J;
  double A_m = 0.052;
  double k = 0.26;
  double omega = 0.37;

  /// Time after which A_d is identically zero (J) or below 1e-8 relative (A).
  double shutoff() const;
};

double drive_amplitude(const DriveSpec& spec, double t);
double external_field(const DriveSpec& spec, double x, double t);

enum class SystemKind { Linear, Nonlinear, Advection, Driven };

std::string to_string(SystemKind kind);

/// Fully resolved benchmark definition.
struct Scenario {
  std::string name;
  SystemKind system = SystemKind::Advection;
  Equilibrium equilibrium;
  double amplitude = 0.0;  ///< A in the initial perturbation
  double k = 0.5;
  double length = 0.0;
  double vc = 5.0;
  std::optional<DriveSpec> drive;

  // Defaults used by the runner when the configuration leaves them unset.
  int default_nx = 40;
  int default_nv = 40;
  Family default_family = Family::TensorQ;
  int default_degree = 2;
  bool default_limiter = false;
  double default_t_end = 60.0;

  /// f0(x, v) for the chosen scenario.
  double initial(double x, double v) const;
  /// True for runs whose field comes from the nonlinear Poisson solve.
  bool nonlinear() const { return system == SystemKind::Nonlinear || system == SystemKind::Driven; }
};

const std::vector<std::string>& scenario_names();

/// Throws std::invalid_argument for an unknown name.
Scenario make_scenario(const std::string& name);

}  // namespace vpdg
