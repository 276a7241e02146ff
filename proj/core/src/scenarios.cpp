#include "vpdg/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vpdg {

namespace {
constexpr double kInvSqrt2Pi = 0.3989422804014327;
}

double Equilibrium::value(double v) const {
  switch (kind) {
    case EquilibriumKind::Maxwellian: return kInvSqrt2Pi * std::exp(-0.5 * v * v);
    case EquilibriumKind::Lorentzian: return 1.0 / (std::numbers::pi * (v * v + 1.0));
    case EquilibriumKind::TwoStream: return kInvSqrt2Pi * v * v * std::exp(-0.5 * v * v);
  }
  return 0.0;
}

double Equilibrium::derivative(double v) const {
  switch (kind) {
    case EquilibriumKind::Maxwellian: return -v * kInvSqrt2Pi * std::exp(-0.5 * v * v);
    case EquilibriumKind::Lorentzian: {
      const double d = v * v + 1.0;
      return -2.0 * v / (std::numbers::pi * d * d);
    }
    case EquilibriumKind::TwoStream: return kInvSqrt2Pi * v * (2.0 - v * v) * std::exp(-0.5 * v * v);
  }
  return 0.0;
}

double Equilibrium::energy_weight(double v) const {
  switch (kind) {
    case EquilibriumKind::Maxwellian: return 1.0 / value(v);
    case EquilibriumKind::Lorentzian: {
      const double d = v * v + 1.0;
      return 0.5 * std::numbers::pi * d * d;
    }
    case EquilibriumKind::TwoStream: break;
  }
  throw std::invalid_argument("linear energy is not defined for the two-stream equilibrium");
}

std::string Equilibrium::name() const {
  switch (kind) {
    case EquilibriumKind::Maxwellian: return "maxwellian";
    case EquilibriumKind::Lorentzian: return "lorentzian";
    case EquilibriumKind::TwoStream: return "two_stream";
  }
  return "?";
}

double DriveSpec::shutoff() const { return kind == DriveKind::J ? 200.0 : 111.0; }

double drive_amplitude(const DriveSpec& spec, double t) {
  if (t <= 0.0) return 0.0;
  if (spec.kind == DriveKind::J) {
    if (t < 50.0) return spec.A_m * std::sin(t * std::numbers::pi / 100.0);
    if (t < 150.0) return spec.A_m;
    if (t < 200.0) return spec.A_m * std::cos((t - 150.0) * std::numbers::pi / 100.0);
    return 0.0;
  }
  if (t < 60.0) return spec.A_m / (1.0 + std::exp(-40.0 * (t - 10.0)));
  return spec.A_m * (1.0 - 1.0 / (1.0 + std::exp(-40.0 * (t - 110.0))));
}

double external_field(const DriveSpec& spec, double x, double t) {
  const double a = drive_amplitude(spec, t);
  return a == 0.0 ? 0.0 : a * std::sin(spec.k * x - spec.omega * t);
}

std::string to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::Linear: return "linear";
    case SystemKind::Nonlinear: return "nonlinear";
    case SystemKind::Advection: return "advection";
    case SystemKind::Driven: return "driven";
  }
  return "?";
}

double Scenario::initial(double x, double v) const {
  const double feq = equilibrium.value(v);
  switch (system) {
    case SystemKind::Advection:
    case SystemKind::Linear: return amplitude * std::cos(k * x) * feq;
    case SystemKind::Nonlinear: return feq * (1.0 + amplitude * std::cos(k * x));
    case SystemKind::Driven: return feq;
  }
  return 0.0;
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = {"advection_maxwellian", "advection_lorentzian", "landau_linear",
                                                 "landau_nonlinear",     "two_stream",           "keen_j",
                                                 "keen_a"};
  return names;
}

Scenario make_scenario(const std::string& name) {
  Scenario s;
  s.name = name;
  if (name == "advection_maxwellian" || name == "advection_lorentzian") {
    s.system = SystemKind::Advection;
    s.amplitude = 1.0;
    s.k = 0.5;
    const bool lor = name == "advection_lorentzian";
    s.equilibrium.kind = lor ? EquilibriumKind::Lorentzian : EquilibriumKind::Maxwellian;
    s.vc = lor ? 30.0 : 5.0;
    s.default_t_end = 100.0;
  } else if (name == "landau_linear") {
    s.system = SystemKind::Linear;
    s.amplitude = 0.01;
    s.k = 0.5;
    s.vc = 5.0;
  } else if (name == "landau_nonlinear" || name == "two_stream") {
    s.system = SystemKind::Nonlinear;
    const bool ts = name == "two_stream";
    s.equilibrium.kind = ts ? EquilibriumKind::TwoStream : EquilibriumKind::Maxwellian;
    s.amplitude = ts ? 0.05 : 0.5;
    s.k = 0.5;
    s.vc = 6.0;
    s.default_nx = 100;
    s.default_nv = 200;
    s.default_family = Family::TotalDegreeP;
    s.default_degree = 2;
    s.default_limiter = true;
    s.default_t_end = 100.0;
  } else if (name == "keen_j" || name == "keen_a") {
    s.system = SystemKind::Driven;
    s.k = 0.26;
    s.vc = 8.0;
    DriveSpec d;
    d.kind = name == "keen_j" ? DriveKind::J : DriveKind::A;
    d.A_m = d.kind == DriveKind::J ? 0.052 : 0.4;
    d.k = s.k;
    d.omega = 0.37;
    s.drive = d;
    s.default_nx = 100;
    s.default_nv = 200;
    s.default_family = d.kind == DriveKind::J ? Family::TensorQ : Family::TotalDegreeP;
    s.default_degree = d.kind == DriveKind::J ? 1 : 2;
    s.default_limiter = d.kind == DriveKind::A;
    s.default_t_end = 400.0;
  } else {
    throw std::invalid_argument("unknown scenario '" + name + "'");
  }
  s.length = 2.0 * std::numbers::pi / s.k;
  return s;
}

}  // namespace vpdg
