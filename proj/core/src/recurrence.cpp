#include "vpdg/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "vpdg/diagnostics.hpp"
#include "vpdg/integrator.hpp"

namespace vpdg {

cplx s_j_p0(double v_j, double k, double dx) {
  return {std::abs(v_j) * (std::cos(k * dx) - 1.0) / dx, -v_j * std::sin(k * dx) / dx};
}

ModeParams mode_params(double k, double dx, double dv) {
  ModeParams p;
  p.k = k;
  p.dx = dx;
  p.dv = dv;
  p.k_prime = std::sin(k * dx) / dx;
  p.T_R = 2.0 * std::numbers::pi / (p.k_prime * dv);
  return p;
}

P0Envelope p0_envelope(double k, double dx, double dv, double Vc) {
  P0Envelope e;
  const double c = (std::cos(k * dx) - 1.0) / dx;
  e.rate_min = 0.5 * dv * c;
  e.rate_max = 0.5 * (Vc - dv) * c;
  e.T_R = mode_params(k, dx, dv).T_R;
  return e;
}

Eigen::Matrix4cd Q1Blocks::kron() const {
  Eigen::Matrix4cd K;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) K(2 * a + b, 2 * c + d) = V(a, c) * W(b, d);
  return K;
}

Q1Blocks q1_blocks(int m, double k, double dx, double dv) {
  if (m <= 0 || m % 2 == 0) throw std::invalid_argument("m must be a positive odd integer");
  const double M = m;
  Q1Blocks b;
  // clang-format off
  b.S << -49.0/96 - 7*M/8,   7.0/96,           -7.0/32 - 3*M/8,   1.0/32,
          -7.0/96,           49.0/96 - 7*M/8,  -1.0/32,           7.0/32 - 3*M/8,
          77.0/96 + 11*M/8, -11.0/96,          -21.0/32 - 9*M/8,  3.0/32,
          11.0/96,          -77.0/96 + 11*M/8, -3.0/32,           21.0/32 - 9*M/8;
  b.T << -35.0/96 - 5*M/8,   5.0/96,           35.0/32 + 15*M/8, -5.0/32,
          -5.0/96,           35.0/96 - 5*M/8,   5.0/32,          -35.0/32 + 15*M/8,
           7.0/96 + M/8,    -1.0/96,           -7.0/32 - 3*M/8,   1.0/32,
           1.0/96,          -7.0/96 + M/8,     -1.0/32,           7.0/32 - 3*M/8;
  // clang-format on
  const cplx ph = std::exp(cplx(0.0, -k * dx));
  const cplx h = ph - 1.0;
  b.Lambda = b.S.cast<cplx>() + b.T.cast<cplx>() * ph;
  b.G = (dv / dx) * b.Lambda;
  b.W << -3 * M - 7.0 / 4, 1.0 / 4, -1.0 / 4, -3 * M + 7.0 / 4;
  b.V << 0.5 + 5.0 / 24 * h, -0.5 - 5.0 / 8 * h, -0.5 - 1.0 / 24 * h, 0.5 + 1.0 / 8 * h;
  return b;
}

AmplificationSpectrum q1_spectrum(int m, double k, double dx, double dv) {
  const Q1Blocks b = q1_blocks(m, k, dx, dv);
  AmplificationSpectrum s;
  s.m = m;
  s.G = b.G;
  const cplx h = std::exp(cplx(0.0, -k * dx)) - 1.0;
  const cplx root = std::sqrt(9.0 + 12.0 * h + h * h);
  s.lambda1 = (3.0 + h - root) / 6.0;
  s.lambda2 = (3.0 + h + root) / 6.0;
  const double r3 = std::sqrt(3.0);
  s.xi = {(-3.0 * m - r3) * s.lambda2, (-3.0 * m + r3) * s.lambda2, (-3.0 * m - r3) * s.lambda1,
          (-3.0 * m + r3) * s.lambda1};
  for (int a = 0; a < 4; ++a) s.eta[a] = s.xi[a] * (dv / dx);
  return s;
}

Eigen::Matrix4d q1_point_matrix() {
  const BasisSpec q1(Family::TensorQ, 1);
  static constexpr double pts[4][2] = {{-0.25, 0.25}, {-0.25, -0.25}, {0.25, 0.25}, {0.25, -0.25}};
  Eigen::Matrix4d P;
  for (int r = 0; r < 4; ++r)
    for (int a = 0; a < 4; ++a) P(r, a) = basis_eval(q1, a, pts[r][0], pts[r][1]);
  return P;
}

Eigen::Vector4cd q1_mode_solution(int m, double k, double dx, double dv, const Eigen::Vector4cd& upsilon, double t) {
  const Q1Blocks b = q1_blocks(m, k, dx, dv);
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(b.G);
  const Eigen::Matrix4cd Vm = es.eigenvectors();
  const Eigen::Vector4cd a = Vm.fullPivLu().solve(upsilon);
  Eigen::Vector4cd out = Eigen::Vector4cd::Zero();
  for (int al = 0; al < 4; ++al) out += a(al) * Vm.col(al) * std::exp(es.eigenvalues()(al) * t);
  return out;
}

Eigen::Vector4cd q1_upsilon(double k, double dx, double v_j, double dv, const Equilibrium& eq) {
  const cplx em = std::exp(cplx(0.0, -k * dx / 4)), ep = std::exp(cplx(0.0, k * dx / 4));
  const double fu = eq.value(v_j + dv / 4), fd = eq.value(v_j - dv / 4);
  Eigen::Vector4cd u;
  u << em * fu, em * fd, ep * fu, ep * fd;
  return u;
}

Eigen::MatrixXcd amplification_matrix(const VlasovOperator& op, int j, double k) {
  const int dim = op.spec().dim();
  const Mesh& m = op.mesh();
  const double sgn = m.v_centers[j] > 0.0 ? -1.0 : 1.0;
  const cplx ph = std::exp(cplx(0.0, sgn * k * m.dx));
  Eigen::MatrixXcd G(dim, dim);
  const auto& S = op.x_self(j);
  const auto& N = op.x_neighbor(j);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) G(a, b) = S[a * dim + b] + N[a * dim + b] * ph;
  return G;
}

namespace {

struct PeakRange {
  int first, last;
};

PeakRange peak_range(const Scenario& scenario, const BasisSpec& spec, int first, int last) {
  const bool p0 = spec.degree() == 0;
  const bool lor = scenario.equilibrium.kind == EquilibriumKind::Lorentzian;
  if (first <= 0) first = p0 ? 2 : 1;
  // Higher-order spaces: the initial maximum plus three (Maxwellian) or seven (Lorentzian) recurrences.
  if (last <= 0) last = p0 ? (lor ? 10 : 4) : (lor ? 8 : 4);
  return {first, last};
}

double predicted_recurrence(const Scenario& scenario, const BasisSpec& spec, const Mesh& mesh) {
  return spec.degree() == 0 ? mode_params(scenario.k, mesh.dx, mesh.dv).T_R
                            : 2.0 * std::numbers::pi / (scenario.k * mesh.dv);
}

}  // namespace

RecurrenceReport recurrence_analysis(const Scenario& scenario, const Mesh& mesh, const BasisSpec& spec,
                                     std::vector<double> times, std::vector<double> rho_max, int first_peak,
                                     int last_peak) {
  RecurrenceReport rep;
  rep.basis = spec.name();
  rep.scenario = scenario.name;
  rep.predicted_tr = predicted_recurrence(scenario, spec, mesh);
  const PeakRange range = peak_range(scenario, spec, first_peak, last_peak);

  // Spectral rows for every positive-velocity cell.
  const VlasovOperator op(mesh, spec);
  const bool q1 = spec.family() == Family::TensorQ && spec.degree() == 1;
  for (int j = mesh.Nv / 2; j < mesh.Nv; ++j) {
    const int m = 2 * (j + 1) - mesh.Nv - 1;
    std::array<cplx, 4> eta;
    eta.fill(cplx(std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN()));
    if (q1) {
      eta = q1_spectrum(m, scenario.k, mesh.dx, mesh.dv).eta;
    } else {
      Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(amplification_matrix(op, j, scenario.k));
      std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
      std::sort(ev.begin(), ev.end(), [](cplx a, cplx b) { return a.real() > b.real(); });
      for (std::size_t a = 0; a < std::min<std::size_t>(4, ev.size()); ++a) eta[a] = ev[a];
    }
    rep.rows.emplace_back(m, eta);
  }

  rep.times = std::move(times);
  rep.rho_max = std::move(rho_max);
  PeakOptions po;
  po.include_initial = true;
  po.first = range.first;
  po.last = range.last;
  po.window = 0.4 * rep.predicted_tr;
  const PeakFit fit = peak_fit(rep.times, rep.rho_max, po);
  rep.peaks_found = static_cast<int>(fit.peak_times.size());
  rep.ok = fit.ok;
  rep.message = fit.message;
  rep.measured_tr = std::numeric_limits<double>::quiet_NaN();
  if (fit.ok) {
    rep.measured_tr = fit.period;
    rep.measured_rate = fit.rate;
    rep.relative_error = std::abs(rep.measured_tr - rep.predicted_tr) / rep.predicted_tr;
  }
  return rep;
}

RecurrenceReport predict_vs_measure(const Scenario& scenario, const BasisSpec& spec, const RecurrenceOptions& opt) {
  if (scenario.system != SystemKind::Advection) {
    throw std::invalid_argument("recurrence comparison needs an advection scenario");
  }
  const Mesh mesh = build_mesh(opt.nx, opt.nv, scenario.length, scenario.vc);
  const PeakRange range = peak_range(scenario, spec, opt.first_peak, opt.last_peak);

  StepControl ctl;
  ctl.cfl = opt.cfl;
  ctl.t_end = opt.t_end > 0.0 ? opt.t_end : predicted_recurrence(scenario, spec, mesh) * (range.last - 1 + 0.5);
  ctl.diag_every = ctl.t_end;
  std::vector<double> times, rho_max;
  RunHooks hooks;
  hooks.on_step = [&](double t, const DGField& f, const ElectricFieldPoly&) {
    times.push_back(t);
    rho_max.push_back(density_max(density(f)));
  };
  run(scenario, mesh, spec, ctl, hooks);
  return recurrence_analysis(scenario, mesh, spec, std::move(times), std::move(rho_max), range.first, range.last);
}

void write_recurrence_csv(std::ostream& out, const RecurrenceReport& report) {
  out << "m,re_eta1,re_eta2,re_eta3,re_eta4,im_eta1,im_eta2,im_eta3,im_eta4,predicted_tr,measured_tr\n";
  char buf[64];
  for (const auto& [m, eta] : report.rows) {
    out << m;
    for (int a = 0; a < 4; ++a) {
      std::snprintf(buf, sizeof buf, ",%.17g", eta[a].real());
      out << buf;
    }
    for (int a = 0; a < 4; ++a) {
      std::snprintf(buf, sizeof buf, ",%.17g", eta[a].imag());
      out << buf;
    }
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g\n", report.predicted_tr, report.measured_tr);
    out << buf;
  }
}

}  // namespace vpdg
