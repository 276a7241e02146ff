#include "vpdg/diagnostics.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "vpdg/quadrature.hpp"

namespace vpdg {

namespace {

// Sums per-x-column partials in index order so results do not depend on the thread count.
template <class ColumnSum>
double ordered_sum(int Nx, ColumnSum column) {
  std::vector<double> part(Nx, 0.0);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < Nx; ++i) part[i] = column(i);
  double s = 0.0;
  for (double p : part) s += p;
  return s;
}

// int over K_j of v^q L_pv(eta) dv / dv for q = 0, 1, 2.
struct VelocityMoments {
  std::vector<double> m0, m1, m2;  // [j * n1 + p]
  VelocityMoments(const Mesh& m, int degree) {
    const Reference1D ref(degree);
    const int n = degree + 1;
    m0.resize(m.Nv * n);
    m1.resize(m.Nv * n);
    m2.resize(m.Nv * n);
    for (int j = 0; j < m.Nv; ++j) {
      const double vj = m.v_centers[j];
      for (int p = 0; p < n; ++p) {
        const double a0 = ref.mean_pow0[p], a1 = ref.mean_pow1[p], a2 = ref.mean_pow2[p];
        m0[j * n + p] = a0;
        m1[j * n + p] = vj * a0 + m.dv * a1;
        m2[j * n + p] = vj * vj * a0 + 2.0 * vj * m.dv * a1 + m.dv * m.dv * a2;
      }
    }
  }
};

double velocity_moment(const DGField& f, const std::vector<double>& mom) {
  const Mesh& m = f.mesh();
  const BasisSpec& spec = f.spec();
  const int n = spec.degree() + 1;
  std::vector<int> v_modes;  // modes with px = 0 survive x-integration
  for (int a = 0; a < spec.dim(); ++a)
    if (spec.mode(a).px == 0) v_modes.push_back(a);
  return m.dx * m.dv * ordered_sum(m.Nx, [&](int i) {
           double s = 0.0;
           for (int j = 0; j < m.Nv; ++j) {
             const double* c = f.cell(i, j);
             for (int a : v_modes) s += c[a] * mom[j * n + spec.mode(a).pv];
           }
           return s;
         });
}

}  // namespace

double total_charge(const DGField& f) {
  const VelocityMoments vm(f.mesh(), f.spec().degree());
  return velocity_moment(f, vm.m0);
}

double total_momentum(const DGField& f) {
  const VelocityMoments vm(f.mesh(), f.spec().degree());
  return velocity_moment(f, vm.m1);
}

double kinetic_energy(const DGField& f) {
  const VelocityMoments vm(f.mesh(), f.spec().degree());
  return 0.5 * velocity_moment(f, vm.m2);
}

double enstrophy(const DGField& f) {
  const Mesh& m = f.mesh();
  const int per_column = m.Nv * f.dim();
  const double* data = f.coeffs().data();
  return m.dx * m.dv * ordered_sum(m.Nx, [&](int i) {
           double s = 0.0;
           const double* c = data + static_cast<std::size_t>(i) * per_column;
           for (int k = 0; k < per_column; ++k) s += c[k] * c[k];
           return s;
         });
}

double entropy(const DGField& f, bool* guarded) {
  const Mesh& m = f.mesh();
  const BasisSpec& spec = f.spec();
  const QuadratureRule q = quadrature(QuadratureKind::Gauss, spec.degree() + 2);
  const int nq = static_cast<int>(q.size());
  std::vector<double> phi(nq * nq * spec.dim());
  for (int a = 0; a < nq; ++a)
    for (int b = 0; b < nq; ++b)
      for (int d = 0; d < spec.dim(); ++d)
        phi[(a * nq + b) * spec.dim() + d] = basis_eval(spec, d, q.nodes[a], q.nodes[b]);
  std::vector<char> flag(m.Nx, 0);
  const double s = ordered_sum(m.Nx, [&](int i) {
    double acc = 0.0;
    for (int j = 0; j < m.Nv; ++j) {
      const double* c = f.cell(i, j);
      for (int a = 0; a < nq; ++a)
        for (int b = 0; b < nq; ++b) {
          const double* p = phi.data() + (a * nq + b) * spec.dim();
          double val = 0.0;
          for (int d = 0; d < spec.dim(); ++d) val += c[d] * p[d];
          if (val > 0.0) {
            acc -= q.weights[a] * q.weights[b] * val * std::log(val);
          } else {
            flag[i] = 1;
          }
        }
    }
    return acc;
  });
  if (guarded) *guarded = std::any_of(flag.begin(), flag.end(), [](char c) { return c != 0; });
  return m.dx * m.dv * s;
}

double linear_energy(const DGField& f, const ElectricFieldPoly& E, const Equilibrium& eq) {
  if (!eq.has_energy_weight()) {
    throw std::invalid_argument("linear energy needs an equilibrium with an analytic v/f' ratio");
  }
  const Mesh& m = f.mesh();
  const BasisSpec& spec = f.spec();
  const int n = spec.degree() + 1;
  const QuadratureRule q = quadrature(QuadratureKind::Gauss, 8);
  const int nq = static_cast<int>(q.size());
  std::vector<double> lv(nq * n);
  for (int k = 0; k < nq; ++k)
    for (int p = 0; p < n; ++p) lv[k * n + p] = legendre(p, q.nodes[k]);
  std::vector<double> w(m.Nv * nq);
  for (int j = 0; j < m.Nv; ++j)
    for (int k = 0; k < nq; ++k) w[j * nq + k] = q.weights[k] * eq.energy_weight(m.v_centers[j] + m.dv * q.nodes[k]);
  // x-orthonormality: int f^2 dxi = sum_px g_px(eta)^2 with g_px = sum_pv c_(px,pv) L_pv.
  const double kin = ordered_sum(m.Nx, [&](int i) {
    double acc = 0.0;
    std::vector<double> g(n);
    for (int j = 0; j < m.Nv; ++j) {
      const double* c = f.cell(i, j);
      for (int k = 0; k < nq; ++k) {
        std::fill(g.begin(), g.end(), 0.0);
        for (int a = 0; a < spec.dim(); ++a) g[spec.mode(a).px] += c[a] * lv[k * n + spec.mode(a).pv];
        double s2 = 0.0;
        for (double x : g) s2 += x * x;
        acc += w[j * nq + k] * s2;
      }
    }
    return acc;
  });
  return 0.5 * m.dx * m.dv * kin + 0.5 * E.energy_integral();
}

double log_fourier_mode(const ElectricFieldPoly& E, int n) {
  if (n < 1) throw std::invalid_argument("Fourier mode index must be >= 1");
  const Mesh& m = E.mesh;
  const QuadratureRule q = quadrature(QuadratureKind::Gauss, 8);
  const double kn = 2.0 * std::numbers::pi * n / m.L;
  double cs = 0.0, sn = 0.0;
  for (int i = 0; i < m.Nx; ++i) {
    for (std::size_t k = 0; k < q.size(); ++k) {
      const double x = m.x_centers[i] + m.dx * q.nodes[k];
      const double e = q.weights[k] * E.cell_E(i, q.nodes[k]);
      cs += e * std::cos(kn * x);
      sn += e * std::sin(kn * x);
    }
  }
  const double mod = m.dx * std::hypot(cs, sn) / m.L;
  // Below the rounding level of the field itself the coefficient is zero.
  const double rms = std::sqrt(E.energy_integral() / m.L);
  if (!(mod > 64.0 * std::numeric_limits<double>::epsilon() * rms)) return kLogFourierFloor;
  return std::max(std::log10(mod), kLogFourierFloor);
}

double density_max(const DensityPoly& rho) {
  double mx = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < rho.mesh.Nx; ++i) mx = std::max(mx, poly_max(rho.cell_monomial(i), -0.5, 0.5));
  return mx;
}

DiagnosticsRecord record(const DGField& f, const ElectricFieldPoly& E, double t, const Equilibrium* equilibrium) {
  DiagnosticsRecord r;
  r.t = t;
  const VelocityMoments vm(f.mesh(), f.spec().degree());
  r.charge = velocity_moment(f, vm.m0);
  r.momentum = velocity_moment(f, vm.m1);
  r.kinetic = 0.5 * velocity_moment(f, vm.m2);
  r.electrostatic = 0.5 * E.energy_integral();
  r.total = r.kinetic + r.electrostatic;
  r.enstrophy = enstrophy(f);
  r.entropy = entropy(f, &r.entropy_guarded);
  r.hlinear = equilibrium && equilibrium->has_energy_weight() ? linear_energy(f, E, *equilibrium)
                                                              : std::numeric_limits<double>::quiet_NaN();
  for (int n = 1; n <= 4; ++n) r.logfm[n - 1] = log_fourier_mode(E, n);
  r.rho_max = density_max(density(f));
  r.e_max = E.max_abs();
  return r;
}

std::vector<ScatterPoint> bgk_scatter(const DGField& f, const ElectricFieldPoly& E) {
  const Mesh& m = f.mesh();
  static constexpr double kQuarter[2] = {-0.25, 0.25};
  std::vector<ScatterPoint> pts;
  pts.reserve(static_cast<std::size_t>(m.cells()) * 4);
  for (int i = 0; i < m.Nx; ++i)
    for (double xi : kQuarter) {
      const double phi = E.cell_Phi(i, xi);
      for (int j = 0; j < m.Nv; ++j)
        for (double eta : kQuarter) {
          const double v = m.v_centers[j] + eta * m.dv;
          pts.push_back({0.5 * v * v - phi, f.eval_local(i, j, xi, eta)});
        }
    }
  return pts;
}

double bgk_spread(const std::vector<ScatterPoint>& pts, int bins) {
  if (pts.empty() || bins < 1) return 0.0;
  double lo = pts.front().eps, hi = lo;
  for (const auto& p : pts) {
    lo = std::min(lo, p.eps);
    hi = std::max(hi, p.eps);
  }
  const double width = (hi - lo) / bins;
  const auto bin_of = [&](double eps) {
    const int b = width > 0.0 ? static_cast<int>((eps - lo) / width) : 0;
    return std::clamp(b, 0, bins - 1);
  };
  // Two passes: the one-pass variance cancels badly when f is nearly constant within a bin.
  std::vector<double> cnt(bins, 0.0), mean(bins, 0.0), dev2(bins, 0.0);
  for (const auto& p : pts) {
    const int b = bin_of(p.eps);
    cnt[b] += 1.0;
    mean[b] += p.f;
  }
  for (int b = 0; b < bins; ++b)
    if (cnt[b] > 0.0) mean[b] /= cnt[b];
  for (const auto& p : pts) {
    const int b = bin_of(p.eps);
    dev2[b] += (p.f - mean[b]) * (p.f - mean[b]);
  }
  double acc = 0.0, total = 0.0;
  for (int b = 0; b < bins; ++b) {
    if (cnt[b] < 2.0) continue;
    acc += dev2[b];
    total += cnt[b];
  }
  return total > 0.0 ? std::sqrt(acc / total) : 0.0;
}

const char* const kDiagnosticsHeader =
    "t,charge,momentum,kinetic,electrostatic,total,enstrophy,entropy,hlinear,logfm1,logfm2,logfm3,logfm4,rhomax,emax";

void write_diagnostics_header(std::ostream& out) { out << kDiagnosticsHeader << '\n'; }

void write_diagnostics_row(std::ostream& out, const DiagnosticsRecord& r) {
  // Shortest representation that reads back to the same double.
  const double v[] = {r.t,        r.charge,   r.momentum, r.kinetic,  r.electrostatic,
                      r.total,    r.enstrophy, r.entropy, r.hlinear,  r.logfm[0],
                      r.logfm[1], r.logfm[2], r.logfm[3], r.rho_max,  r.e_max};
  char buf[32 * std::size(v)];
  char* p = buf;
  for (std::size_t k = 0; k < std::size(v); ++k) {
    if (k) *p++ = ',';
    if (std::isnan(v[k])) {
      p = std::copy_n("nan", 3, p);
    } else {
      p = std::to_chars(p, buf + sizeof buf, v[k]).ptr;
    }
  }
  *p++ = '\n';
  out.write(buf, p - buf);
}

void write_bgk_csv(std::ostream& out, const std::vector<ScatterPoint>& pts) {
  out << "eps,f\n";
  char buf[64];
  for (const auto& p : pts) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", p.eps, p.f);
    out << buf;
  }
}

}  // namespace vpdg
