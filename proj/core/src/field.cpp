#include "vpdg/field.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "vpdg/quadrature.hpp"

namespace vpdg {

DGField::DGField(Mesh mesh, BasisSpec spec)
    : mesh_(std::move(mesh)),
      spec_(spec),
      coeffs_(static_cast<std::size_t>(mesh_.cells()) * spec_.dim(), 0.0) {}

double DGField::eval_local(int i, int j, double xi, double eta) const {
  const double* c = cell(i, j);
  double lx[kMaxDegree + 1];
  double lv[kMaxDegree + 1];
  for (int p = 0; p <= spec_.degree(); ++p) {
    lx[p] = legendre(p, xi);
    lv[p] = legendre(p, eta);
  }
  double s = 0.0;
  for (int a = 0; a < dim(); ++a) {
    const Mode& m = spec_.mode(a);
    s += c[a] * lx[m.px] * lv[m.pv];
  }
  return s;
}

DGField project(const PhaseFunction& f0, const Mesh& mesh, const BasisSpec& spec) {
  DGField field(mesh, spec);
  const QuadratureRule q = quadrature(QuadratureKind::Gauss, std::max(spec.degree() + 2, 8));
  const int nq = static_cast<int>(q.size());
  const int n1 = spec.degree() + 1;
  std::vector<double> leg(nq * n1);
  for (int k = 0; k < nq; ++k)
    for (int p = 0; p < n1; ++p) leg[k * n1 + p] = legendre(p, q.nodes[k]);

  std::vector<double> vals(nq * nq);
  for (int i = 0; i < mesh.Nx; ++i) {
    for (int j = 0; j < mesh.Nv; ++j) {
      for (int kx = 0; kx < nq; ++kx) {
        const double x = mesh.x_centers[i] + mesh.dx * q.nodes[kx];
        for (int kv = 0; kv < nq; ++kv) {
          const double v = mesh.v_centers[j] + mesh.dv * q.nodes[kv];
          vals[kx * nq + kv] = q.weights[kx] * q.weights[kv] * f0(x, v);
        }
      }
      double* c = field.cell(i, j);
      for (int a = 0; a < spec.dim(); ++a) {
        const Mode& m = spec.mode(a);
        double s = 0.0;
        for (int kx = 0; kx < nq; ++kx)
          for (int kv = 0; kv < nq; ++kv) s += vals[kx * nq + kv] * leg[kx * n1 + m.px] * leg[kv * n1 + m.pv];
        c[a] = s;
      }
    }
  }
  return field;
}

double evaluate(const DGField& field, double x, double v) {
  const Mesh& m = field.mesh();
  const int i = m.x_cell(x);
  const int j = m.v_cell(v);
  const double xi = std::clamp((x - m.x_centers[i]) / m.dx, -0.5, 0.5);
  const double eta = std::clamp((v - m.v_centers[j]) / m.dv, -0.5, 0.5);
  return field.eval_local(i, j, xi, eta);
}

double DensityPoly::eval(double x) const {
  const int i = mesh.x_cell(x);
  const double xi = std::clamp((x - mesh.x_centers[i]) / mesh.dx, -0.5, 0.5);
  const double* c = cell(i);
  double s = 0.0;
  for (int p = 0; p <= degree; ++p) s += c[p] * legendre(p, xi);
  return s;
}

Poly DensityPoly::cell_monomial(int i) const { return legendre_to_monomial(cell(i), degree + 1); }

DensityPoly density(const DGField& field) {
  const Mesh& m = field.mesh();
  const BasisSpec& spec = field.spec();
  DensityPoly rho;
  rho.mesh = m;
  rho.degree = spec.degree();
  const int n1 = rho.degree + 1;
  rho.coeffs.assign(static_cast<std::size_t>(m.Nx) * n1, 0.0);
  // Only pv = 0 modes survive v-integration (orthonormality against L_0 = 1).
  std::vector<int> slot(spec.dim(), -1);
  for (int a = 0; a < spec.dim(); ++a)
    if (spec.mode(a).pv == 0) slot[a] = spec.mode(a).px;
  for (int i = 0; i < m.Nx; ++i) {
    double* r = rho.coeffs.data() + static_cast<std::size_t>(i) * n1;
    for (int j = 0; j < m.Nv; ++j) {
      const double* c = field.cell(i, j);
      for (int a = 0; a < spec.dim(); ++a)
        if (slot[a] >= 0) r[slot[a]] += c[a];
    }
    for (int p = 0; p < n1; ++p) r[p] *= m.dv;
  }
  return rho;
}

void write_snapshot_csv(const DGField& field, std::ostream& out) {
  const Mesh& m = field.mesh();
  static constexpr double kQuarter[2] = {-0.25, 0.25};
  out << "x,v,f\n";
  char buf[96];
  for (int i = 0; i < m.Nx; ++i) {
    for (double xi : kQuarter) {
      const double x = m.x_centers[i] + xi * m.dx;
      for (int j = 0; j < m.Nv; ++j) {
        for (double eta : kQuarter) {
          const double v = m.v_centers[j] + eta * m.dv;
          std::snprintf(buf, sizeof buf, "%.10g,%.10g,%.17g\n", x, v, field.eval_local(i, j, xi, eta));
          out << buf;
        }
      }
    }
  }
}

}  // namespace vpdg
