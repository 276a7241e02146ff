#include "vpdg/poisson.hpp"

#include <algorithm>
#include <cmath>

namespace vpdg {

namespace {

int locate(const Mesh& m, double x, double& xi) {
  const int i = m.x_cell(x);
  xi = std::clamp((x - m.x_centers[i]) / m.dx, -0.5, 0.5);
  return i;
}

// Shared core: E = C_E - R, Phi = Q - C_E x, with R = int_0^x s, Q = int_0^x R and
// C_E = Q(L)/L. `s` is the net source (rho - 1 for the nonlinear system).
ElectricFieldPoly solve_from_source(const Mesh& m, const std::vector<Poly>& s, int degree) {
  ElectricFieldPoly out;
  out.mesh = m;
  out.degree = degree + 1;
  out.E.resize(m.Nx);
  out.Phi.resize(m.Nx);
  std::vector<Poly> R(m.Nx), Q(m.Nx);
  double r_left = 0.0;
  double q_left = 0.0;
  for (int i = 0; i < m.Nx; ++i) {
    // d/dxi = dx d/dx, so int_{x_{i-1/2}}^x g = dx * int_{-1/2}^xi g.
    Poly r = poly_antiderivative(s[i], -0.5);
    for (double& c : r) c *= m.dx;
    r[0] += r_left;
    Poly q = poly_antiderivative(r, -0.5);
    for (double& c : q) c *= m.dx;
    q[0] += q_left;
    r_left = poly_eval(r, 0.5);
    q_left = poly_eval(q, 0.5);
    R[i] = std::move(r);
    Q[i] = std::move(q);
  }
  out.C_E = q_left / m.L;
  for (int i = 0; i < m.Nx; ++i) {
    Poly e = R[i];
    for (double& c : e) c = -c;
    e[0] += out.C_E;
    out.E[i] = std::move(e);
    // x = x_i + dx xi
    Poly phi = Q[i];
    phi.resize(std::max<std::size_t>(phi.size(), 2), 0.0);
    phi[0] -= out.C_E * m.x_centers[i];
    phi[1] -= out.C_E * m.dx;
    out.Phi[i] = std::move(phi);
  }
  return out;
}

}  // namespace

double ElectricFieldPoly::eval_E(double x) const {
  double xi;
  const int i = locate(mesh, x, xi);
  return poly_eval(E[i], xi);
}

double ElectricFieldPoly::eval_Phi(double x) const {
  double xi;
  const int i = locate(mesh, x, xi);
  return poly_eval(Phi[i], xi);
}

double ElectricFieldPoly::cell_integral(int i) const { return mesh.dx * poly_integral(E[i], -0.5, 0.5); }

double ElectricFieldPoly::energy_integral() const {
  double s = 0.0;
  for (int i = 0; i < mesh.Nx; ++i) s += mesh.dx * poly_integral(poly_multiply(E[i], E[i]), -0.5, 0.5);
  return s;
}

double ElectricFieldPoly::max_abs() const {
  double m = 0.0;
  for (int i = 0; i < mesh.Nx; ++i) m = std::max(m, poly_max_abs(E[i], -0.5, 0.5));
  return m;
}

ElectricFieldPoly zero_field(const Mesh& mesh, int degree) {
  ElectricFieldPoly out;
  out.mesh = mesh;
  out.degree = degree + 1;
  out.E.assign(mesh.Nx, Poly{0.0});
  out.Phi.assign(mesh.Nx, Poly{0.0});
  return out;
}

ElectricFieldPoly solve_nonlinear(const DensityPoly& rho) {
  std::vector<Poly> s(rho.mesh.Nx);
  for (int i = 0; i < rho.mesh.Nx; ++i) {
    s[i] = rho.cell_monomial(i);
    s[i][0] -= 1.0;
  }
  return solve_from_source(rho.mesh, s, rho.degree);
}

ElectricFieldPoly solve_linear(const DensityPoly& rho) {
  std::vector<Poly> s(rho.mesh.Nx);
  for (int i = 0; i < rho.mesh.Nx; ++i) s[i] = rho.cell_monomial(i);
  return solve_from_source(rho.mesh, s, rho.degree);
}

}  // namespace vpdg
