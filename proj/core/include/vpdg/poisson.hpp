#pragma once

#include <vector>

#include "vpdg/field.hpp"
#include "vpdg/mesh.hpp"
#include "vpdg/polynomial.hpp"

namespace vpdg {

/// Continuous periodic piecewise polynomial E_h (degree l+1 per cell) and its potential
/// Phi_h (degree l+2, gauge Phi_h(0) = 0). Each cell stores monomials in xi = (x - x_i)/dx.
struct ElectricFieldPoly {
  Mesh mesh;
  int degree = 0;  ///< degree of E_h per cell
  double C_E = 0.0;
  std::vector<Poly> E;
  std::vector<Poly> Phi;

  double eval_E(double x) const;
  double eval_Phi(double x) const;
  double cell_E(int i, double xi) const { return poly_eval(E[i], xi); }
  double cell_Phi(int i, double xi) const { return poly_eval(Phi[i], xi); }
  /// int_{J_i} E_h dx.
  double cell_integral(int i) const;
  /// int_0^L E_h^2 dx, exact.
  double energy_integral() const;
  /// max |E_h| over [0, L], exact up to root-finding tolerance.
  double max_abs() const;
};

/// Zero field on the mesh (advection runs).
ElectricFieldPoly zero_field(const Mesh& mesh, int degree);

/// E_h = C_E + x - int_0^x rho_h.
ElectricFieldPoly solve_nonlinear(const DensityPoly& rho);
/// E_h = C_E - int_0^x rho_h.
ElectricFieldPoly solve_linear(const DensityPoly& rho);

}  // namespace vpdg
