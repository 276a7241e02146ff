#pragma once

#include <functional>
#include <vector>

#include "vpdg/field.hpp"
#include "vpdg/poisson.hpp"
#include "vpdg/quadrature.hpp"

namespace vpdg {

/// Upwind flux in x: v f^- for v >= 0, v f^+ otherwise.
double flux_v(double v, double f_minus, double f_plus);
/// Upwind flux in v: E f^- when int_{J_i} E <= 0, E f^+ otherwise.
double flux_E(double cell_int_E, double f_minus, double f_plus, double E_at_node);

/// External field E_ext(x) at a fixed time, added to E_h inside all quadratures.
using ExternalField = std::function<double(double x)>;

/// Semi-discrete DG operators. All outputs are df/dt in modal coordinates (the
/// orthonormal mass matrix is dx dv I). Velocity ghost states beyond +-Vc are zero.
/// Precomputed matrices are read-only, so one instance may serve concurrent calls.
class VlasovOperator {
 public:
  VlasovOperator(const Mesh& mesh, const BasisSpec& spec);

  const Mesh& mesh() const { return mesh_; }
  const BasisSpec& spec() const { return spec_; }

  /// Total field E_h + E_ext at the x-quadrature nodes, layout [i * nodes + n].
  std::vector<double> sample_field(const ElectricFieldPoly& E, const ExternalField& ext = nullptr) const;
  const QuadratureRule& x_rule() const { return xq_; }

  /// v f_x only.
  void advection(const DGField& f, DGField& out) const;
  /// v f_x - E f_v with the field given at x-quadrature nodes.
  void transport(const DGField& f, const std::vector<double>& e_nodes, DGField& out) const;
  /// v f_x - E f'_eq, the linearized system.
  void linear(const DGField& f, const std::vector<double>& e_nodes, DGField& out) const;

  /// Stores f'_eq cell moments used by linear().
  void set_equilibrium_derivative(const std::function<double(double)>& feq_prime);

  /// Cell operator blocks, row-major dim x dim, exposed for spectral analysis.
  const std::vector<double>& x_self(int j) const { return ax_self_[j]; }
  const std::vector<double>& x_neighbor(int j) const { return ax_nb_[j]; }

 private:
  void x_advect_into(const DGField& f, DGField& out) const;
  void v_transport_add(const DGField& f, const std::vector<double>& e_nodes, DGField& out) const;

  Mesh mesh_;
  BasisSpec spec_;
  int n1_;
  int dim_;
  QuadratureRule xq_;
  std::vector<double> lx_nodes_;  // L_p at x nodes, [n * n1 + p]
  // 1D reference pieces
  std::vector<double> D_, H_, pp_, pm_;
  std::vector<std::vector<double>> ax_self_, ax_nb_;
  // v-direction 1D factors: self/neighbour for both upwind branches
  std::vector<double> vs_neg_, vn_neg_, vs_pos_, vn_pos_;
  std::vector<double> g_;  // f'_eq moments [j * n1 + r]
};

/// Convenience wrappers returning a fresh residual field.
DGField rhs_nonlinear(const VlasovOperator& op, const DGField& f, const ElectricFieldPoly& E,
                      const ExternalField& ext = nullptr);
DGField rhs_linear(const VlasovOperator& op, const DGField& f, const ElectricFieldPoly& E);

}  // namespace vpdg
