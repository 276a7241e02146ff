#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "vpdg/basis.hpp"
#include "vpdg/mesh.hpp"
#include "vpdg/polynomial.hpp"

namespace vpdg {

/// Modal DG representation of f_h. Coefficients are cell-major:
/// coeffs[(i * Nv + j) * dim + a] multiplies L_px(xi) L_pv(eta) in cell (i, j).
class DGField {
 public:
  DGField(Mesh mesh, BasisSpec spec);

  const Mesh& mesh() const { return mesh_; }
  const BasisSpec& spec() const { return spec_; }
  int dim() const { return spec_.dim(); }

  std::vector<double>& coeffs() { return coeffs_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  double* cell(int i, int j) { return coeffs_.data() + static_cast<std::size_t>(mesh_.cell_index(i, j)) * dim(); }
  const double* cell(int i, int j) const {
    return coeffs_.data() + static_cast<std::size_t>(mesh_.cell_index(i, j)) * dim();
  }

  double cell_average(int i, int j) const { return cell(i, j)[0]; }

  /// Value of cell (i, j) at reference coordinates (xi, eta) in [-1/2, 1/2]^2.
  double eval_local(int i, int j, double xi, double eta) const;

  /// True when mesh and basis agree.
  bool compatible(const DGField& other) const { return mesh_ == other.mesh_ && spec_ == other.spec_; }

 private:
  Mesh mesh_;
  BasisSpec spec_;
  std::vector<double> coeffs_;
};

using PhaseFunction = std::function<double(double x, double v)>;

/// Cell-wise L2 projection using max(l+2, 8)-point Gauss per direction.
DGField project(const PhaseFunction& f0, const Mesh& mesh, const BasisSpec& spec);

/// Point value. Edges belong to the left/bottom cell. Throws std::out_of_range outside the domain.
double evaluate(const DGField& field, double x, double v);

/// rho_h restricted to each x-cell, stored as orthonormal Legendre coefficients in xi.
struct DensityPoly {
  Mesh mesh;
  int degree = 0;
  std::vector<double> coeffs;  ///< coeffs[i * (degree + 1) + p]

  const double* cell(int i) const { return coeffs.data() + static_cast<std::size_t>(i) * (degree + 1); }
  double eval(double x) const;
  /// Monomial form in xi on cell i.
  Poly cell_monomial(int i) const;
};

/// Exact v-integration of f_h.
DensityPoly density(const DGField& field);

/// Writes `x,v,f` rows sampled at the four quarter points of every cell.
void write_snapshot_csv(const DGField& field, std::ostream& out);

}  // namespace vpdg
