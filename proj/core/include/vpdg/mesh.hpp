#pragma once

#include <vector>

namespace vpdg {

/// Uniform tensor-product partition of [0, L] x [-Vc, Vc].
struct Mesh {
  int Nx = 0;
  int Nv = 0;
  double L = 0.0;
  double Vc = 0.0;
  double dx = 0.0;
  double dv = 0.0;
  std::vector<double> x_edges;
  std::vector<double> v_edges;
  std::vector<double> x_centers;
  std::vector<double> v_centers;

  int cells() const { return Nx * Nv; }
  int cell_index(int i, int j) const { return i * Nv + j; }

  /// Owning cell of a point; an edge belongs to the cell on its left/bottom.
  /// Throws std::out_of_range outside the domain.
  int x_cell(double x) const;
  int v_cell(double v) const;
};

/// Throws std::invalid_argument for odd Nv, Nx < 1, Nv < 2 or non-positive extents.
Mesh build_mesh(int Nx, int Nv, double L, double Vc);

inline bool operator==(const Mesh& a, const Mesh& b) {
  return a.Nx == b.Nx && a.Nv == b.Nv && a.L == b.L && a.Vc == b.Vc;
}

}  // namespace vpdg
