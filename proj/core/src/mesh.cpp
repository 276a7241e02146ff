#include "vpdg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vpdg {

Mesh build_mesh(int Nx, int Nv, double L, double Vc) {
  if (Nx < 1) throw std::invalid_argument("nx must be at least 1");
  if (Nv < 2) throw std::invalid_argument("nv must be at least 2");
  if (Nv % 2 != 0) throw std::invalid_argument("nv must be even");
  if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("length must be positive");
  if (!(Vc > 0.0) || !std::isfinite(Vc)) throw std::invalid_argument("vc must be positive");

  Mesh m;
  m.Nx = Nx;
  m.Nv = Nv;
  m.L = L;
  m.Vc = Vc;
  m.dx = L / Nx;
  m.dv = 2.0 * Vc / Nv;
  m.x_edges.resize(Nx + 1);
  m.v_edges.resize(Nv + 1);
  for (int i = 0; i <= Nx; ++i) m.x_edges[i] = i * m.dx;
  for (int j = 0; j <= Nv; ++j) m.v_edges[j] = -Vc + j * m.dv;
  m.x_edges[Nx] = L;
  m.v_edges[Nv] = Vc;
  m.v_edges[Nv / 2] = 0.0;
  m.x_centers.resize(Nx);
  m.v_centers.resize(Nv);
  for (int i = 0; i < Nx; ++i) m.x_centers[i] = (i + 0.5) * m.dx;
  // Symmetric about v = 0: center of 0-based cell j is (j + 1/2 - Nv/2) dv.
  for (int j = 0; j < Nv; ++j) m.v_centers[j] = (j + 0.5 - 0.5 * Nv) * m.dv;
  return m;
}

namespace {

int owning_cell(const std::vector<double>& edges, double s, const char* axis) {
  if (!(s >= edges.front() && s <= edges.back())) {
    throw std::out_of_range(std::string(axis) + " coordinate outside the mesh");
  }
  // First edge >= s; the cell to its left owns s.
  const auto it = std::lower_bound(edges.begin(), edges.end(), s);
  const int k = static_cast<int>(it - edges.begin());
  return std::max(k - 1, 0);
}

}  // namespace

int Mesh::x_cell(double x) const { return owning_cell(x_edges, x, "x"); }
int Mesh::v_cell(double v) const { return owning_cell(v_edges, v, "v"); }

}  // namespace vpdg
