#pragma once

#include <cstddef>
#include <vector>

namespace vpdg {

enum class QuadratureKind { Gauss, GaussLobatto };

/// One-dimensional rule on the reference interval [-1/2, 1/2].
/// Weights are normalized to sum to one (unit reference measure).
struct QuadratureRule {
  QuadratureKind kind = QuadratureKind::Gauss;
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

/// Largest point count accepted by quadrature().
inline constexpr int kMaxQuadraturePoints = 64;

/// Gauss-Legendre (npts >= 1) or Gauss-Lobatto (npts >= 2) rule.
/// Gauss with n points is exact to degree 2n-1, Lobatto to 2n-3.
/// Throws std::invalid_argument outside [1 or 2, kMaxQuadraturePoints].
QuadratureRule quadrature(QuadratureKind kind, int npts);

}  // namespace vpdg
