#include "vpdg/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace vpdg {
namespace {

// P_n(y) and P_n'(y) on [-1, 1] by the three-term recurrence.
void legendre_with_derivative(int n, double y, double& p, double& dp) {
  double p0 = 1.0;
  double p1 = y;
  if (n == 0) {
    p = 1.0;
    dp = 0.0;
    return;
  }
  for (int k = 1; k < n; ++k) {
    const double p2 = ((2.0 * k + 1.0) * y * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  p = p1;
  // Valid away from the endpoints; Gauss nodes are interior.
  dp = n * (y * p1 - p0) / (y * y - 1.0);
}

QuadratureRule gauss(int n) {
  QuadratureRule rule;
  rule.kind = QuadratureKind::Gauss;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double y = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double p = 0.0;
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      legendre_with_derivative(n, y, p, dp);
      const double dy = p / dp;
      y -= dy;
      if (std::abs(dy) < 1e-16) break;
    }
    legendre_with_derivative(n, y, p, dp);
    const double w = 2.0 / ((1.0 - y * y) * dp * dp);
    // Map [-1,1] -> [-1/2,1/2]; weights scale by 1/2 (then sum to 1).
    rule.nodes[i] = -0.5 * y;
    rule.nodes[n - 1 - i] = 0.5 * y;
    rule.weights[i] = 0.5 * w;
    rule.weights[n - 1 - i] = 0.5 * w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

QuadratureRule gauss_lobatto(int n) {
  QuadratureRule rule;
  rule.kind = QuadratureKind::GaussLobatto;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int N = n - 1;  // interior nodes are roots of P_N'
  rule.nodes.front() = -0.5;
  rule.nodes.back() = 0.5;
  rule.weights.front() = rule.weights.back() = 1.0 / (N * (N + 1.0));
  for (int i = 1; i < (n + 1) / 2; ++i) {
    // Chebyshev-Gauss-Lobatto initial guess, Newton on P_N'.
    double y = std::cos(std::numbers::pi * i / N);
    for (int it = 0; it < 100; ++it) {
      double p = 0.0;
      double dp = 0.0;
      legendre_with_derivative(N, y, p, dp);
      // P_N'' from the Legendre ODE: (1-y^2) P'' = 2y P' - N(N+1) P
      const double d2p = (2.0 * y * dp - N * (N + 1.0) * p) / (1.0 - y * y);
      const double dy = dp / d2p;
      y -= dy;
      if (std::abs(dy) < 1e-16) break;
    }
    double p = 0.0;
    double dp = 0.0;
    legendre_with_derivative(N, y, p, dp);
    const double w = 2.0 / (N * (N + 1.0) * p * p);
    rule.nodes[i] = -0.5 * y;
    rule.nodes[n - 1 - i] = 0.5 * y;
    rule.weights[i] = 0.5 * w;
    rule.weights[n - 1 - i] = 0.5 * w;
  }
  if (n % 2 == 1) {
    double p = 0.0;
    double dp = 0.0;
    legendre_with_derivative(N, 0.0, p, dp);
    rule.nodes[n / 2] = 0.0;
    rule.weights[n / 2] = 1.0 / (N * (N + 1.0) * p * p);
  }
  return rule;
}

}  // namespace

QuadratureRule quadrature(QuadratureKind kind, int npts) {
  const int min_pts = kind == QuadratureKind::Gauss ? 1 : 2;
  if (npts < min_pts || npts > kMaxQuadraturePoints) {
    throw std::invalid_argument("quadrature: unsupported point count " + std::to_string(npts));
  }
  return kind == QuadratureKind::Gauss ? gauss(npts) : gauss_lobatto(npts);
}

}  // namespace vpdg
