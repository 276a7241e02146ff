#include "vpdg/basis.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

#include "vpdg/quadrature.hpp"

namespace vpdg {

BasisSpec::BasisSpec(Family family, int degree) : family_(family), degree_(degree) {
  if (degree < 0 || degree > kMaxDegree) {
    throw std::invalid_argument("basis degree must be in [0, " + std::to_string(kMaxDegree) + "]");
  }
  const int max_total = family == Family::TensorQ ? 2 * degree : degree;
  for (int total = 0; total <= max_total; ++total) {
    for (int px = std::min(total, degree); px >= 0; --px) {
      const int pv = total - px;
      if (pv > degree) continue;
      modes_.push_back({px, pv});
    }
  }
}

int BasisSpec::index_of(int px, int pv) const {
  for (int a = 0; a < dim(); ++a) {
    if (modes_[a].px == px && modes_[a].pv == pv) return a;
  }
  return -1;
}

std::string BasisSpec::name() const {
  return (family_ == Family::TensorQ ? "Q" : "P") + std::to_string(degree_);
}

BasisSpec parse_basis(const std::string& text) {
  if (text.size() != 2 || !std::isdigit(static_cast<unsigned char>(text[1]))) {
    throw std::invalid_argument("unrecognized basis '" + text + "' (expected q<l> or p<l>)");
  }
  const char f = static_cast<char>(std::tolower(static_cast<unsigned char>(text[0])));
  if (f != 'q' && f != 'p') {
    throw std::invalid_argument("unrecognized basis family in '" + text + "'");
  }
  return BasisSpec(f == 'q' ? Family::TensorQ : Family::TotalDegreeP, text[1] - '0');
}

int basis_dimension(Family family, int degree) {
  return family == Family::TensorQ ? (degree + 1) * (degree + 1) : (degree + 1) * (degree + 2) / 2;
}

double legendre(int p, double xi) {
  const double y = 2.0 * xi;
  double p0 = 1.0;
  double p1 = y;
  if (p == 0) return 1.0;
  for (int k = 1; k < p; ++k) {
    const double p2 = ((2.0 * k + 1.0) * y * p1 - k * p0) / (k + 1.0);
    p0 = p1;
    p1 = p2;
  }
  return std::sqrt(2.0 * p + 1.0) * p1;
}

double legendre_derivative(int p, double xi) {
  // P'_{k+1} = P'_{k-1} + (2k+1) P_k, chain rule factor 2 for y = 2 xi.
  const double y = 2.0 * xi;
  if (p == 0) return 0.0;
  double pk_minus = 1.0;  // P_0
  double pk = y;          // P_1
  double dk_minus = 0.0;  // P_0'
  double dk = 1.0;        // P_1'
  for (int k = 1; k < p; ++k) {
    const double pnext = ((2.0 * k + 1.0) * y * pk - k * pk_minus) / (k + 1.0);
    const double dnext = dk_minus + (2.0 * k + 1.0) * pk;
    pk_minus = pk;
    pk = pnext;
    dk_minus = dk;
    dk = dnext;
  }
  return 2.0 * std::sqrt(2.0 * p + 1.0) * dk;
}

double basis_eval(const BasisSpec& spec, int mode_index, double xi, double eta) {
  if (mode_index < 0 || mode_index >= spec.dim()) {
    throw std::out_of_range("basis_eval: mode index " + std::to_string(mode_index) +
                            " outside [0, " + std::to_string(spec.dim()) + ")");
  }
  const Mode& m = spec.mode(mode_index);
  return legendre(m.px, xi) * legendre(m.pv, eta);
}

Reference1D::Reference1D(int degree) : n(degree + 1) {
  const QuadratureRule q = quadrature(QuadratureKind::Gauss, n + 2);
  stiffness.assign(n * n, 0.0);
  moment1.assign(n * n, 0.0);
  right.resize(n);
  left.resize(n);
  mean_pow0.assign(n, 0.0);
  mean_pow1.assign(n, 0.0);
  mean_pow2.assign(n, 0.0);
  for (int p = 0; p < n; ++p) {
    right[p] = legendre(p, 0.5);
    left[p] = legendre(p, -0.5);
    for (std::size_t k = 0; k < q.size(); ++k) {
      const double s = q.nodes[k];
      const double w = q.weights[k];
      const double lp = legendre(p, s);
      mean_pow0[p] += w * lp;
      mean_pow1[p] += w * s * lp;
      mean_pow2[p] += w * s * s * lp;
      for (int r = 0; r < n; ++r) {
        stiffness[p * n + r] += w * legendre(r, s) * legendre_derivative(p, s);
        moment1[p * n + r] += w * s * lp * legendre(r, s);
      }
    }
  }
}

std::vector<double> legendre_monomial(int p) {
  // Build P_k(y) in powers of y, then substitute y = 2 xi.
  std::vector<double> pkm(1, 1.0);
  std::vector<double> pk = {0.0, 1.0};
  std::vector<double> res;
  if (p == 0) {
    res = pkm;
  } else {
    for (int k = 1; k < p; ++k) {
      std::vector<double> next(k + 2, 0.0);
      for (int i = 0; i <= k; ++i) next[i + 1] += (2.0 * k + 1.0) * pk[i] / (k + 1.0);
      for (int i = 0; i < static_cast<int>(pkm.size()); ++i) next[i] -= k * pkm[i] / (k + 1.0);
      pkm = pk;
      pk = next;
    }
    res = pk;
  }
  const double norm = std::sqrt(2.0 * p + 1.0);
  double scale = 1.0;
  for (double& c : res) {
    c *= norm * scale;
    scale *= 2.0;
  }
  return res;
}

}  // namespace vpdg
