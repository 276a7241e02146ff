#include "vpdg/limiter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vpdg/quadrature.hpp"

namespace vpdg {

LimiterPointSet limiter_points(int degree) {
  LimiterPointSet s;
  if (degree < 1) return s;
  const QuadratureRule g = quadrature(QuadratureKind::Gauss, degree + 1);
  const QuadratureRule gl = quadrature(QuadratureKind::GaussLobatto, degree + 1);
  for (double a : g.nodes)
    for (double b : gl.nodes) {
      s.xi.push_back(a);
      s.eta.push_back(b);
    }
  for (double a : gl.nodes)
    for (double b : g.nodes) {
      s.xi.push_back(a);
      s.eta.push_back(b);
    }
  return s;
}

PositivityLimiter::PositivityLimiter(const BasisSpec& spec) : spec_(spec), pts_(limiter_points(spec.degree())) {
  const int dim = spec.dim();
  vals_.resize(pts_.size() * dim);
  for (std::size_t k = 0; k < pts_.size(); ++k)
    for (int a = 0; a < dim; ++a) vals_[k * dim + a] = basis_eval(spec, a, pts_.xi[k], pts_.eta[k]);
}

namespace {

template <int DIM>
double min_fixed(const double* vals, std::size_t npts, const double* c) {
  double T = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < npts; ++k) {
    const double* row = vals + k * DIM;
    double s = 0.0;
    for (int a = 0; a < DIM; ++a) s += row[a] * c[a];
    T = std::min(T, s);
  }
  return T;
}

}  // namespace

double PositivityLimiter::min_on_points(const double* c) const {
  const std::size_t n = pts_.size();
  if (n == 0) return c[0];
  const double* v = vals_.data();
  switch (spec_.dim()) {
    case 3: return min_fixed<3>(v, n, c);
    case 4: return min_fixed<4>(v, n, c);
    case 6: return min_fixed<6>(v, n, c);
    case 9: return min_fixed<9>(v, n, c);
    case 10: return min_fixed<10>(v, n, c);
    case 16: return min_fixed<16>(v, n, c);
    default: break;
  }
  const int dim = spec_.dim();
  double T = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    double s = 0.0;
    for (int a = 0; a < dim; ++a) s += v[k * dim + a] * c[a];
    T = std::min(T, s);
  }
  return T;
}

double PositivityLimiter::theta(const double* c) const {
  const double avg = c[0];
  if (avg < 0.0) return 0.0;
  const double T = min_on_points(c);
  if (T >= 0.0 || T == avg) return 1.0;
  return std::min(1.0, std::abs(avg) / std::abs(T - avg));
}

LimiterStats PositivityLimiter::apply(DGField& f) const {
  const int dim = spec_.dim();
  const long cells = f.mesh().cells();
  double* data = f.coeffs().data();
  long limited = 0, negative = 0;
#pragma omp parallel for schedule(static) reduction(+ : limited, negative)
  for (long c = 0; c < cells; ++c) {
    double* cc = data + c * dim;
    if (cc[0] < 0.0) ++negative;
    const double th = theta(cc);
    if (th < 1.0) {
      ++limited;
      for (int a = 1; a < dim; ++a) cc[a] *= th;
    }
  }
  return {limited, negative};
}

DGField apply_positivity(const DGField& f, LimiterStats* stats) {
  DGField out = f;
  const LimiterStats s = PositivityLimiter(f.spec()).apply(out);
  if (stats) *stats = s;
  return out;
}

}  // namespace vpdg
