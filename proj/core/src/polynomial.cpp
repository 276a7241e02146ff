#include "vpdg/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "vpdg/basis.hpp"

namespace vpdg {

double poly_eval(const Poly& p, double s) {
  double r = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * s + *it;
  return r;
}

Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return Poly{0.0};
  Poly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = k * p[k];
  return d;
}

Poly poly_antiderivative(const Poly& p, double a) {
  Poly q(p.size() + 1, 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) q[k + 1] = p[k] / (k + 1.0);
  q[0] = -poly_eval(q, a);
  return q;
}

Poly poly_multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return Poly{0.0};
  Poly r(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Poly poly_add(const Poly& a, const Poly& b, double scale_b) {
  Poly r(std::max(a.size(), b.size()), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += scale_b * b[i];
  return r;
}

double poly_integral(const Poly& p, double a, double b) {
  const Poly q = poly_antiderivative(p, a);
  return poly_eval(q, b);
}

namespace {

// Roots of d in [a, b] by scanning for sign changes on a fine grid then bisecting.
template <class Visit>
void for_each_critical_point(const Poly& p, double a, double b, Visit visit) {
  const Poly d = poly_derivative(p);
  constexpr int kScan = 32;
  double s0 = a;
  double d0 = poly_eval(d, s0);
  for (int k = 1; k <= kScan; ++k) {
    const double s1 = a + (b - a) * k / kScan;
    const double d1 = poly_eval(d, s1);
    if (d0 == 0.0) visit(s0);
    if ((d0 < 0.0 && d1 > 0.0) || (d0 > 0.0 && d1 < 0.0)) {
      double lo = s0, hi = s1, flo = d0;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = poly_eval(d, mid);
        if ((fm < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      visit(0.5 * (lo + hi));
    }
    s0 = s1;
    d0 = d1;
  }
}

}  // namespace

double poly_max(const Poly& p, double a, double b) {
  double m = std::max(poly_eval(p, a), poly_eval(p, b));
  for_each_critical_point(p, a, b, [&](double s) { m = std::max(m, poly_eval(p, s)); });
  return m;
}

double poly_max_abs(const Poly& p, double a, double b) {
  double m = std::max(std::abs(poly_eval(p, a)), std::abs(poly_eval(p, b)));
  for_each_critical_point(p, a, b, [&](double s) { m = std::max(m, std::abs(poly_eval(p, s))); });
  return m;
}

Poly legendre_to_monomial(const double* c, int n) {
  Poly r(std::max(n, 1), 0.0);
  for (int p = 0; p < n; ++p) {
    const Poly lp = legendre_monomial(p);
    for (std::size_t k = 0; k < lp.size(); ++k) r[k] += c[p] * lp[k];
  }
  return r;
}

}  // namespace vpdg
