#pragma once

#include <vector>

namespace vpdg {

/// Dense univariate polynomial in monomial form, coefficient k multiplies s^k.
using Poly = std::vector<double>;

double poly_eval(const Poly& p, double s);
Poly poly_derivative(const Poly& p);
/// Antiderivative vanishing at s = a.
Poly poly_antiderivative(const Poly& p, double a);
Poly poly_multiply(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b, double scale_b = 1.0);
double poly_integral(const Poly& p, double a, double b);

/// Maximum of |p| over [a, b]; critical points located by sign scan and bisection.
double poly_max_abs(const Poly& p, double a, double b);
/// Maximum of p over [a, b].
double poly_max(const Poly& p, double a, double b);

/// Monomial coefficients (in xi) of sum_p c[p] L_p(xi), L_p the orthonormal Legendre polynomials.
Poly legendre_to_monomial(const double* c, int n);

}  // namespace vpdg
