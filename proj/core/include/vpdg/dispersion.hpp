#pragma once

#include <complex>

namespace vpdg {

using cplx = std::complex<double>;

/// Faddeeva function w(z) = e^{-z^2} erfc(-i z), valid in the whole complex plane.
cplx faddeeva(cplx z);

/// Plasma dispersion function Z(z) = i sqrt(pi) w(z), analytically continued below the real axis.
cplx plasma_Z(cplx z);
/// Z'(z) = -2 (1 + z Z(z)).
cplx plasma_Z_prime(cplx z);

/// Maxwellian dielectric eps(k, omega) = 1 + (1 + zeta Z(zeta)) / k^2, zeta = omega / (sqrt(2) k).
cplx epsilon_maxwellian(double k, cplx omega);

struct LandauRoot {
  double k = 0.0;
  double omega_real = 0.0;
  double gamma = 0.0;  ///< positive means damping: omega = omega_real - i gamma
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  double last_residuals[3] = {0.0, 0.0, 0.0};  ///< |eps| at the last three iterates, oldest first
};

/// Newton iteration from the Bohm-Gross guess sqrt(1 + 3k^2) - 0.1 i. Throws std::invalid_argument
/// for k outside [0.2, 1]; non-convergence is reported through `converged`.
LandauRoot solve_landau_root(double k);

}  // namespace vpdg
