#include "vpdg/dispersion.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vpdg {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;

// Upper half-plane (Im z >= 0).
cplx faddeeva_upper(cplx z) {
  const double az = std::abs(z);
  if (z.imag() <= 1.0 && az <= 5.0) {
    // w = e^{-z^2} (1 + 2i/sqrt(pi) sum z^{2n+1} / (n! (2n+1)))
    const cplx z2 = z * z;
    cplx term = z;  // z^{2n+1} / n!
    cplx sum = z;
    for (int n = 1; n < 200; ++n) {
      term *= z2 / static_cast<double>(n);
      const cplx add = term / static_cast<double>(2 * n + 1);
      sum += add;
      if (std::abs(add) < 1e-17 * std::abs(sum)) break;
    }
    return std::exp(-z2) * (1.0 + cplx(0.0, 2.0 / kSqrtPi) * sum);
  }
  // Laplace continued fraction, evaluated bottom-up:
  // w = (i/sqrt(pi)) / (z - (1/2)/(z - 1/(z - (3/2)/(z - ...))))
  const int N = az < 8.0 ? 120 : (az < 20.0 ? 60 : 30);
  cplx r = z;
  for (int n = N; n >= 1; --n) r = z - (0.5 * n) / r;
  return cplx(0.0, 1.0 / kSqrtPi) / r;
}

}  // namespace

cplx faddeeva(cplx z) {
  if (z.imag() >= 0.0) return faddeeva_upper(z);
  // Reflection w(z) = 2 e^{-z^2} - w(-z).
  const cplx e = std::exp(-z * z);
  if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
    throw std::overflow_error("faddeeva: exp(-z^2) overflows deep in the lower half-plane");
  }
  return 2.0 * e - faddeeva_upper(-z);
}

cplx plasma_Z(cplx z) { return cplx(0.0, kSqrtPi) * faddeeva(z); }

cplx plasma_Z_prime(cplx z) { return -2.0 * (1.0 + z * plasma_Z(z)); }

cplx epsilon_maxwellian(double k, cplx omega) {
  const cplx zeta = omega / (std::numbers::sqrt2 * k);
  return 1.0 + (1.0 + zeta * plasma_Z(zeta)) / (k * k);
}

LandauRoot solve_landau_root(double k) {
  if (k < 0.2 || k > 1.0) throw std::invalid_argument("root tracking is supported for 0.2 <= k <= 1");
  LandauRoot r;
  r.k = k;
  cplx w(std::sqrt(1.0 + 3.0 * k * k), -0.1);
  const double s = std::numbers::sqrt2 * k;
  for (int it = 1; it <= 100; ++it) {
    const cplx zeta = w / s;
    const cplx Z = plasma_Z(zeta);
    const cplx eps = 1.0 + (1.0 + zeta * Z) / (k * k);
    // d eps / d omega = (Z + zeta Z') / (k^2 s)
    const cplx deps = (Z + zeta * plasma_Z_prime(zeta)) / (k * k * s);
    r.last_residuals[0] = r.last_residuals[1];
    r.last_residuals[1] = r.last_residuals[2];
    r.last_residuals[2] = std::abs(eps);
    r.iterations = it;
    if (std::abs(eps) < 1e-13) {
      r.converged = true;
      break;
    }
    w -= eps / deps;
  }
  r.omega_real = w.real();
  r.gamma = -w.imag();
  r.residual = std::abs(epsilon_maxwellian(k, w));
  r.converged = r.converged || r.residual < 1e-10;
  return r;
}

}  // namespace vpdg
