#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vpdg/field.hpp"
#include "vpdg/poisson.hpp"
#include "vpdg/scenarios.hpp"

namespace vpdg {

/// One time sample of the tracked scalars.
struct DiagnosticsRecord {
  double t = 0.0;
  double charge = 0.0;
  double momentum = 0.0;
  double kinetic = 0.0;
  double electrostatic = 0.0;
  double total = 0.0;
  double enstrophy = 0.0;
  double entropy = 0.0;
  double hlinear = 0.0;  ///< NaN unless an equilibrium was supplied
  std::array<double, 4> logfm{};
  double rho_max = 0.0;
  double e_max = 0.0;
  bool entropy_guarded = false;  ///< some quadrature point had f <= 0
};

DiagnosticsRecord record(const DGField& f, const ElectricFieldPoly& E, double t,
                         const Equilibrium* equilibrium = nullptr);

/// Exact modal moments.
double total_charge(const DGField& f);
double total_momentum(const DGField& f);
double kinetic_energy(const DGField& f);
double enstrophy(const DGField& f);
/// -int f ln f over points with f > 0; `guarded` reports whether any point had f <= 0.
double entropy(const DGField& f, bool* guarded = nullptr);

/// H_L = 1/2 int (-v / f'_eq) f^2 + 1/2 int E^2. Throws for equilibria without an analytic weight.
double linear_energy(const DGField& f, const ElectricFieldPoly& E, const Equilibrium& eq);

inline constexpr double kLogFourierFloor = -30.0;
/// log10 of (1/L) |int_0^L E(x) e^{-i k n x} dx| with k = 2 pi / L.
double log_fourier_mode(const ElectricFieldPoly& E, int n);

/// max over x of rho_h(x).
double density_max(const DensityPoly& rho);

// ---- peak analysis ---------------------------------------------------------

struct PeakOptions {
  int first = 1;                ///< 1-based index of the first peak used in the fit
  int last = 0;                 ///< 1-based index of the last peak (0: all)
  bool include_initial = false; ///< count a maximum at the first sample as peak 1
  double window = 0.0;          ///< keep only peaks maximal within +-window (0: all local maxima)
};

struct PeakFit {
  bool ok = false;
  std::string message;
  std::vector<double> peak_times;   ///< all detected peaks
  std::vector<double> peak_values;
  double rate = 0.0;       ///< least-squares slope of ln(value) vs time over the fit range
  double frequency = 0.0;  ///< pi / mean spacing over the fit range
  double period = 0.0;     ///< mean spacing over the fit range (measured T_R for recurrence series)
};

/// Local maxima (3-point test, parabolic refinement), optional dominance filter.
void find_peaks(const std::vector<double>& t, const std::vector<double>& y, const PeakOptions& opt,
                std::vector<double>& times, std::vector<double>& values);

PeakFit peak_fit(const std::vector<double>& t, const std::vector<double>& y, const PeakOptions& opt);

/// Fundamental period of a (possibly unevenly sampled) signal: the lag of the first local maximum of its
/// normalized autocorrelation past the first zero crossing that exceeds `threshold`, searched up to `max_lag`. Robust to strong
/// harmonics, which split the maxima that peak spacing relies on. Returns NaN if none is found.
double autocorrelation_period(const std::vector<double>& t, const std::vector<double>& y, double max_lag,
                              double threshold = 0.5);

// ---- BGK scatter -----------------------------------------------------------

struct ScatterPoint {
  double eps;
  double f;
};

/// (v^2/2 - Phi(x), f) at the four quarter points of every cell.
std::vector<ScatterPoint> bgk_scatter(const DGField& f, const ElectricFieldPoly& E);

/// Count-weighted RMS over `bins` equal eps-bins of the within-bin standard deviation of f.
double bgk_spread(const std::vector<ScatterPoint>& pts, int bins = 200);

// ---- CSV -------------------------------------------------------------------

extern const char* const kDiagnosticsHeader;
void write_diagnostics_header(std::ostream& out);
void write_diagnostics_row(std::ostream& out, const DiagnosticsRecord& r);
void write_bgk_csv(std::ostream& out, const std::vector<ScatterPoint>& pts);

}  // namespace vpdg
