#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vpdg/basis.hpp"
#include "vpdg/scenarios.hpp"
#include "vpdg/vlasov_rhs.hpp"

namespace vpdg {

using cplx = std::complex<double>;

/// Semi-discrete P0 rate of the Fourier mode k in velocity cell v_j.
cplx s_j_p0(double v_j, double k, double dx);

struct ModeParams {
  double k = 0.0;
  double dx = 0.0;
  double dv = 0.0;
  double k_prime = 0.0;  ///< sin(k dx) / dx
  double T_R = 0.0;      ///< 2 pi / (k' dv)
};
ModeParams mode_params(double k, double dx, double dv);

struct P0Envelope {
  double rate_min = 0.0;  ///< slowest damping, from the cells next to v = 0
  double rate_max = 0.0;  ///< fastest damping, from the outermost cells
  double T_R = 0.0;
};
P0Envelope p0_envelope(double k, double dx, double dv, double Vc);

/// Q1 quarter-point blocks for the v > 0 half-plane (m = 2j - Nv - 1, 1-based j).
/// Point ordering: (x-1/4, v+1/4), (x-1/4, v-1/4), (x+1/4, v+1/4), (x+1/4, v-1/4).
struct Q1Blocks {
  Eigen::Matrix4d S;
  Eigen::Matrix4d T;
  Eigen::Matrix4cd Lambda;  ///< S + T e^{-i k dx}
  Eigen::Matrix4cd G;       ///< (dv/dx) Lambda
  Eigen::Matrix2d W;        ///< acts on the v-pair, carries m
  Eigen::Matrix2cd V;       ///< acts on the x-pair, carries e^{-i k dx}
  /// W (x) V in the point ordering above, i.e. V[a][c] W[b][d] at (2a+b, 2c+d).
  Eigen::Matrix4cd kron() const;
};

/// Throws std::invalid_argument for even or non-positive m.
Q1Blocks q1_blocks(int m, double k, double dx, double dv);

struct AmplificationSpectrum {
  int m = 0;
  Eigen::Matrix4cd G;
  std::array<cplx, 4> xi;   ///< eigenvalues of Lambda: (-3m -+ sqrt3) lambda_2, (-3m -+ sqrt3) lambda_1
  std::array<cplx, 4> eta;  ///< xi dv / dx
  cplx lambda1, lambda2;
};

/// Closed-form spectrum. lambda_{1,2} = (3 + h -+ sqrt(9 + 12h + h^2)) / 6, h = e^{-ik dx} - 1,
/// principal square root (lambda_2 -> 1 as dx -> 0).
AmplificationSpectrum q1_spectrum(int m, double k, double dx, double dv);

/// Modal-to-point matrix for Q1: row = quarter point (ordering as above), column = modal index.
Eigen::Matrix4d q1_point_matrix();

/// Exact semi-discrete Q1 evolution of one Fourier mode in a v > 0 cell:
/// sum_alpha a_alpha V_alpha e^{eta_alpha t} with a chosen so the sum equals `upsilon` at t = 0.
Eigen::Vector4cd q1_mode_solution(int m, double k, double dx, double dv, const Eigen::Vector4cd& upsilon, double t);

/// Quarter-point initial vector for A cos(kx) f_eq restricted to the mode e^{ikx_i}.
Eigen::Vector4cd q1_upsilon(double k, double dx, double v_j, double dv, const Equilibrium& eq);

/// Modal amplification matrix of velocity cell j for any space: d c_i/dt = G c_i with c_i ~ e^{i k x_i}.
Eigen::MatrixXcd amplification_matrix(const VlasovOperator& op, int j, double k);

struct RecurrenceReport {
  std::string basis;
  std::string scenario;
  double predicted_tr = 0.0;
  double measured_tr = 0.0;
  double measured_rate = 0.0;
  double relative_error = 0.0;
  int peaks_found = 0;
  bool ok = false;
  std::string message;
  /// Per positive-v cell: m and the four least-damped eta (closed form for Q1, dense eigensolve
  /// otherwise; NaN-padded when the local space has fewer modes).
  std::vector<std::pair<int, std::array<cplx, 4>>> rows;
  std::vector<double> times, rho_max;          ///< the measured series
};

struct RecurrenceOptions {
  int nx = 40;
  int nv = 40;
  double cfl = 0.3;
  double t_end = 0.0;  ///< 0: long enough for the fit range
  int first_peak = 0;  ///< 0: defaults for the basis and equilibrium
  int last_peak = 0;
};

/// Spectral rows, prediction and peak fit for an already measured rho_max series.
/// Peak indices of 0 select the defaults used by predict_vs_measure.
RecurrenceReport recurrence_analysis(const Scenario& scenario, const Mesh& mesh, const BasisSpec& spec,
                                     std::vector<double> times, std::vector<double> rho_max, int first_peak = 0,
                                     int last_peak = 0);

/// Runs the advection scenario and compares the measured recurrence time with the prediction
/// (2 pi / (k' dv) for P0, 2 pi / (k dv) otherwise). Peaks are numbered with the initial maximum as peak 1.
RecurrenceReport predict_vs_measure(const Scenario& scenario, const BasisSpec& spec,
                                    const RecurrenceOptions& opt = {});

/// CSV with header m,re_eta1..4,im_eta1..4,predicted_tr,measured_tr.
void write_recurrence_csv(std::ostream& out, const RecurrenceReport& report);

}  // namespace vpdg
