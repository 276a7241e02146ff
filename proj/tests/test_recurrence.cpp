#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "vpdg/integrator.hpp"
#include "vpdg/recurrence.hpp"

using namespace vpdg;

namespace {
const double kPi = std::numbers::pi;

// Pairs every value in a with a distinct value in b and returns the largest distance.
double multiset_distance(std::vector<cplx> a, std::vector<cplx> b) {
  double worst = 0.0;
  for (const cplx& x : a) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < b.size(); ++k)
      if (std::abs(b[k] - x) < std::abs(b[best] - x)) best = k;
    worst = std::max(worst, std::abs(b[best] - x));
    b.erase(b.begin() + static_cast<long>(best));
  }
  return worst;
}
}  // namespace

TEST_CASE("P0 rates") {
  CHECK(s_j_p0(0.0, 0.5, 0.1) == cplx(0.0, 0.0));
  for (double v = -3; v <= 3; v += 0.37) CHECK(s_j_p0(v, 0.5, kPi / 10).real() <= 0.0);
  CHECK(s_j_p0(0.125, 0.5, kPi / 10).real() == doctest::Approx(-0.004898).epsilon(1e-3));

  const P0Envelope mx = p0_envelope(0.5, kPi / 10, 0.25, 5.0);
  CHECK(mx.T_R == doctest::Approx(50.47).epsilon(1e-4));
  CHECK(mx.rate_min == doctest::Approx(-0.49e-2).epsilon(1e-2));
  CHECK(mx.rate_max == doctest::Approx(-9.3e-2).epsilon(1e-2));
  const P0Envelope lz = p0_envelope(0.5, kPi / 10, 1.5, 30.0);
  CHECK(lz.T_R == doctest::Approx(8.41).epsilon(1e-3));
  CHECK(lz.rate_min == doctest::Approx(-2.94e-2).epsilon(1e-2));
  CHECK(lz.rate_max == doctest::Approx(-5.58e-1).epsilon(1e-2));

  const ModeParams fine = mode_params(0.5, 1e-6, 0.25);
  CHECK(fine.k_prime == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(fine.T_R == doctest::Approx(2 * kPi / (0.5 * 0.25)).epsilon(1e-10));
}

TEST_CASE("Q1 block entries") {
  for (int m : {1, 3, 5, 7}) {
    const Q1Blocks b = q1_blocks(m, 0.5, kPi / 10, 0.25);
    CHECK(b.S(0, 0) == doctest::Approx(-49.0 / 96 - 7.0 * m / 8).epsilon(1e-14));
    CHECK(b.T(0, 2) == doctest::Approx(35.0 / 32 + 15.0 * m / 8).epsilon(1e-14));
    CHECK(b.S(3, 1) == doctest::Approx(-77.0 / 96 + 11.0 * m / 8).epsilon(1e-14));
    CHECK(std::abs(b.S.trace() + 4.0 * m) < 1e-13);
  }
  CHECK_THROWS_AS(q1_blocks(2, 0.5, 0.1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(q1_blocks(-1, 0.5, 0.1, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(q1_blocks(0, 0.5, 0.1, 0.1), std::invalid_argument);
}

TEST_CASE("Kronecker factorization and closed-form spectrum") {
  for (int m : {1, 3, 5, 7})
    for (double kdx : {0.05, kPi / 20, 0.157, 0.3}) {
      const double k = 0.5, dx = kdx / k, dv = 0.25;
      const Q1Blocks b = q1_blocks(m, k, dx, dv);
      CHECK((b.Lambda - b.kron()).cwiseAbs().maxCoeff() < 1e-13);

      Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(b.Lambda);
      const AmplificationSpectrum sp = q1_spectrum(m, k, dx, dv);
      std::vector<cplx> direct(es.eigenvalues().data(), es.eigenvalues().data() + 4);
      CHECK(multiset_distance(std::vector<cplx>(sp.xi.begin(), sp.xi.end()), direct) < 1e-11);
      for (int a = 0; a < 4; ++a) {
        CHECK(std::abs(sp.eta[a] - sp.xi[a] * dv / dx) < 1e-12 * std::abs(sp.eta[a]) + 1e-15);
        CHECK(sp.eta[a].real() <= 1e-14);
      }
      CHECK((sp.G - b.G).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("small-mesh expansions of lambda") {
  const double k = 1.0, dx = 1e-3;
  const AmplificationSpectrum sp = q1_spectrum(1, k, dx, 0.1);
  const cplx i(0, 1);
  const cplx l1 = i * k * dx / 6.0 - k * k * dx * dx / 12.0;
  const cplx l2m1 = -i * k * dx / 2.0;
  CHECK(std::abs(sp.lambda1 - l1) < 1e-2 * std::abs(l1));
  CHECK(std::abs((sp.lambda2 - 1.0) - l2m1) < 1e-2 * std::abs(l2m1));
}

TEST_CASE("W spectrum and eigenvector independence from m") {
  for (int m : {1, 3, 5}) {
    const Q1Blocks b = q1_blocks(m, 0.5, 0.2, 0.25);
    Eigen::EigenSolver<Eigen::Matrix2d> es(b.W);
    std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + 2);
    CHECK(multiset_distance(ev, {cplx(-3.0 * m - std::sqrt(3.0)), cplx(-3.0 * m + std::sqrt(3.0))}) < 1e-12);
  }
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> e1(q1_blocks(1, 0.5, 0.2, 0.25).Lambda);
  Eigen::ComplexEigenSolver<Eigen::Matrix4cd> e5(q1_blocks(5, 0.5, 0.2, 0.25).Lambda);
  for (int a = 0; a < 4; ++a) {
    const Eigen::Vector4cd u = e1.eigenvectors().col(a).normalized();
    double best = 0.0;
    for (int c = 0; c < 4; ++c) best = std::max(best, std::abs(u.dot(e5.eigenvectors().col(c).normalized())));
    CHECK(best > 1.0 - 1e-10);
  }
}

TEST_CASE("modal amplification matrix agrees with the point form") {
  const Scenario sc = make_scenario("advection_maxwellian");
  const Mesh mesh = build_mesh(40, 40, sc.length, sc.vc);
  const VlasovOperator op(mesh, BasisSpec(Family::TensorQ, 1));
  const Eigen::Matrix4d P = q1_point_matrix();
  for (int j = mesh.Nv / 2; j < mesh.Nv; j += 5) {
    const int m = 2 * (j + 1) - mesh.Nv - 1;
    const Eigen::MatrixXcd Gm = amplification_matrix(op, j, sc.k);
    const Eigen::Matrix4cd Gp = P.cast<cplx>() * Gm * P.inverse().cast<cplx>();
    const Q1Blocks b = q1_blocks(m, sc.k, mesh.dx, mesh.dv);
    CHECK((Gp - b.G / mesh.dx * 0.0 - b.G).cwiseAbs().maxCoeff() < 1e-10 * b.G.cwiseAbs().maxCoeff());
  }
}

TEST_CASE("single-mode advection matches the semi-discrete solution") {
  const Scenario sc = make_scenario("advection_maxwellian");
  const Mesh mesh = build_mesh(16, 16, sc.length, sc.vc);
  const BasisSpec q1(Family::TensorQ, 1);
  const auto fm = [&](double v) { return sc.equilibrium.value(v); };
  const DGField fc = project([&](double x, double v) { return std::cos(sc.k * x) * fm(v); }, mesh, q1);
  const DGField fs = project([&](double x, double v) { return std::sin(sc.k * x) * fm(v); }, mesh, q1);
  const double q[4][2] = {{-0.25, 0.25}, {-0.25, -0.25}, {0.25, 0.25}, {0.25, -0.25}};

  Stepper st(sc, mesh, q1, false);
  DGField f = fc;
  const double dt = 2e-3, T = 2.0;
  double t = 0.0;
  for (int n = 0; n < static_cast<int>(std::lround(T / dt)); ++n, t += dt) st.step(f, t, dt);

  const cplx ph0 = std::exp(cplx(0, -sc.k * mesh.x_centers[0]));
  double worst = 0.0;
  for (int j = mesh.Nv / 2; j < mesh.Nv; ++j) {
    const int m = 2 * (j + 1) - mesh.Nv - 1;
    Eigen::Vector4cd c0;
    for (int p = 0; p < 4; ++p)
      c0(p) = ph0 * cplx(fc.eval_local(0, j, q[p][0], q[p][1]), fs.eval_local(0, j, q[p][0], q[p][1]));
    const Eigen::Vector4cd cT = q1_mode_solution(m, sc.k, mesh.dx, mesh.dv, c0, T);
    for (int i = 0; i < mesh.Nx; ++i)
      for (int p = 0; p < 4; ++p) {
        const double expect = (std::exp(cplx(0, sc.k * mesh.x_centers[i])) * cT(p)).real();
        worst = std::max(worst, std::abs(f.eval_local(i, j, q[p][0], q[p][1]) - expect));
      }
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("initial quarter-point vector") {
  const Scenario sc = make_scenario("advection_maxwellian");
  const Mesh mesh = build_mesh(40, 40, sc.length, sc.vc);
  const BasisSpec q1(Family::TensorQ, 1);
  const DGField fc = project([&](double x, double v) { return std::cos(sc.k * x) * sc.equilibrium.value(v); }, mesh, q1);
  const DGField fs = project([&](double x, double v) { return std::sin(sc.k * x) * sc.equilibrium.value(v); }, mesh, q1);
  const double q[4][2] = {{-0.25, 0.25}, {-0.25, -0.25}, {0.25, 0.25}, {0.25, -0.25}};
  const int i = 3;
  for (int j = mesh.Nv / 2; j < mesh.Nv; j += 3) {
    const Eigen::Vector4cd u = q1_upsilon(sc.k, mesh.dx, mesh.v_centers[j], mesh.dv, sc.equilibrium);
    const cplx ph = std::exp(cplx(0, sc.k * mesh.x_centers[i]));
    for (int p = 0; p < 4; ++p) {
      const cplx proj(fc.eval_local(i, j, q[p][0], q[p][1]), fs.eval_local(i, j, q[p][0], q[p][1]));
      // Quarter points are not the Gauss points, so agreement is to second order in the cell size.
      CHECK(std::abs(proj - ph * u(p)) < 1e-2 * sc.equilibrium.value(0.0));
    }
  }
}

TEST_CASE("recurrence report csv") {
  RecurrenceReport r;
  r.predicted_tr = 50.0;
  r.measured_tr = 50.1;
  r.rows.push_back({1, {cplx(-1, 2), cplx(-3, 4), cplx(-5, 6), cplx(-7, 8)}});
  std::ostringstream os;
  write_recurrence_csv(os, r);
  const std::string s = os.str();
  CHECK(s.rfind("m,re_eta1,re_eta2,re_eta3,re_eta4,im_eta1,im_eta2,im_eta3,im_eta4,predicted_tr,measured_tr\n", 0) == 0);
  CHECK(s.find("1,-1,-3,-5,-7,2,4,6,8,50,50.1") != std::string::npos);
}

TEST_CASE("predict_vs_measure rejects non-advection scenarios") {
  CHECK_THROWS_AS(predict_vs_measure(make_scenario("landau_linear"), BasisSpec(Family::TensorQ, 1)),
                  std::invalid_argument);
}
