#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "vpdg/integrator.hpp"

using namespace vpdg;

namespace {
double l2_distance(const DGField& a, const DGField& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) s += (a.coeffs()[k] - b.coeffs()[k]) * (a.coeffs()[k] - b.coeffs()[k]);
  return std::sqrt(s * a.mesh().dx * a.mesh().dv);
}

DGField evolve(const Stepper& st, DGField f, double T, double dt) {
  const int n = static_cast<int>(std::lround(T / dt));
  for (int k = 0; k < n; ++k) st.step(f, k * dt, dt);
  return f;
}
}  // namespace

TEST_CASE("zero right-hand side leaves the state unchanged") {
  std::vector<double> u = {1.0, -2.0, 3.5};
  const std::vector<double> u0 = u;
  ssp_rk3(u, 0.0, 0.1, [](const std::vector<double>&, double, std::vector<double>& du) {
    std::fill(du.begin(), du.end(), 0.0);
  });
  CHECK(u == u0);
}

TEST_CASE("scalar stability polynomial") {
  for (double z : {-0.1, -1.0, -2.5, 0.3}) {
    const double lam = 2.0, dt = z / lam;
    std::vector<double> u = {1.0};
    ssp_rk3(u, 0.0, dt, [&](const std::vector<double>& y, double, std::vector<double>& du) { du[0] = lam * y[0]; });
    CHECK(u[0] == doctest::Approx(1 + z + z * z / 2 + z * z * z / 6).epsilon(1e-14));
  }
}

TEST_CASE("stage times") {
  std::vector<double> seen;
  std::vector<double> u = {0.0};
  ssp_rk3(u, 2.0, 0.5, [&](const std::vector<double>&, double t, std::vector<double>& du) {
    seen.push_back(t);
    du[0] = t;
  });
  REQUIRE(seen.size() == 3);
  CHECK(seen[0] == 2.0);
  CHECK(seen[1] == 2.5);
  CHECK(seen[2] == 2.25);
  // Simpson's rule on u' = t is exact.
  CHECK(u[0] == doctest::Approx(0.5 * (2.5 * 2.5 - 4.0)).epsilon(1e-14));
}

TEST_CASE("limiter runs after every stage") {
  int calls = 0;
  std::vector<double> u = {1.0};
  ssp_rk3(
      u, 0.0, 0.1, [](const std::vector<double>& y, double, std::vector<double>& du) { du[0] = -y[0]; },
      [&](std::vector<double>&) { ++calls; });
  CHECK(calls == 3);
}

TEST_CASE("P0 step equals chained Euler updates") {
  const Scenario sc = make_scenario("advection_maxwellian");
  const Mesh m = build_mesh(8, 8, sc.length, sc.vc);
  const BasisSpec p0(Family::TensorQ, 0);
  const Stepper st(sc, m, p0, false);
  const DGField f0 = project([&](double x, double v) { return sc.initial(x, v); }, m, p0);
  const double dt = 0.05;
  auto euler = [&](const DGField& u, double t) {
    DGField h(m, p0);
    st.rhs(u, t, h);
    DGField r = u;
    for (std::size_t k = 0; k < r.coeffs().size(); ++k) r.coeffs()[k] += dt * h.coeffs()[k];
    return r;
  };
  const DGField u1 = euler(f0, 0.0);
  DGField u2 = euler(u1, dt);
  for (std::size_t k = 0; k < u2.coeffs().size(); ++k) u2.coeffs()[k] = 0.75 * f0.coeffs()[k] + 0.25 * u2.coeffs()[k];
  DGField u3 = euler(u2, 0.5 * dt);
  for (std::size_t k = 0; k < u3.coeffs().size(); ++k)
    u3.coeffs()[k] = f0.coeffs()[k] / 3.0 + 2.0 / 3.0 * u3.coeffs()[k];
  const DGField g = rk3_step(st, f0, 0.0, dt);
  for (std::size_t k = 0; k < g.coeffs().size(); ++k) CHECK(g.coeffs()[k] == doctest::Approx(u3.coeffs()[k]).epsilon(1e-15));
}

TEST_CASE("zero final time records one row") {
  const Scenario sc = make_scenario("landau_linear");
  StepControl c;
  c.t_end = 0.0;
  const RunResult r = run(sc, build_mesh(8, 8, sc.length, sc.vc), BasisSpec(Family::TensorQ, 1), c);
  CHECK(r.series.size() == 1);
  CHECK(r.steps == 0);
  CHECK(r.t == 0.0);
}

TEST_CASE("diagnostics and snapshot cadence") {
  const Scenario sc = make_scenario("advection_maxwellian");
  StepControl c;
  c.t_end = 2.0;
  c.diag_every = 0.5;
  c.snapshot_times = {0.0, 0.75, 5.0};
  std::vector<double> snaps;
  RunHooks h;
  h.on_snapshot = [&](double t, const DGField&, const ElectricFieldPoly&) { snaps.push_back(t); };
  const RunResult r = run(sc, build_mesh(8, 8, sc.length, sc.vc), BasisSpec(Family::TensorQ, 1), c, h);
  REQUIRE(r.series.size() == 5);
  for (int k = 0; k < 5; ++k) CHECK(r.series[k].t == doctest::Approx(0.5 * k).epsilon(1e-14));
  REQUIRE(snaps.size() == 2);
  CHECK(snaps[1] == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(r.t == 2.0);

  StepControl bad = c;
  bad.cfl = 0.0;
  CHECK_THROWS_AS(run(sc, build_mesh(8, 8, sc.length, sc.vc), BasisSpec(Family::TensorQ, 1), bad), std::invalid_argument);
  bad = c;
  bad.t_end = -1.0;
  CHECK_THROWS_AS(run(sc, build_mesh(8, 8, sc.length, sc.vc), BasisSpec(Family::TensorQ, 1), bad), std::invalid_argument);
}

TEST_CASE("advection conserves charge and dissipates L2") {
  const Scenario sc = make_scenario("advection_maxwellian");
  for (const BasisSpec& s : {BasisSpec(Family::TensorQ, 1), BasisSpec(Family::TotalDegreeP, 2)}) {
    StepControl c;
    c.t_end = 5.0;
    const RunResult r = run(sc, build_mesh(16, 16, sc.length, sc.vc), s, c);
    for (const auto& row : r.series) {
      CHECK(std::abs(row.charge - r.series.front().charge) < 1e-12);
    }
    for (std::size_t k = 1; k < r.series.size(); ++k) CHECK(r.series[k].enstrophy <= r.series[k - 1].enstrophy + 1e-15);
  }
}

TEST_CASE("temporal order") {
  const Scenario sc = make_scenario("landau_nonlinear");
  const Mesh m = build_mesh(8, 16, sc.length, sc.vc);
  const BasisSpec q1(Family::TensorQ, 1);
  const Stepper st(sc, m, q1, false);
  const DGField f0 = project([&](double x, double v) { return sc.initial(x, v); }, m, q1);
  const double T = 0.4;
  const DGField ref = evolve(st, f0, T, 0.0025);
  const double e1 = l2_distance(evolve(st, f0, T, 0.04), ref);
  const double e2 = l2_distance(evolve(st, f0, T, 0.02), ref);
  CHECK(std::log2(e1 / e2) >= 2.7);
}

TEST_CASE("linear Landau produces repeated field maxima") {
  const Scenario sc = make_scenario("landau_linear");
  StepControl c;
  c.t_end = 30.0;
  const RunResult r = run(sc, build_mesh(20, 20, sc.length, sc.vc), BasisSpec(Family::TensorQ, 2), c);
  std::vector<double> t, y;
  for (const auto& row : r.series) {
    t.push_back(row.t);
    y.push_back(row.logfm[0]);
  }
  std::vector<double> pt, pv;
  find_peaks(t, y, {}, pt, pv);
  CHECK(pt.size() >= 8);
  CHECK(pv.back() < pv.front());
}

TEST_CASE("non-finite state is reported") {
  const Scenario sc = make_scenario("advection_maxwellian");
  const Mesh m = build_mesh(4, 4, sc.length, sc.vc);
  const BasisSpec q1(Family::TensorQ, 1);
  const Stepper st(sc, m, q1, false);
  DGField f(m, q1);
  f.cell(1, 1)[0] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(st.step(f, 0.0, 0.01), std::runtime_error);
}

TEST_CASE("limited nonlinear step keeps averages nonnegative") {
  const Scenario sc = make_scenario("two_stream");
  const Mesh m = build_mesh(16, 32, sc.length, sc.vc);
  StepControl c;
  c.t_end = 2.0;
  c.limiter = true;
  const RunResult r = run(sc, m, BasisSpec(Family::TotalDegreeP, 2), c);
  CHECK(r.limiter.negative_averages == 0);
  CHECK(r.limiter.cells_limited > 0);
  const PositivityLimiter lim(r.final_state.spec());
  for (int i = 0; i < m.Nx; ++i)
    for (int j = 0; j < m.Nv; ++j) CHECK(lim.min_on_points(r.final_state.cell(i, j)) >= -1e-13);
}
