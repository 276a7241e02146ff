#include <doctest.h>

#include <cmath>
#include <random>

#include "vpdg/limiter.hpp"

using namespace vpdg;

TEST_CASE("point set size and location") {
  for (int l = 1; l <= 3; ++l) {
    const LimiterPointSet s = limiter_points(l);
    CHECK(s.size() == static_cast<std::size_t>(2 * (l + 1) * (l + 1)));
    for (std::size_t k = 0; k < s.size(); ++k) {
      CHECK(std::abs(s.xi[k]) <= 0.5);
      CHECK(std::abs(s.eta[k]) <= 0.5);
    }
  }
  CHECK(limiter_points(0).size() == 0);
}

TEST_CASE("nonnegative cell is left unchanged") {
  const Mesh m = build_mesh(1, 2, 1.0, 1.0);
  DGField f(m, BasisSpec(Family::TensorQ, 2));
  f.cell(0, 0)[0] = 1.0;
  f.cell(0, 0)[1] = 0.1;
  f.cell(0, 0)[4] = -0.05;
  const DGField before = f;
  PositivityLimiter lim(f.spec());
  CHECK(lim.theta(f.cell(0, 0)) == 1.0);
  const LimiterStats st = lim.apply(f);
  CHECK(st.cells_limited == 0);
  CHECK(f.coeffs() == before.coeffs());
}

TEST_CASE("Q1 cell with average 1 and minimum -1") {
  // f = 1 + a L1(xi): minimum over S at xi = -1/2 (Lobatto in x) equals 1 - a sqrt(3), set to -1.
  const BasisSpec q1(Family::TensorQ, 1);
  PositivityLimiter lim(q1);
  double c[4] = {1.0, 2.0 / std::sqrt(3.0), 0.0, 0.0};
  CHECK(lim.min_on_points(c) == doctest::Approx(-1.0).epsilon(1e-14));
  const double th = lim.theta(c);
  CHECK(th == doctest::Approx(0.5).epsilon(1e-14));
  const Mesh m = build_mesh(1, 2, 1.0, 1.0);
  DGField f(m, q1);
  std::copy(c, c + 4, f.cell(0, 1));
  lim.apply(f);
  CHECK(f.cell(0, 1)[0] == 1.0);
  CHECK(std::abs(f.eval_local(0, 1, -0.5, 0.0)) < 1e-14);
}

TEST_CASE("zero average with negative values flattens the cell") {
  const BasisSpec p2(Family::TotalDegreeP, 2);
  PositivityLimiter lim(p2);
  double c[6] = {0.0, 0.3, -0.2, 0.1, 0.05, 0.0};
  CHECK(lim.theta(c) == 0.0);
}

TEST_CASE("randomized limiter properties") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> u(-1, 1);
  for (auto fam : {Family::TensorQ, Family::TotalDegreeP}) {
    const BasisSpec s(fam, 2);
    const Mesh m = build_mesh(10, 20, 1.0, 1.0);  // 200 cells
    DGField f(m, s);
    for (double& c : f.coeffs()) c = u(rng);
    for (int i = 0; i < m.Nx; ++i)
      for (int j = 0; j < m.Nv; ++j) f.cell(i, j)[0] = std::abs(f.cell(i, j)[0]) * 0.5;
    const DGField before = f;
    PositivityLimiter lim(s);
    const LimiterStats st = lim.apply(f);
    CHECK(st.negative_averages == 0);
    CHECK(st.cells_limited > 0);
    for (int i = 0; i < m.Nx; ++i)
      for (int j = 0; j < m.Nv; ++j) {
        CHECK(std::abs(f.cell_average(i, j) - before.cell_average(i, j)) <= 1e-14);
        CHECK(lim.min_on_points(f.cell(i, j)) >= -1e-14);
      }
    DGField twice = f;
    lim.apply(twice);
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) CHECK(std::abs(twice.coeffs()[k] - f.coeffs()[k]) < 1e-13);
  }
}

TEST_CASE("negative averages are counted and flattened") {
  const Mesh m = build_mesh(1, 2, 1.0, 1.0);
  DGField f(m, BasisSpec(Family::TensorQ, 1));
  f.cell(0, 0)[0] = -0.1;
  f.cell(0, 0)[1] = 0.2;
  LimiterStats st;
  const DGField g = apply_positivity(f, &st);
  CHECK(st.negative_averages == 1);
  CHECK(g.cell(0, 0)[0] == -0.1);
  CHECK(g.cell(0, 0)[1] == 0.0);
}
