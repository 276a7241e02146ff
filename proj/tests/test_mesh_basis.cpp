#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

#include "vpdg/basis.hpp"
#include "vpdg/mesh.hpp"
#include "vpdg/quadrature.hpp"
#include "vpdg/recurrence.hpp"

using namespace vpdg;

TEST_CASE("mesh spacing for the advection setups") {
  const Mesh m = build_mesh(40, 40, 4 * std::numbers::pi, 5);
  CHECK(m.dx == doctest::Approx(std::numbers::pi / 10).epsilon(1e-15));
  CHECK(m.dv == doctest::Approx(0.25).epsilon(1e-15));
  const Mesh l = build_mesh(40, 40, 4 * std::numbers::pi, 30);
  CHECK(l.dv == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("smallest legal mesh") {
  const Mesh m = build_mesh(1, 2, 1, 1);
  CHECK(m.x_edges == std::vector<double>{0.0, 1.0});
  CHECK(m.v_edges == std::vector<double>{-1.0, 0.0, 1.0});
  CHECK(m.v_centers == std::vector<double>{-0.5, 0.5});
}

TEST_CASE("mesh invariants") {
  const Mesh m = build_mesh(7, 12, 3.0, 2.5);
  CHECK(m.x_edges.front() == 0.0);
  CHECK(m.x_edges.back() == 3.0);
  CHECK(m.v_edges.front() == -2.5);
  CHECK(m.v_edges.back() == 2.5);
  for (int j = 0; j < m.Nv; ++j) {
    // 1-based center formula (j - (Nv+1)/2) dv
    CHECK(m.v_centers[j] == doctest::Approx((j + 1 - (m.Nv + 1) / 2.0) * m.dv).epsilon(1e-14));
    // each cell is single-signed
    CHECK(m.v_edges[j] * m.v_edges[j + 1] >= 0.0);
  }
  CHECK(m.v_centers[m.Nv / 2] == doctest::Approx(m.dv / 2));
}

TEST_CASE("mesh rejects bad input") {
  CHECK_THROWS_WITH_AS(build_mesh(4, 41, 1, 1), "nv must be even", std::invalid_argument);
  CHECK_THROWS_AS(build_mesh(0, 4, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_mesh(4, 4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_mesh(4, 4, 1, -1), std::invalid_argument);
}

TEST_CASE("point ownership uses the left/bottom cell on edges") {
  const Mesh m = build_mesh(4, 4, 4.0, 2.0);
  CHECK(m.x_cell(1.0) == 0);
  CHECK(m.x_cell(0.0) == 0);
  CHECK(m.x_cell(4.0) == 3);
  CHECK(m.v_cell(0.0) == 1);
  CHECK(m.v_cell(-2.0) == 0);
  CHECK_THROWS_AS(m.x_cell(4.01), std::out_of_range);
  CHECK_THROWS_AS(m.v_cell(-2.5), std::out_of_range);
}

TEST_CASE("quadrature trivial rules") {
  const auto g1 = quadrature(QuadratureKind::Gauss, 1);
  REQUIRE(g1.size() == 1);
  CHECK(g1.nodes[0] == doctest::Approx(0.0));
  CHECK(g1.weights[0] == doctest::Approx(1.0));
  const auto l2 = quadrature(QuadratureKind::GaussLobatto, 2);
  REQUIRE(l2.size() == 2);
  CHECK(l2.nodes[0] == doctest::Approx(-0.5));
  CHECK(l2.nodes[1] == doctest::Approx(0.5));
  CHECK(l2.weights[0] == doctest::Approx(0.5));
  CHECK(l2.weights[1] == doctest::Approx(0.5));
}

TEST_CASE("Gauss 3 integrates xi^4 exactly") {
  const auto g = quadrature(QuadratureKind::Gauss, 3);
  double s = 0.0;
  for (std::size_t k = 0; k < g.size(); ++k) s += g.weights[k] * std::pow(g.nodes[k], 4);
  CHECK(s == doctest::Approx(1.0 / 80).epsilon(1e-14));
}

TEST_CASE("quadrature exactness and weight sums") {
  for (int n = 1; n <= 20; ++n) {
    for (auto kind : {QuadratureKind::Gauss, QuadratureKind::GaussLobatto}) {
      if (kind == QuadratureKind::GaussLobatto && n < 2) continue;
      const auto q = quadrature(kind, n);
      double w = 0.0;
      for (double x : q.weights) w += x;
      CHECK(std::abs(w - 1.0) < 1e-15 * n);
      const int exact = kind == QuadratureKind::Gauss ? 2 * n - 1 : 2 * n - 3;
      for (int d = 0; d <= exact; ++d) {
        double s = 0.0;
        for (std::size_t k = 0; k < q.size(); ++k) s += q.weights[k] * std::pow(q.nodes[k], d);
        const double ref = d % 2 ? 0.0 : std::pow(0.5, d) / (d + 1);
        CHECK(std::abs(s - ref) <= 1e-14 * std::max(ref, 1e-2));
      }
      if (kind == QuadratureKind::GaussLobatto) {
        CHECK(q.nodes.front() == -0.5);
        CHECK(q.nodes.back() == 0.5);
      }
    }
  }
  CHECK_THROWS_AS(quadrature(QuadratureKind::Gauss, 0), std::invalid_argument);
  CHECK_THROWS_AS(quadrature(QuadratureKind::GaussLobatto, 1), std::invalid_argument);
  CHECK_THROWS_AS(quadrature(QuadratureKind::Gauss, kMaxQuadraturePoints + 1), std::invalid_argument);
}

TEST_CASE("basis dimensions") {
  for (int l = 0; l <= 3; ++l) {
    CHECK(BasisSpec(Family::TensorQ, l).dim() == (l + 1) * (l + 1));
    CHECK(BasisSpec(Family::TotalDegreeP, l).dim() == (l + 1) * (l + 2) / 2);
    if (l >= 1) CHECK(basis_dimension(Family::TotalDegreeP, l) < basis_dimension(Family::TensorQ, l));
  }
  CHECK_THROWS_AS(BasisSpec(Family::TensorQ, 4), std::invalid_argument);
}

TEST_CASE("P modes are a prefix of Q modes") {
  for (int l = 0; l <= 3; ++l) {
    const BasisSpec p(Family::TotalDegreeP, l), q(Family::TensorQ, l);
    for (int a = 0; a < p.dim(); ++a) {
      CHECK(p.mode(a).px == q.mode(a).px);
      CHECK(p.mode(a).pv == q.mode(a).pv);
    }
  }
}

TEST_CASE("mode 0 is the constant one") {
  const BasisSpec s(Family::TensorQ, 3);
  for (double xi : {-0.5, -0.1, 0.3, 0.5})
    for (double eta : {-0.5, 0.0, 0.45}) CHECK(basis_eval(s, 0, xi, eta) == 1.0);
  CHECK_THROWS_AS(basis_eval(s, s.dim(), 0, 0), std::out_of_range);
  CHECK_THROWS_AS(basis_eval(s, -1, 0, 0), std::out_of_range);
}

TEST_CASE("Gram matrix is the identity") {
  for (auto fam : {Family::TensorQ, Family::TotalDegreeP}) {
    for (int l = 0; l <= 3; ++l) {
      const BasisSpec s(fam, l);
      const auto q = quadrature(QuadratureKind::Gauss, l + 2);
      for (int a = 0; a < s.dim(); ++a)
        for (int b = 0; b < s.dim(); ++b) {
          double g = 0.0;
          for (std::size_t i = 0; i < q.size(); ++i)
            for (std::size_t j = 0; j < q.size(); ++j)
              g += q.weights[i] * q.weights[j] * basis_eval(s, a, q.nodes[i], q.nodes[j]) *
                   basis_eval(s, b, q.nodes[i], q.nodes[j]);
          CHECK(std::abs(g - (a == b ? 1.0 : 0.0)) < 1e-13);
        }
    }
  }
}

TEST_CASE("Legendre derivative and monomial forms agree with values") {
  for (int p = 0; p <= 3; ++p) {
    const auto mono = legendre_monomial(p);
    for (double xi : {-0.5, -0.2, 0.1, 0.5}) {
      double v = 0.0;
      for (std::size_t k = 0; k < mono.size(); ++k) v += mono[k] * std::pow(xi, k);
      CHECK(v == doctest::Approx(legendre(p, xi)).epsilon(1e-13));
      const double h = 1e-6;
      const double fd = (legendre(p, xi + h) - legendre(p, xi - h)) / (2 * h);
      CHECK(legendre_derivative(p, xi) == doctest::Approx(fd).epsilon(1e-7));
    }
  }
}

TEST_CASE("Q1 spans the quarter-point cardinal functions") {
  const Eigen::Matrix4d P = q1_point_matrix();
  const double cond = P.jacobiSvd().singularValues()(0) / P.jacobiSvd().singularValues()(3);
  CHECK(std::isfinite(cond));
  CHECK(cond < 100.0);
}

TEST_CASE("parse_basis") {
  CHECK(parse_basis("q2") == BasisSpec(Family::TensorQ, 2));
  CHECK(parse_basis("P1") == BasisSpec(Family::TotalDegreeP, 1));
  CHECK(parse_basis("p0").name() == "P0");
  CHECK_THROWS_AS(parse_basis("r1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_basis("q"), std::invalid_argument);
  CHECK_THROWS_AS(parse_basis("q7"), std::invalid_argument);
}
