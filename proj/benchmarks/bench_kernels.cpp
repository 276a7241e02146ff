#include <benchmark/benchmark.h>

#include "vpdg/integrator.hpp"

using namespace vpdg;

namespace {

BasisSpec spec_of(int64_t code) { return BasisSpec(code >= 10 ? Family::TotalDegreeP : Family::TensorQ, code % 10); }

struct Setup {
  Scenario sc = make_scenario("landau_nonlinear");
  Mesh mesh;
  BasisSpec spec;
  DGField f;
  Setup(int nx, int nv, const BasisSpec& s)
      : mesh(build_mesh(nx, nv, sc.length, sc.vc)),
        spec(s),
        f(project([this](double x, double v) { return sc.initial(x, v); }, mesh, s)) {}
};

// Range: {nx, basis code}; basis code is the degree, plus 10 for the total-degree family.
void BM_Rhs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Setup s(n, 2 * n, spec_of(state.range(1)));
  const Stepper st(s.sc, s.mesh, s.spec, false);
  DGField out = s.f;
  for (auto _ : state) {
    st.rhs(s.f, 0.0, out);
    benchmark::DoNotOptimize(out.coeffs().data());
  }
  state.SetItemsProcessed(state.iterations() * n * 2 * n);
}
BENCHMARK(BM_Rhs)->ArgsProduct({{50, 100}, {1, 2, 12, 3}})->Unit(benchmark::kMicrosecond);

void BM_Poisson(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Setup s(n, 2 * n, spec_of(state.range(1)));
  const DensityPoly rho = density(s.f);
  for (auto _ : state) {
    ElectricFieldPoly E = solve_nonlinear(rho);
    benchmark::DoNotOptimize(E);
  }
}
BENCHMARK(BM_Poisson)->ArgsProduct({{100, 400}, {2}})->Unit(benchmark::kMicrosecond);

void BM_Limiter(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Setup s(n, 2 * n, spec_of(state.range(1)));
  // Perturb so that a share of the cells actually needs scaling.
  for (std::size_t k = 0; k < s.f.coeffs().size(); ++k)
    if (k % static_cast<std::size_t>(s.spec.dim()) == 1) s.f.coeffs()[k] += 1e-3;
  const PositivityLimiter lim(s.spec);
  for (auto _ : state) {
    DGField g = s.f;
    benchmark::DoNotOptimize(lim.apply(g));
  }
  state.SetItemsProcessed(state.iterations() * n * 2 * n);
}
BENCHMARK(BM_Limiter)->ArgsProduct({{100}, {1, 2, 12}})->Unit(benchmark::kMicrosecond);

void BM_Step(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Setup s(n, 2 * n, spec_of(state.range(1)));
  const Stepper st(s.sc, s.mesh, s.spec, state.range(2) != 0);
  const double dt = st.stable_dt(st.field(s.f), 0.0, 0.3);
  DGField f = s.f;
  double t = 0.0;
  for (auto _ : state) {
    st.step(f, t, dt);
    t += dt;
  }
}
BENCHMARK(BM_Step)->Args({100, 12, 0})->Args({100, 12, 1})->Args({100, 1, 0})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
