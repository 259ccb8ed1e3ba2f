// Serial reference versus OpenMP kernels on the workloads the sessions use.

#include <benchmark/benchmark.h>

#include <random>

#include "schemekit/ideals.hpp"
#include "schemekit/polymatrix.hpp"

using namespace schemekit;

namespace {

RingPtr bench_ring() {
  static const RingPtr ring = Ring::make(CoefficientDomain::Rationals, {"a", "b", "c", "d", "e", "f"});
  return ring;
}

PolyMatrix dense_matrix(std::size_t n, std::size_t m, unsigned seed) {
  const RingPtr R = bench_ring();
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<std::size_t> var(0, R->num_variables() - 1);
  PolyMatrix out(R, n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Polynomial p(R);
      for (int t = 0; t < 3; ++t) {
        p += Polynomial::variable(R, var(rng)) * Polynomial::variable(R, var(rng)) * Polynomial::constant(R, coeff(rng));
      }
      out.set(i, j, p);
    }
  }
  return out;
}

void BM_ExteriorPower(benchmark::State& state, Execution exec) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const PolyMatrix m = dense_matrix(5, 6, 1);
  for (auto _ : state) benchmark::DoNotOptimize(exterior_power(k, m, exec));
}

void BM_NormalForms(benchmark::State& state, Execution exec) {
  const RingPtr R = bench_ring();
  const Ideal i(R, {parse_polynomial(R, "a^2 - b*c"), parse_polynomial(R, "b^2 - c*d"), parse_polynomial(R, "c^2 - d*e"),
                    parse_polynomial(R, "d^2 - e*f")});
  const GroebnerBasis& gb = i.basis();
  const PolyMatrix m = dense_matrix(8, static_cast<std::size_t>(state.range(0)), 2);
  std::vector<Polynomial> polys;
  for (const auto& e : m.entries()) polys.push_back(e * e * e);
  for (auto _ : state) benchmark::DoNotOptimize(normal_forms(polys, gb, exec));
}

}  // namespace

BENCHMARK_CAPTURE(BM_ExteriorPower, serial, Execution::Serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ExteriorPower, parallel, Execution::Parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_NormalForms, serial, Execution::Serial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_NormalForms, parallel, Execution::Parallel)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
