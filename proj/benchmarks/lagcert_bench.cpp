#include <benchmark/benchmark.h>

#include <random>

#include "lagcert/certify.hpp"
#include "lagcert/fp_poly.hpp"
#include "lagcert/oracle.hpp"
#include "lagcert/polygon.hpp"
#include "lagcert/tables.hpp"

namespace {

using namespace lagcert;

const IntPoly& phi17() {
  static const IntPoly phi = parse_poly("x^2 - x + 17");
  return phi;
}

const IntPoly& phi53() {
  static const IntPoly phi = construct_phi(2, 53);
  return phi;
}

LaguerreInstance ones(std::int64_t m, std::int64_t u, const IntPoly& phi) {
  InstanceParams p;
  p.m = m;
  p.u = u;
  p.a_parts.assign(static_cast<std::size_t>(m), IntPoly{1});
  p.phi = phi;
  return build_instance(p);
}

void BM_PhiExpand(benchmark::State& state) {
  const LaguerreInstance inst = ones(state.range(0), 0, phi53());
  for (auto _ : state) benchmark::DoNotOptimize(phi_expand(inst.scaled_f(), phi53()));
}
BENCHMARK(BM_PhiExpand)->Arg(10)->Arg(25)->Arg(50);

void BM_BuildPolygon(benchmark::State& state) {
  const LaguerreInstance inst = ones(state.range(0), 3, phi53());
  const PhiExpansion model = monic_model(inst);
  for (auto _ : state) benchmark::DoNotOptimize(build_polygon(model, 7));
}
BENCHMARK(BM_BuildPolygon)->Arg(10)->Arg(50);

void BM_LowerHullRandom(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::vector<PolygonPoint> pts;
  for (std::int64_t i = 0; i < state.range(0); ++i) pts.push_back({i, static_cast<std::int64_t>(rng() % 64)});
  for (auto _ : state) benchmark::DoNotOptimize(lower_hull(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LowerHullRandom)->Range(16, 4096)->Complexity(benchmark::oN);

void BM_CertifyGrid(benchmark::State& state) {
  for (auto _ : state) {
    for (std::int64_t m : {3, 5, 7, 8, 9, 10, 11, 12}) {
      for (std::int64_t u = 0; u <= 4; ++u) benchmark::DoNotOptimize(certify(ones(m, u, phi17())));
    }
  }
}
BENCHMARK(BM_CertifyGrid)->Unit(benchmark::kMillisecond);

void BM_CertifyLarge(benchmark::State& state) {
  const LaguerreInstance inst = ones(state.range(0), 2, phi53());
  for (auto _ : state) benchmark::DoNotOptimize(certify(inst));
}
BENCHMARK(BM_CertifyLarge)->Arg(20)->Arg(51)->Unit(benchmark::kMillisecond);

void BM_VerifyCertificate(benchmark::State& state) {
  const LaguerreInstance inst = ones(40, 4, phi53());
  const Certificate cert = std::get<Certificate>(certify(inst));
  for (auto _ : state) benchmark::DoNotOptimize(verify_certificate(cert, inst));
}
BENCHMARK(BM_VerifyCertificate)->Unit(benchmark::kMillisecond);

void BM_OracleVerdict(benchmark::State& state) {
  const LaguerreInstance inst = ones(state.range(0), 1, phi17());
  for (auto _ : state) benchmark::DoNotOptimize(oracle_verdict(inst));
}
BENCHMARK(BM_OracleVerdict)->Arg(5)->Arg(10)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_FactorModP(benchmark::State& state) {
  const FpPoly f = reduce_mod_p(ones(10, 1, phi17()).scaled_f(), 1009);
  for (auto _ : state) benchmark::DoNotOptimize(factor_squarefree(f));
}
BENCHMARK(BM_FactorModP)->Unit(benchmark::kMicrosecond);

void BM_StSets(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compute_S_sets(state.range(0)));
}
BENCHMARK(BM_StSets)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_ExpEquations(benchmark::State& state) {
  for (auto _ : state) {
    for (int e = 1; e <= 6; ++e) benchmark::DoNotOptimize(solve_exp_equation(static_cast<ExpEquation>(e), state.range(0)));
  }
}
BENCHMARK(BM_ExpEquations)->Arg(30)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
